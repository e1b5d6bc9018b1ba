#include <algorithm>

#include "doctest.h"
#include "dyndfs/static_oracle.hpp"
#include "fixtures.hpp"

using namespace dyndfs;

TEST_CASE("a tree graph verifies against its own tree") {
  std::vector<std::pair<VertexId, VertexId>> es = {{1, 2}, {2, 3}, {2, 4}};
  Graph g = Graph::from_edges(4, es);
  DfsTree t = DfsTree::build(g);
  auto rep = verify_dfs_tree(g, t);
  CHECK(rep.ok());
}

TEST_CASE("G_A verifies; a corrupted tree is caught") {
  Graph g = testing::make_ga();
  DfsTree t = DfsTree::build(g);
  CHECK(verify_dfs_tree(g, t).ok());

  // Swap the parents of 7 and 5: (2,5) and (1,7) stop being tree edges and
  // some graph edge loses ancestor-descendant alignment.
  std::vector<VertexId> parent(9, -1);
  for (VertexId v = 1; v <= 8; ++v) parent[v] = t.parent(v);
  parent[7] = 2;
  parent[5] = 1;
  std::vector<VertexId> vs = g.active_vertices();
  DfsTree bad = DfsTree::from_parents(8, parent, vs);
  auto rep = verify_dfs_tree(g, bad);
  CHECK(!rep.ok());
}

TEST_CASE("verify catches missing coverage and phantom edges") {
  Graph g = testing::make_ga();
  DfsTree t = DfsTree::build(g);
  Graph smaller = g;
  smaller.remove_vertex(8);
  CHECK(!verify_dfs_tree(smaller, t).is_spanning);

  std::vector<VertexId> parent(9, -1);
  for (VertexId v = 1; v <= 8; ++v) parent[v] = t.parent(v);
  parent[8] = 2;  // (2,8) is not a graph edge
  DfsTree phantom = DfsTree::from_parents(8, parent, g.active_vertices());
  CHECK(!verify_dfs_tree(g, phantom).is_spanning);
}

TEST_CASE("brute_query on G_A") {
  Graph g = testing::make_ga();
  DfsTree t = DfsTree::build(g);

  CHECK(!brute_query(g, t, 8, false, 2, 3));  // no edges from 8 to {2,3}

  auto hit = brute_query(g, t, 3, true, 1, 1);  // T(3) against the single vertex 1
  REQUIRE(hit.has_value());
  CHECK(hit->on_path == 1);
  CHECK(hit->other == 4);
  CHECK(hit->dist == 0);

  auto tie = brute_query(g, t, 5, true, 1, 2);  // T(5) -> path(1,2): (2,5) or (2,6)
  REQUIRE(tie.has_value());
  CHECK(tie->on_path == 2);
  CHECK(tie->dist == 1);
  CHECK(tie->other == 5);  // deterministic tie-break by dfn
}

TEST_CASE("articulation points and bridges") {
  std::vector<std::pair<VertexId, VertexId>> path = {{1, 2}, {2, 3}};
  Graph p = Graph::from_edges(3, path);
  auto [arts, bridges] = brute_articulation_bridges(p);
  CHECK(arts == std::vector<VertexId>{2});
  CHECK(bridges.size() == 2);

  std::vector<std::pair<VertexId, VertexId>> tri = {{1, 2}, {2, 3}, {1, 3}};
  Graph t = Graph::from_edges(3, tri);
  auto [arts2, bridges2] = brute_articulation_bridges(t);
  CHECK(arts2.empty());
  CHECK(bridges2.empty());

  Graph ga = testing::make_ga();
  auto [arts3, bridges3] = brute_articulation_bridges(ga);
  // Cycles 1-2-3-4-1 and 2-5-6-2 kill all bridges except the 7,8 tail.
  CHECK(arts3 == std::vector<VertexId>{1, 2, 7});
  std::vector<EdgeId> expect_bridges;
  expect_bridges.push_back(*ga.find_edge(1, 7));
  expect_bridges.push_back(*ga.find_edge(7, 8));
  std::sort(expect_bridges.begin(), expect_bridges.end());
  CHECK(bridges3 == expect_bridges);
}

TEST_CASE("verify_dfs_tree holds for built trees on random graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = testing::random_graph(24, 40, seed + 100);
    DfsTree t = DfsTree::build(g);
    CHECK(verify_dfs_tree(g, t).ok());
  }
}

TEST_CASE("brute high numbers on G_A") {
  Graph g = testing::make_ga();
  DfsTree t = DfsTree::build(g);
  auto high = brute_high(g, t);
  CHECK(high[4] == 1);  // edge (1,4)
  CHECK(high[6] == 2);  // edge (2,6)
  CHECK(high[8] == 7);  // only (7,8)
  CHECK(high[1] == 0);  // component root: virtual root edge
}
