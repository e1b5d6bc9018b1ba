#include <algorithm>

#include "doctest.h"
#include "dyndfs/update.hpp"
#include "fixtures.hpp"

using namespace dyndfs;

namespace {

// Trivial reference: replay raw updates one at a time straight onto a Graph.
Graph replay(const Graph& base, const std::vector<SingleUpdate>& raw) {
  Graph g = base;
  for (const auto& u : raw) {
    switch (u.kind) {
      case UpdateKind::kInsertEdge:
        g.add_edge(u.u, u.v);
        break;
      case UpdateKind::kDeleteEdge:
        g.remove_edge_between(u.u, u.v);
        break;
      case UpdateKind::kInsertVertex:
        g.add_vertex_with_id(u.u);
        for (VertexId n : u.neighbors) g.add_edge(u.u, n);
        break;
      case UpdateKind::kDeleteVertex:
        g.remove_vertex(u.u);
        break;
    }
  }
  return g;
}

bool same_graph(const Graph& a, const Graph& b) {
  if (a.n_active() != b.n_active() || a.m_active() != b.m_active()) return false;
  int slots = std::max(a.n_slots(), b.n_slots());
  for (VertexId v = 1; v <= slots; ++v) {
    if (a.has_vertex(v) != b.has_vertex(v)) return false;
    if (!a.has_vertex(v)) continue;
    for (const auto& he : a.adj(v))
      if (!b.find_edge(v, he.to)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("insert isolated vertex into empty graph") {
  Graph g(0);
  auto batch = normalize_batch(g, std::vector{SingleUpdate::insert_vertex(1, {})});
  Graph out = apply_batch(g, batch);
  CHECK(out.n_active() == 1);
  CHECK(out.m_active() == 0);
  CHECK(out.has_vertex(1));
  CHECK(out.adj(1).empty());
}

TEST_CASE("triangle minus one edge becomes a path") {
  std::vector<std::pair<VertexId, VertexId>> es = {{1, 2}, {2, 3}, {1, 3}};
  Graph g = Graph::from_edges(3, es);
  auto batch = normalize_batch(g, std::vector{SingleUpdate::delete_edge(1, 2)});
  Graph out = apply_batch(g, batch);
  CHECK(out.m_active() == 2);
  CHECK(!out.find_edge(1, 2));
  CHECK(out.find_edge(1, 3));
  CHECK(out.find_edge(2, 3));
}

TEST_CASE("G_A batch: delete vertex 2, insert edge (4,7)") {
  Graph g = testing::make_ga();
  std::vector raw{SingleUpdate::delete_vertex(2), SingleUpdate::insert_edge(4, 7)};
  auto batch = normalize_batch(g, raw);
  Graph fast = apply_batch(g, batch);
  Graph ref = replay(g, raw);
  CHECK(same_graph(fast, ref));
  CHECK(fast.check_invariants());
}

TEST_CASE("normalize: insert-then-delete cancels") {
  Graph g(3);
  std::vector raw{SingleUpdate::insert_edge(1, 2), SingleUpdate::delete_edge(1, 2)};
  auto batch = normalize_batch(g, raw);
  CHECK(batch.empty());
}

TEST_CASE("normalize: edge deletes fold into vertex failure") {
  std::vector<std::pair<VertexId, VertexId>> es = {{5, 6}};
  Graph g = Graph::from_edges(6, es);
  std::vector raw{SingleUpdate::delete_vertex(5), SingleUpdate::delete_edge(5, 6)};
  auto batch = normalize_batch(g, raw);
  CHECK(batch.vertex_fails() == std::vector<VertexId>{5});
  CHECK(batch.edge_fails().empty());
  // and in the other order too
  std::vector raw2{SingleUpdate::delete_edge(5, 6), SingleUpdate::delete_vertex(5)};
  auto batch2 = normalize_batch(g, raw2);
  CHECK(batch2.vertex_fails() == std::vector<VertexId>{5});
  CHECK(batch2.edge_fails().empty());
}

TEST_CASE("normalize: vertex insert keeps only surviving incident edges") {
  Graph g(2);
  std::vector raw{SingleUpdate::insert_vertex(9, {1, 2}), SingleUpdate::delete_edge(9, 2)};
  auto batch = normalize_batch(g, raw);
  REQUIRE(batch.vertex_inserts().size() == 1);
  CHECK(batch.vertex_inserts()[0].v == 9);
  CHECK(batch.vertex_inserts()[0].neighbors == std::vector<VertexId>{1});
  Graph fast = apply_batch(g, batch);
  Graph ref = replay(g, raw);
  CHECK(same_graph(fast, ref));
}

TEST_CASE("normalize rejects deleting a never-present element") {
  Graph g(2);
  CHECK_THROWS_AS(normalize_batch(g, std::vector{SingleUpdate::delete_edge(1, 2)}), Error);
  CHECK_THROWS_AS(normalize_batch(g, std::vector{SingleUpdate::delete_vertex(7)}), Error);
  std::vector twice{SingleUpdate::delete_vertex(1), SingleUpdate::delete_vertex(1)};
  CHECK_THROWS_AS(normalize_batch(g, twice), Error);
}

TEST_CASE("vertex ids are never reused") {
  Graph g(3);
  std::vector raw{SingleUpdate::delete_vertex(3), SingleUpdate::insert_vertex(3, {})};
  CHECK_THROWS_AS(normalize_batch(g, raw), Error);
}

TEST_CASE("apply_batch rejects bad batches atomically") {
  Graph g = testing::make_ga();
  CHECK_THROWS_AS(g.add_edge(1, 2), Error);   // DuplicateEdge
  CHECK_THROWS_AS(g.add_edge(3, 3), Error);   // SelfLoop
  CHECK_THROWS_AS(g.remove_vertex(99), Error);  // UnknownVertex
}

TEST_CASE("random replay equivalence and symmetry") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = testing::random_graph(12, 20, seed * 7 + 1);
    auto raw = testing::random_raw_updates(g, 6, seed * 13 + 5);
    auto batch = normalize_batch(g, raw);
    Graph fast = apply_batch(g, batch);
    Graph ref = replay(g, raw);
    CHECK(same_graph(fast, ref));
    CHECK(fast.check_invariants());
  }
}
