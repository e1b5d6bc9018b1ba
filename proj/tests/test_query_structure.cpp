#include <random>

#include "doctest.h"
#include "dyndfs/query_structure.hpp"
#include "dyndfs/static_oracle.hpp"
#include "fixtures.hpp"

using namespace dyndfs;

TEST_CASE("edgeless graph stores nothing") {
  Graph g(4);
  DfsTree t = DfsTree::build(g);
  QueryStructure d(g, t);
  CHECK(d.stored_entries() == 0);
}

TEST_CASE("single edge entry count follows the leaf depth") {
  std::vector<std::pair<VertexId, VertexId>> es = {{1, 2}};
  Graph g = Graph::from_edges(2, es);
  DfsTree t = DfsTree::build(g);
  QueryStructure d(g, t);
  // two leaves, one internal level: each orientation stored at 2 nodes
  CHECK(d.stored_entries() == 4);
}

TEST_CASE("G_A entry count stays within the audit bound") {
  Graph g = testing::make_ga();
  DfsTree t = DfsTree::build(g);
  QueryStructure d(g, t);
  CHECK(d.stored_entries() <= 2 * 9 * 4);
  CHECK(d.stored_entries() == 2 * 9 * 4);  // n=8 is a power of two: exact
}

TEST_CASE("golden queries on G_A") {
  Graph g = testing::make_ga();
  DfsTree t = DfsTree::build(g);
  QueryStructure d(g, t);

  CHECK(!d.query_vertex(8, 2, 3).has_value());

  auto a = d.query_vertex(4, 1, 1);
  REQUIRE(a.has_value());
  CHECK(a->on_path == 1);
  CHECK(a->other == 4);

  auto b = d.query_vertex(6, 1, 2);
  REQUIRE(b.has_value());
  CHECK(b->on_path == 2);
  CHECK(b->other == 6);

  CHECK(!d.query_subtree(7, 2, 6).has_value());

  auto c = d.query_subtree(3, 1, 1);
  REQUIRE(c.has_value());
  CHECK(c->id == *g.find_edge(1, 4));

  auto e = d.query_subtree(5, 1, 2);
  REQUIRE(e.has_value());
  CHECK(e->on_path == 2);
  CHECK(e->dist == 1);
}

TEST_CASE("deletion removes edges from every answer") {
  Graph g = testing::make_ga();
  DfsTree t = DfsTree::build(g);
  QueryStructure d(g, t);

  EdgeId e14 = *g.find_edge(1, 4);
  d.delete_edge(e14);
  CHECK(!d.query_subtree(3, 1, 1).has_value());
  CHECK_THROWS_AS(d.delete_edge(e14), Error);

  for (EdgeId e : g.live_edges())
    if (d.edge_live(e)) d.delete_edge(e);
  CHECK(d.stored_entries() == 0);
  for (VertexId w = 1; w <= 8; ++w) CHECK(!d.query_vertex(w, 1, 1).has_value());
}

TEST_CASE("path and precondition errors") {
  Graph g = testing::make_ga();
  DfsTree t = DfsTree::build(g);
  QueryStructure d(g, t);
  CHECK_THROWS_AS(d.query_vertex(4, 7, 6), Error);     // not ancestor-descendant
  CHECK_THROWS_AS(d.query_subtree(2, 3, 4), Error);    // T(2) contains the path
  CHECK_THROWS_AS(d.query_subtree(3, 1, 4), Error);    // path runs through T(3)
}

TEST_CASE("oracle equivalence with interleaved deletions") {
  std::mt19937_64 rng(20240811);
  int queries = 0, deletions = 0;
  while (queries < 4000) {
    int n = 8 + static_cast<int>(rng() % 57);  // up to 64
    Graph g = testing::random_graph(n, n + static_cast<int>(rng() % (3 * n)), rng());
    DfsTree t = DfsTree::build(g);
    QueryStructure d(g, t);
    auto vs = g.active_vertices();
    for (int round = 0; round < 60; ++round) {
      VertexId y = vs[rng() % vs.size()];
      // random ancestor of y as the other endpoint
      std::vector<VertexId> anc;
      for (VertexId a = y; a != kRoot; a = t.parent(a)) anc.push_back(a);
      VertexId x = anc[rng() % anc.size()];
      bool anchor_top = rng() & 1;
      VertexId ax = anchor_top ? x : y, ay = anchor_top ? y : x;
      VertexId w = vs[rng() % vs.size()];
      bool subtree = rng() & 1;
      if (subtree && t.is_ancestor(w, y)) subtree = false;  // keep source off the path
      auto fast = subtree ? d.query_subtree(w, ax, ay) : d.query_vertex(w, ax, ay);
      auto brute = brute_query(g, t, w, subtree, ax, ay);
      ++queries;
      REQUIRE(fast.has_value() == brute.has_value());
      if (fast) {
        CHECK(fast->dist == brute->dist);
        CHECK(d.edge_live(fast->id));
      }
      if (round % 5 == 4 && g.m_active() > 0) {
        auto live = g.live_edges();
        EdgeId e = live[rng() % live.size()];
        d.delete_edge(e);
        g.remove_edge(e);  // keep the brute oracle in sync
        ++deletions;
      }
    }
  }
  CHECK(deletions > 400);
}
