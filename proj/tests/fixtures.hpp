#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "dyndfs/graph.hpp"
#include "dyndfs/update.hpp"

namespace dyndfs::testing {

// Canonical 8-vertex test graph used across suites. DFS from the root with
// ascending neighbor order yields tree edges (1,2),(2,3),(3,4),(2,5),(5,6),
// (1,7),(7,8) and back edges (1,4),(2,6).
inline Graph make_ga() {
  std::vector<std::pair<VertexId, VertexId>> edges = {
      {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}, {1, 7}, {7, 8}, {1, 4}, {2, 6}};
  return Graph::from_edges(8, edges);
}

// Deterministic random simple graph on n vertices with up to m edges.
inline Graph random_graph(int n, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  int attempts = 0;
  while (g.m_active() < m && attempts < 20 * m + 100) {
    ++attempts;
    VertexId u = static_cast<VertexId>(rng() % n) + 1;
    VertexId v = static_cast<VertexId>(rng() % n) + 1;
    if (u == v || g.find_edge(u, v)) continue;
    g.add_edge(u, v);
  }
  return g;
}

// Random batch of valid raw updates against g (mix of all four kinds).
inline std::vector<SingleUpdate> random_raw_updates(const Graph& base, int count,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph live = base;
  std::vector<SingleUpdate> out;
  while (static_cast<int>(out.size()) < count) {
    int kind = static_cast<int>(rng() % 4);
    if (kind == 0 && live.n_active() >= 2) {  // insert edge
      auto vs = live.active_vertices();
      VertexId u = vs[rng() % vs.size()];
      VertexId v = vs[rng() % vs.size()];
      if (u == v || live.find_edge(u, v)) continue;
      live.add_edge(u, v);
      out.push_back(SingleUpdate::insert_edge(u, v));
    } else if (kind == 1 && live.m_active() > 0) {  // delete edge
      auto es = live.live_edges();
      EdgeId e = es[rng() % es.size()];
      auto rec = live.edge(e);
      live.remove_edge(e);
      out.push_back(SingleUpdate::delete_edge(rec.u, rec.v));
    } else if (kind == 2) {  // insert vertex
      auto vs = live.active_vertices();
      std::vector<VertexId> ns;
      if (!vs.empty()) {
        int deg = static_cast<int>(rng() % 3);
        for (int i = 0; i < deg; ++i) {
          VertexId n = vs[rng() % vs.size()];
          if (std::find(ns.begin(), ns.end(), n) == ns.end()) ns.push_back(n);
        }
      }
      VertexId v = live.n_slots() + 1;
      live.add_vertex_with_id(v);
      for (VertexId n : ns) live.add_edge(v, n);
      out.push_back(SingleUpdate::insert_vertex(v, ns));
    } else if (kind == 3 && live.n_active() > 1) {  // delete vertex
      auto vs = live.active_vertices();
      VertexId v = vs[rng() % vs.size()];
      live.remove_vertex(v);
      out.push_back(SingleUpdate::delete_vertex(v));
    }
  }
  return out;
}

}  // namespace dyndfs::testing
