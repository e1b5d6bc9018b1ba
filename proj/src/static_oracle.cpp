#include "dyndfs/static_oracle.hpp"

#include <algorithm>

namespace dyndfs {

namespace {

// Flood fill over live edges, skipping one deleted vertex / edge.
std::vector<VertexId> components_skipping(const Graph& g, VertexId dead_v, EdgeId dead_e) {
  std::vector<VertexId> label(g.n_slots() + 1, 0);
  std::vector<VertexId> stack;
  for (VertexId s = 1; s <= g.n_slots(); ++s) {
    if (!g.has_vertex(s) || s == dead_v || label[s]) continue;
    label[s] = s;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (const auto& he : g.adj(v)) {
        if (he.id == dead_e || he.to == dead_v || label[he.to]) continue;
        label[he.to] = s;
        stack.push_back(he.to);
      }
    }
  }
  return label;
}

}  // namespace

std::vector<VertexId> brute_components(const Graph& g) { return components_skipping(g, -1, -1); }

int brute_component_count(const Graph& g) {
  auto label = brute_components(g);
  int count = 0;
  for (VertexId v = 1; v <= g.n_slots(); ++v)
    if (g.has_vertex(v) && label[v] == v) ++count;
  return count;
}

ValidityReport verify_dfs_tree(const Graph& g, const DfsTree& t) {
  ValidityReport rep;
  int covered = 0;
  for (VertexId v = 1; v <= g.n_slots(); ++v) {
    bool active = g.has_vertex(v);
    if (active != t.in_tree(v)) return rep;  // not spanning
    if (!active) continue;
    ++covered;
    VertexId p = t.parent(v);
    if (p == kRoot) continue;  // virtual root edge
    if (!t.in_tree(p) || !g.find_edge(p, v)) return rep;  // phantom tree edge
  }
  if (covered != g.n_active()) return rep;
  rep.is_spanning = true;

  // Each root child must span exactly one graph component.
  auto label = brute_components(g);
  rep.components_match = true;
  for (VertexId v = 1; v <= g.n_slots(); ++v) {
    if (!g.has_vertex(v)) continue;
    VertexId mine = t.component_root(v);
    // Two vertices share a graph component iff they share a root child.
    if (label[v] != label[mine]) rep.components_match = false;
  }
  int root_children = 0;
  for (VertexId v = 1; v <= g.n_slots(); ++v)
    if (g.has_vertex(v) && t.parent(v) == kRoot) ++root_children;
  if (root_children != brute_component_count(g)) rep.components_match = false;

  for (EdgeId e = 0; e < g.edge_slots(); ++e) {
    if (!g.edge(e).alive) continue;
    VertexId u = g.edge(e).u, v = g.edge(e).v;
    if (!t.is_ancestor(u, v) && !t.is_ancestor(v, u)) {
      rep.offending_edge = e;
      break;
    }
  }
  return rep;
}

std::optional<BruteHit> brute_query(const Graph& g, const DfsTree& t, VertexId w, bool subtree,
                                    VertexId anchor, VertexId far_end) {
  TreePath p = t.is_ancestor(anchor, far_end) ? TreePath{anchor, far_end}
                                              : TreePath{far_end, anchor};
  auto on_p = [&](VertexId x) {
    return t.is_ancestor(p.top, x) && t.is_ancestor(x, p.bottom);
  };
  std::optional<BruteHit> best;
  auto consider = [&](EdgeId e, VertexId from, VertexId to) {
    if (!on_p(to)) return;
    int d = std::abs(t.depth(to) - t.depth(anchor));
    if (!best || d < best->dist ||
        (d == best->dist && std::pair{t.dfn(to), t.dfn(from)} <
                                std::pair{t.dfn(best->on_path), t.dfn(best->other)}))
      best = BruteHit{e, to, from, d};
  };
  if (subtree) {
    for (int pos = t.dfn(w); pos <= t.sub_end(w); ++pos) {
      VertexId x = t.vertex_at(pos);
      for (const auto& he : g.adj(x))
        if (!t.is_ancestor(w, he.to)) consider(he.id, x, he.to);
    }
  } else {
    for (const auto& he : g.adj(w)) consider(he.id, w, he.to);
  }
  return best;
}

std::pair<std::vector<VertexId>, std::vector<EdgeId>> brute_articulation_bridges(const Graph& g) {
  int base = brute_component_count(g);
  std::vector<VertexId> arts;
  for (VertexId v = 1; v <= g.n_slots(); ++v) {
    if (!g.has_vertex(v)) continue;
    auto label = components_skipping(g, v, -1);
    int count = 0;
    for (VertexId x = 1; x <= g.n_slots(); ++x)
      if (g.has_vertex(x) && x != v && label[x] == x) ++count;
    if (count > base - (g.adj(v).empty() ? 1 : 0)) arts.push_back(v);
  }
  std::vector<EdgeId> bridges;
  for (EdgeId e = 0; e < g.edge_slots(); ++e) {
    if (!g.edge(e).alive) continue;
    auto label = components_skipping(g, -1, e);
    int count = 0;
    for (VertexId x = 1; x <= g.n_slots(); ++x)
      if (g.has_vertex(x) && label[x] == x) ++count;
    if (count > base) bridges.push_back(e);
  }
  return {arts, bridges};
}

std::vector<int> brute_high(const Graph& g, const DfsTree& tstar) {
  std::vector<int> high(g.n_slots() + 1, -1);
  for (VertexId v = 1; v <= g.n_slots(); ++v) {
    if (!g.has_vertex(v)) continue;
    int best = tstar.dfn(tstar.parent(v));  // tree or virtual root edge
    for (int pos = tstar.dfn(v); pos <= tstar.sub_end(v); ++pos) {
      VertexId x = tstar.vertex_at(pos);
      for (const auto& he : g.adj(x))
        if (!tstar.is_ancestor(v, he.to)) best = std::min(best, tstar.dfn(he.to));
    }
    high[v] = best;
  }
  return high;
}

bool brute_biconnected(const Graph& g, VertexId x, VertexId y) {
  if (!g.has_vertex(x) || !g.has_vertex(y)) fail(Errc::kInactiveVertex, "inactive query vertex");
  if (x == y) return true;
  auto full = brute_components(g);
  if (full[x] != full[y]) return false;
  for (VertexId w = 1; w <= g.n_slots(); ++w) {
    if (!g.has_vertex(w) || w == x || w == y) continue;
    auto label = components_skipping(g, w, -1);
    if (label[x] != label[y]) return false;
  }
  return true;
}

bool brute_two_edge_connected(const Graph& g, VertexId x, VertexId y) {
  if (!g.has_vertex(x) || !g.has_vertex(y)) fail(Errc::kInactiveVertex, "inactive query vertex");
  if (x == y) return true;
  auto full = brute_components(g);
  if (full[x] != full[y]) return false;
  for (EdgeId e = 0; e < g.edge_slots(); ++e) {
    if (!g.edge(e).alive) continue;
    auto label = components_skipping(g, -1, e);
    if (label[x] != label[y]) return false;
  }
  return true;
}

}  // namespace dyndfs
