#include "dyndfs/graph.hpp"

#include <algorithm>
#include <string>

namespace dyndfs {

Graph::Graph(int n_vertices) {
  active_.assign(n_vertices + 1, 1);
  used_.assign(n_vertices + 1, 1);
  adj_.assign(n_vertices + 1, {});
  active_[0] = used_[0] = 0;
  n_active_ = n_vertices;
}

Graph Graph::from_edges(int n_vertices, std::span<const std::pair<VertexId, VertexId>> edges) {
  Graph g(n_vertices);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::require_vertex(VertexId v) const {
  if (!has_vertex(v)) fail(Errc::kUnknownVertex, "unknown or inactive vertex " + std::to_string(v));
}

void Graph::ensure_slot(VertexId v) {
  if (v >= static_cast<int>(active_.size())) {
    active_.resize(v + 1, 0);
    used_.resize(v + 1, 0);
    adj_.resize(v + 1);
  }
}

VertexId Graph::add_vertex() {
  VertexId v = n_slots() + 1;
  add_vertex_with_id(v);
  return v;
}

void Graph::add_vertex_with_id(VertexId v) {
  if (v < 1) fail(Errc::kUnknownVertex, "vertex ids are positive");
  if (ever_used(v))
    fail(Errc::kDuplicateVertex, "vertex id " + std::to_string(v) + " was already used");
  ensure_slot(v);
  active_[v] = used_[v] = 1;
  ++n_active_;
}

EdgeId Graph::add_edge(VertexId u, VertexId v) {
  if (u == v) fail(Errc::kSelfLoop, "self loop at " + std::to_string(u));
  require_vertex(u);
  require_vertex(v);
  if (find_edge(u, v))
    fail(Errc::kDuplicateEdge,
         "edge (" + std::to_string(u) + "," + std::to_string(v) + ") already present");
  EdgeId e = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v, true});
  adj_[u].push_back({v, e});
  adj_[v].push_back({u, e});
  ++m_active_;
  return e;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) return std::nullopt;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  VertexId want = adj_[u].size() <= adj_[v].size() ? v : u;
  for (const auto& he : a)
    if (he.to == want) return he.id;
  return std::nullopt;
}

void Graph::remove_edge(EdgeId e) {
  if (e < 0 || e >= edge_slots() || !edges_[e].alive)
    fail(Errc::kUnknownEdge, "edge id " + std::to_string(e) + " not live");
  auto drop = [&](VertexId x) {
    auto& a = adj_[x];
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i].id == e) {
        a[i] = a.back();
        a.pop_back();
        return;
      }
    }
  };
  drop(edges_[e].u);
  drop(edges_[e].v);
  edges_[e].alive = false;
  --m_active_;
}

void Graph::remove_edge_between(VertexId u, VertexId v) {
  auto e = find_edge(u, v);
  if (!e)
    fail(Errc::kUnknownEdge,
         "no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  remove_edge(*e);
}

void Graph::remove_vertex(VertexId v) {
  require_vertex(v);
  while (!adj_[v].empty()) remove_edge(adj_[v].back().id);
  active_[v] = 0;
  --n_active_;
}

std::vector<VertexId> Graph::active_vertices() const {
  std::vector<VertexId> out;
  out.reserve(n_active_);
  for (VertexId v = 1; v <= n_slots(); ++v)
    if (active_[v]) out.push_back(v);
  return out;
}

std::vector<EdgeId> Graph::live_edges() const {
  std::vector<EdgeId> out;
  out.reserve(m_active_);
  for (EdgeId e = 0; e < edge_slots(); ++e)
    if (edges_[e].alive) out.push_back(e);
  return out;
}

bool Graph::check_invariants() const {
  int live = 0;
  for (EdgeId e = 0; e < edge_slots(); ++e) {
    const auto& r = edges_[e];
    if (!r.alive) continue;
    ++live;
    if (r.u == r.v) return false;
    if (!has_vertex(r.u) || !has_vertex(r.v)) return false;
    auto count_in = [&](VertexId x, VertexId y) {
      int c = 0;
      for (const auto& he : adj_[x])
        if (he.id == e && he.to == y) ++c;
      return c;
    };
    if (count_in(r.u, r.v) != 1 || count_in(r.v, r.u) != 1) return false;
  }
  if (live != m_active_) return false;
  for (VertexId v = 1; v <= n_slots(); ++v) {
    if (!active_[v] && !adj_[v].empty()) return false;
    // no parallel live edges
    std::vector<VertexId> ns;
    for (const auto& he : adj_[v]) ns.push_back(he.to);
    std::sort(ns.begin(), ns.end());
    if (std::adjacent_find(ns.begin(), ns.end()) != ns.end()) return false;
  }
  return true;
}

}  // namespace dyndfs
