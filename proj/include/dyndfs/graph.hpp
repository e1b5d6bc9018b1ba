#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dyndfs/error.hpp"

namespace dyndfs {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// Vertex id 0 is reserved for the dummy root. It is implicitly adjacent to
// every active vertex; those edges are virtual and never stored anywhere.
inline constexpr VertexId kRoot = 0;

struct HalfEdge {
  VertexId to;
  EdgeId id;
};

struct EdgeRec {
  VertexId u, v;
  bool alive;
  VertexId other(VertexId x) const { return x == u ? v : u; }
};

/// Undirected simple graph with stable 1-based vertex ids and stable edge
/// ids. Deleting a vertex marks it inactive; ids are never reused.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n_vertices);
  static Graph from_edges(int n_vertices, std::span<const std::pair<VertexId, VertexId>> edges);

  VertexId add_vertex();                 // allocates n_slots'+1
  void add_vertex_with_id(VertexId v);   // v must be fresh (> n_slots or never used)
  EdgeId add_edge(VertexId u, VertexId v);
  void remove_edge(EdgeId e);
  void remove_edge_between(VertexId u, VertexId v);
  void remove_vertex(VertexId v);

  bool has_vertex(VertexId v) const { return v >= 1 && v <= n_slots() && active_[v]; }
  bool ever_used(VertexId v) const { return v >= 1 && v <= n_slots() && used_[v]; }
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  int n_slots() const { return static_cast<int>(active_.size()) - 1; }
  int n_active() const { return n_active_; }
  int m_active() const { return m_active_; }
  const std::vector<HalfEdge>& adj(VertexId v) const { return adj_[v]; }
  const EdgeRec& edge(EdgeId e) const { return edges_[e]; }
  int edge_slots() const { return static_cast<int>(edges_.size()); }

  std::vector<VertexId> active_vertices() const;
  std::vector<EdgeId> live_edges() const;

  // Full-scan structural check used by tests: symmetry, no self loops, no
  // parallel live edges, inactive vertices have empty adjacency.
  bool check_invariants() const;

 private:
  void require_vertex(VertexId v) const;
  void ensure_slot(VertexId v);

  std::vector<std::uint8_t> active_{0};  // index 0 unused (dummy root)
  std::vector<std::uint8_t> used_{0};
  std::vector<std::vector<HalfEdge>> adj_{{}};
  std::vector<EdgeRec> edges_;
  int n_active_ = 0;
  int m_active_ = 0;
};

}  // namespace dyndfs
