#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dyndfs/graph.hpp"

namespace dyndfs {

enum class UpdateKind { kInsertEdge, kDeleteEdge, kInsertVertex, kDeleteVertex };

struct SingleUpdate {
  UpdateKind kind;
  VertexId u = 0;
  VertexId v = 0;                    // second endpoint for edge updates
  std::vector<VertexId> neighbors;   // for kInsertVertex

  static SingleUpdate insert_edge(VertexId u, VertexId v) {
    return {UpdateKind::kInsertEdge, u, v, {}};
  }
  static SingleUpdate delete_edge(VertexId u, VertexId v) {
    return {UpdateKind::kDeleteEdge, u, v, {}};
  }
  static SingleUpdate insert_vertex(VertexId u, std::vector<VertexId> ns) {
    return {UpdateKind::kInsertVertex, u, 0, std::move(ns)};
  }
  static SingleUpdate delete_vertex(VertexId u) {
    return {UpdateKind::kDeleteVertex, u, 0, {}};
  }
};

struct VertexInsert {
  VertexId v;
  std::vector<VertexId> neighbors;  // sorted; may reference base or inserted vertices
};

/// Normalized batch U split into failures and insertions. Edges incident to
/// inserted vertices live in the owning VertexInsert record; edge_inserts
/// holds only edges between two base vertices.
class UpdateBatch {
 public:
  UpdateBatch() = default;

  // Folds one more raw update in, validating against `base` plus the batch
  // accumulated so far. Throws and leaves the batch unchanged on error.
  void fold(const Graph& base, const SingleUpdate& upd);

  // Canonical sorted form (call after the last fold).
  void canonicalize();

  int size() const;  // k
  bool empty() const { return size() == 0; }

  bool vertex_failed(VertexId v) const;
  bool vertex_inserted(VertexId v) const;

  // Every inserted edge as an unordered (min,max) pair, deduplicated:
  // standalone edge inserts plus the edges carried by vertex inserts.
  std::vector<std::pair<VertexId, VertexId>> all_inserted_edges() const;

  const std::vector<VertexId>& vertex_fails() const { return vertex_fails_; }
  const std::vector<EdgeId>& edge_fails() const { return edge_fails_; }
  const std::vector<VertexInsert>& vertex_inserts() const { return vertex_inserts_; }
  const std::vector<std::pair<VertexId, VertexId>>& edge_inserts() const { return edge_inserts_; }

 private:
  bool present(const Graph& base, VertexId v) const;  // alive in base+batch

  std::vector<VertexId> vertex_fails_;
  std::vector<EdgeId> edge_fails_;
  std::vector<VertexInsert> vertex_inserts_;
  std::vector<std::pair<VertexId, VertexId>> edge_inserts_;  // stored (min,max)
};

UpdateBatch normalize_batch(const Graph& base, std::span<const SingleUpdate> raw);

/// Materializes G+U. Validates the whole batch before touching the copy, so
/// a throwing batch leaves no partial result behind.
Graph apply_batch(const Graph& base, const UpdateBatch& u);

}  // namespace dyndfs
