#include "dyndfs/update.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace dyndfs {

namespace {

std::pair<VertexId, VertexId> ordered(VertexId a, VertexId b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

template <typename T>
bool contains(const std::vector<T>& v, const T& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

template <typename T>
void erase_value(std::vector<T>& v, const T& x) {
  v.erase(std::remove(v.begin(), v.end(), x), v.end());
}

}  // namespace

bool UpdateBatch::vertex_failed(VertexId v) const { return contains(vertex_fails_, v); }

bool UpdateBatch::vertex_inserted(VertexId v) const {
  for (const auto& vi : vertex_inserts_)
    if (vi.v == v) return true;
  return false;
}

bool UpdateBatch::present(const Graph& base, VertexId v) const {
  if (vertex_inserted(v)) return true;
  return base.has_vertex(v) && !vertex_failed(v);
}

int UpdateBatch::size() const {
  return static_cast<int>(vertex_fails_.size() + edge_fails_.size() + vertex_inserts_.size() +
                          edge_inserts_.size());
}

std::vector<std::pair<VertexId, VertexId>> UpdateBatch::all_inserted_edges() const {
  std::set<std::pair<VertexId, VertexId>> acc(edge_inserts_.begin(), edge_inserts_.end());
  for (const auto& vi : vertex_inserts_)
    for (VertexId n : vi.neighbors) acc.insert(ordered(vi.v, n));
  return {acc.begin(), acc.end()};
}

void UpdateBatch::fold(const Graph& base, const SingleUpdate& upd) {
  switch (upd.kind) {
    case UpdateKind::kInsertEdge: {
      VertexId u = upd.u, v = upd.v;
      if (u == v) fail(Errc::kSelfLoop, "insert self loop at " + std::to_string(u));
      if (!present(base, u) || !present(base, v))
        fail(Errc::kUnknownVertex, "edge insert references a missing vertex");
      auto e = base.find_edge(u, v);
      bool base_alive = e && !contains(edge_fails_, *e);
      bool pending = contains(edge_inserts_, ordered(u, v));
      for (const auto& vi : vertex_inserts_)
        if ((vi.v == u && contains(vi.neighbors, v)) || (vi.v == v && contains(vi.neighbors, u)))
          pending = true;
      if (base_alive || pending)
        fail(Errc::kDuplicateEdge, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                       ") already present");
      bool iu = vertex_inserted(u), iv = vertex_inserted(v);
      if (!iu && !iv) {
        edge_inserts_.push_back(ordered(u, v));
      } else {
        // Edge rides with the inserted endpoint(s); dedup happens in
        // all_inserted_edges().
        for (auto& vi : vertex_inserts_) {
          if (vi.v == u && iu) vi.neighbors.push_back(v);
          if (vi.v == v && iv) vi.neighbors.push_back(u);
        }
      }
      return;
    }
    case UpdateKind::kDeleteEdge: {
      VertexId u = upd.u, v = upd.v;
      auto pair = ordered(u, v);
      if (contains(edge_inserts_, pair)) {  // insert-then-delete cancels
        erase_value(edge_inserts_, pair);
        return;
      }
      bool rode_with_insert = false;
      for (auto& vi : vertex_inserts_) {
        if (vi.v == u && contains(vi.neighbors, v)) {
          erase_value(vi.neighbors, v);
          rode_with_insert = true;
        } else if (vi.v == v && contains(vi.neighbors, u)) {
          erase_value(vi.neighbors, u);
          rode_with_insert = true;
        }
      }
      if (rode_with_insert) return;
      auto e = base.find_edge(u, v);
      if (e && (vertex_failed(u) || vertex_failed(v)))
        return;  // already folded into the vertex failure
      if (!e || contains(edge_fails_, *e))
        fail(Errc::kConflictingUpdate, "delete of a never-present edge (" + std::to_string(u) +
                                           "," + std::to_string(v) + ")");
      edge_fails_.push_back(*e);
      return;
    }
    case UpdateKind::kDeleteVertex: {
      VertexId u = upd.u;
      if (vertex_inserted(u)) {  // cancel the pending insert and its edges
        vertex_inserts_.erase(
            std::remove_if(vertex_inserts_.begin(), vertex_inserts_.end(),
                           [&](const VertexInsert& vi) { return vi.v == u; }),
            vertex_inserts_.end());
        for (auto& vi : vertex_inserts_) erase_value(vi.neighbors, u);
        return;
      }
      if (!base.has_vertex(u) || vertex_failed(u))
        fail(Errc::kConflictingUpdate, "delete of a never-present vertex " + std::to_string(u));
      vertex_fails_.push_back(u);
      // Fold: edges incident to u are implied by the vertex failure.
      edge_fails_.erase(std::remove_if(edge_fails_.begin(), edge_fails_.end(),
                                       [&](EdgeId e) {
                                         return base.edge(e).u == u || base.edge(e).v == u;
                                       }),
                        edge_fails_.end());
      edge_inserts_.erase(std::remove_if(edge_inserts_.begin(), edge_inserts_.end(),
                                         [&](const auto& p) {
                                           return p.first == u || p.second == u;
                                         }),
                          edge_inserts_.end());
      for (auto& vi : vertex_inserts_) erase_value(vi.neighbors, u);
      return;
    }
    case UpdateKind::kInsertVertex: {
      VertexId u = upd.u;
      if (u < 1) fail(Errc::kUnknownVertex, "vertex ids are positive");
      if (base.ever_used(u) || vertex_inserted(u) || vertex_failed(u))
        fail(Errc::kDuplicateVertex,
             "vertex id " + std::to_string(u) + " is not fresh (ids are never reused)");
      VertexInsert rec{u, {}};
      for (VertexId n : upd.neighbors) {
        if (n == u) fail(Errc::kSelfLoop, "self loop at inserted vertex " + std::to_string(u));
        if (!present(base, n))
          fail(Errc::kUnknownVertex, "inserted vertex references missing neighbor " +
                                         std::to_string(n));
        if (contains(rec.neighbors, n))
          fail(Errc::kDuplicateEdge, "duplicate neighbor in vertex insert");
        rec.neighbors.push_back(n);
      }
      vertex_inserts_.push_back(std::move(rec));
      // Mirror edges to previously inserted vertices into both records.
      for (auto& vi : vertex_inserts_)
        if (vi.v != u && contains(vertex_inserts_.back().neighbors, vi.v))
          vi.neighbors.push_back(u);
      return;
    }
  }
}

void UpdateBatch::canonicalize() {
  std::sort(vertex_fails_.begin(), vertex_fails_.end());
  std::sort(edge_fails_.begin(), edge_fails_.end());
  std::sort(edge_inserts_.begin(), edge_inserts_.end());
  std::sort(vertex_inserts_.begin(), vertex_inserts_.end(),
            [](const VertexInsert& a, const VertexInsert& b) { return a.v < b.v; });
  for (auto& vi : vertex_inserts_) std::sort(vi.neighbors.begin(), vi.neighbors.end());
}

UpdateBatch normalize_batch(const Graph& base, std::span<const SingleUpdate> raw) {
  UpdateBatch b;
  for (const auto& upd : raw) b.fold(base, upd);
  b.canonicalize();
  return b;
}

Graph apply_batch(const Graph& base, const UpdateBatch& u) {
  // Validation happened at fold time; all operations below throw before
  // mutating if the batch was assembled by other means.
  Graph g = base;
  for (EdgeId e : u.edge_fails()) g.remove_edge(e);
  for (VertexId v : u.vertex_fails()) g.remove_vertex(v);
  for (const auto& vi : u.vertex_inserts()) g.add_vertex_with_id(vi.v);
  for (auto [a, b] : u.all_inserted_edges()) g.add_edge(a, b);
  return g;
}

}  // namespace dyndfs
