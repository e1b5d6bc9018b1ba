#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "dyndfs/dfs_tree.hpp"
#include "dyndfs/graph.hpp"

namespace dyndfs {

struct EdgeHit {
  EdgeId id;
  VertexId on_path;  // endpoint on the queried path
  VertexId other;    // endpoint in the source (w or T(w))
  int dist;          // dist_T(anchor, on_path)
};

/// Segment tree over the base tree's preorder list; every node carries the
/// sorted collection of edges whose first endpoint is a leaf below it, keyed
/// by the second endpoint's preorder position. Answers nearest-edge-on-path
/// queries for a vertex or a whole subtree and supports edge deletion.
///
/// Entries are tombstoned on deletion behind skip pointers; a node compacts
/// its arrays once tombstones outnumber live entries.
class QueryStructure {
 public:
  QueryStructure() = default;
  QueryStructure(const Graph& g, const DfsTree& t);

  // Nearest edge from w to path(x,y), measured from x. x and y must be in
  // ancestor-descendant relation (either orientation).
  std::optional<EdgeHit> query_vertex(VertexId w, VertexId x, VertexId y) const;
  // Same with source T(w); T(w) must be disjoint from the path.
  std::optional<EdgeHit> query_subtree(VertexId w, VertexId x, VertexId y) const;

  void delete_edge(EdgeId e);  // throws kEdgeNotPresent if not live here
  bool edge_live(EdgeId e) const {
    return e >= 0 && e < static_cast<int>(live_edge_.size()) && live_edge_[e];
  }

  std::int64_t stored_entries() const { return total_live_; }
  std::int64_t tombstones() const { return total_tomb_; }
  std::uint64_t queries_issued() const { return queries_; }
  std::uint64_t probes_issued() const { return probes_; }
  std::uint64_t last_query_probes() const { return last_probes_; }
  void reset_counters() const { queries_ = probes_ = last_probes_ = 0; }

  const DfsTree& base_tree() const { return *tree_; }

  /// Work-sliced construction: advance() consumes up to `units` of work
  /// (one unit per edge entry placed or merged) and reports how much it
  /// actually consumed. take() is valid once done().
  class Builder {
   public:
    Builder(const Graph& g, const DfsTree& t);
    std::uint64_t advance(std::uint64_t units);
    bool done() const { return done_; }
    std::uint64_t total_work() const { return total_work_; }
    std::uint64_t work_done() const { return work_done_; }
    QueryStructure take();

   private:
    std::unique_ptr<QueryStructure> out_;
    std::vector<std::pair<std::int32_t, EdgeId>> pending_;  // leaf entries, sorted
    std::vector<std::int32_t> leaf_of_;                     // leaf position per entry
    std::uint64_t total_work_ = 0, work_done_ = 0;
    size_t stage_pos_ = 0;   // cursor into pending_ (stage 0) or node index (stage 1)
    size_t merge_l_ = 0, merge_r_ = 0;
    int stage_ = 0;
    int level_width_ = 0;
    bool done_ = false;
  };

 private:
  friend class Builder;

  struct NodeSet {
    std::vector<std::int32_t> key;   // sorted by (key, edge id)
    std::vector<EdgeId> eid;
    std::vector<std::uint8_t> dead;
    std::vector<std::int32_t> nxt, prv;  // skip pointers over dead entries
    std::int32_t live = 0, tomb = 0;

    int find_ge(std::int32_t k) const;                   // first index with key >= k
    int next_live(int i) const;                          // >= i
    int prev_live(int i) const;                          // <= i
    std::optional<std::pair<std::int32_t, EdgeId>> min_in(std::int32_t lo, std::int32_t hi) const;
    std::optional<std::pair<std::int32_t, EdgeId>> max_in(std::int32_t lo, std::int32_t hi) const;
    void kill(std::int32_t k, EdgeId e);
    void compact();
  };

  struct Plan {                 // decomposed query path
    std::vector<DfnRange> segs;  // 0-based leaf positions, ordered from anchor
    bool anchor_is_top;
  };

  int pos(VertexId v) const { return tree_->dfn(v) - 1; }
  VertexId vertex_at_pos(int p) const { return tree_->vertex_at(p + 1); }
  Plan plan_path(VertexId x, VertexId y) const;
  void cover(int lo, int hi, std::vector<int>& out) const;  // canonical nodes
  std::optional<EdgeHit> run_query(const std::vector<int>& nodes, VertexId x, VertexId y) const;
  void finish_build();

  const DfsTree* tree_ = nullptr;
  int leaf_count_ = 0;   // active vertices
  int base_ = 1;         // leaves padded to power of two; node i children 2i,2i+1
  std::vector<NodeSet> nodes_;
  std::vector<std::pair<VertexId, VertexId>> edge_ends_;  // endpoint snapshot by edge id
  std::vector<std::uint8_t> live_edge_;
  std::int64_t total_live_ = 0, total_tomb_ = 0;
  mutable std::uint64_t queries_ = 0, probes_ = 0, last_probes_ = 0;
};

}  // namespace dyndfs
