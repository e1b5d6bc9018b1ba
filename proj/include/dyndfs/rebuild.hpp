#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dyndfs/partition.hpp"
#include "dyndfs/query_structure.hpp"

namespace dyndfs {

/// Sparse per-vertex candidate lists built during a rebuild. Entries are
/// consumed front to back; consumed entries are never revisited.
class ReducedAdjacency {
 public:
  explicit ReducedAdjacency(int max_id) : list_(max_id + 1), cursor_(max_id + 1, 0) {}

  void add(VertexId w, VertexId y) {
    list_[w].push_back(y);
    ++total_;
  }
  std::optional<VertexId> consume(VertexId w) {
    if (cursor_[w] == list_[w].size()) return std::nullopt;
    return list_[w][cursor_[w]++];
  }
  std::uint64_t total_added() const { return total_; }

 private:
  std::vector<std::vector<VertexId>> list_;
  std::vector<std::size_t> cursor_;
  std::uint64_t total_ = 0;
};

struct AttachedPath {
  VertexId head;  // entry vertex, nearest the root in the rebuilt tree
  VertexId tail;  // far end of the extracted segment
  bool from_tree;
  bool inserted;  // singleton for an inserted vertex (no base coordinates)
};

struct RebuildTrace {
  std::vector<AttachedPath> paths;
  std::vector<std::int32_t> path_of_vertex;  // index into paths, -1 otherwise
  std::vector<VertexId> orig_tree_root;      // initial-partition tree root, -1 otherwise
  std::uint64_t d_queries = 0;
  std::uint64_t edges_scanned = 0;
  std::uint64_t l_total = 0;
  int paths_from_p = 0;
  int paths_from_t = 0;
  int trees_inserted_total = 0;
  int p_at_construction = 0;
  int p_peak = 0;
  int max_path_reentries = 0;
  int k = 0;
  int base_n_slots = 0;
};

struct RebuildOptions {
  bool audit = false;  // check the partition and both loop invariants as it runs
};

struct RebuildResult {
  DfsTree tree;
  RebuildTrace trace;
};

struct RerootRecord {
  int subtree_size;
  std::uint64_t d_queries;
};

struct SingleUpdateStats {
  std::vector<RerootRecord> reroots;  // one per top-level reroot call
};

/// Rewrites `parent` so the vertices of T(subtree_root) form a DFS tree of
/// their induced subgraph rooted at new_root. parent must start as the base
/// tree's assignment for those vertices. Returns the reroot record.
RerootRecord reroot(const DfsTree& t, const QueryStructure& d, VertexId subtree_root,
                    VertexId new_root, std::vector<VertexId>& parent);

/// The four single-update reductions. Mutates d (failed edges are removed);
/// callers rebuild d per epoch. Returns the new tree over g+upd.
DfsTree apply_single_update(const Graph& g, const DfsTree& t, QueryStructure& d,
                            const SingleUpdate& upd, SingleUpdateStats* stats = nullptr);

/// Batch fault-tolerant rebuild: deletes the batch's failed edges from d,
/// partitions the base tree, and runs the stack traversal over reduced
/// adjacency lists. The result is a DFS tree of g_base+u.
RebuildResult rebuild_batch(const Graph& g_base, const DfsTree& t, QueryStructure& d,
                            const UpdateBatch& u, const RebuildOptions& opt = {});

}  // namespace dyndfs
