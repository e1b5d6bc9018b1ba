#pragma once

#include <map>
#include <vector>

#include "dyndfs/dfs_tree.hpp"
#include "dyndfs/update.hpp"

namespace dyndfs {

enum class Membership { kNone, kInTree, kInPath, kVisited };

struct PathRec {
  VertexId top = -1;     // base-tree ancestor end (unused for inserted singletons)
  VertexId bottom = -1;
  VertexId inserted = -1;  // singleton vertex id when this is an inserted-vertex path
  bool alive = false;
  int reentries = 0;       // times the traversal extracted from this path
  bool is_inserted() const { return inserted != -1; }
};

struct ExtractedPath {
  std::vector<VertexId> vertices;  // entry first; entry attaches nearest the root
  bool from_tree;
  bool inserted_singleton;
  std::vector<VertexId> new_tree_roots;  // subtrees hung off the extracted segment
  VertexId head() const { return vertices.front(); }
  VertexId tail() const { return vertices.back(); }
};

/// Evolving pair (P, T): failure-free ancestor-descendant paths and intact
/// base subtrees covering the unvisited survivors. Trees are full base
/// subtrees identified by their roots and looked up through a dfn-interval
/// map; path membership is a flat per-vertex tag.
class Partition {
 public:
  // g_base resolves failed-edge ids to endpoints; throws kBatchTooLarge when
  // the batch exceeds the active vertex count.
  static Partition build(const Graph& g_base, const DfsTree& t, const UpdateBatch& u);

  Membership membership(VertexId v) const;
  VertexId tree_root_of(VertexId v) const;  // requires kInTree
  int path_id_of(VertexId v) const;         // requires kInPath

  ExtractedPath extract_from_tree(VertexId entry);
  ExtractedPath extract_from_path(VertexId entry);

  int path_count() const { return live_paths_; }
  int peak_path_count() const { return peak_paths_; }
  int paths_at_construction() const { return paths_at_construction_; }
  int max_path_reentries() const;
  int tree_count() const { return static_cast<int>(trees_by_dfn_.size()); }
  int unvisited() const { return unvisited_; }

  const std::vector<PathRec>& paths() const { return paths_; }
  std::vector<VertexId> tree_roots() const;

  const DfsTree& base() const { return *base_; }

 private:
  void add_tree(VertexId root);
  void remove_tree(VertexId root);
  int add_path(VertexId top, VertexId bottom, int reentries = 0);
  int add_inserted_singleton(VertexId v);
  void hang_subtrees_off(VertexId bottom, VertexId top, VertexId skip_child,
                         std::vector<VertexId>* collect);
  void process_vertex_failure(VertexId v);
  void process_tree_edge_failure(VertexId parent_end, VertexId child_end);

  const DfsTree* base_ = nullptr;
  std::vector<Membership> state_;
  std::vector<std::int32_t> path_id_;
  std::vector<PathRec> paths_;
  std::map<int, VertexId> trees_by_dfn_;  // dfn(root) -> root, disjoint intervals
  int live_paths_ = 0, peak_paths_ = 0, paths_at_construction_ = 0;
  int unvisited_ = 0;
};

/// Exhaustive Definition-2 checker: every surviving vertex is covered exactly
/// once, paths are failure-free ancestor-descendant base paths, trees are
/// failure-free base subtrees with no live edge between two distinct trees,
/// and |P| never exceeds k.
bool check_partition(const Graph& g_after, const DfsTree& t, const UpdateBatch& u,
                     const Partition& part);

}  // namespace dyndfs
