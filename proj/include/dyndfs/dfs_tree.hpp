#pragma once

#include <span>
#include <vector>

#include "dyndfs/graph.hpp"

namespace dyndfs {

/// Ancestor-descendant tree path: top is an ancestor of bottom.
struct TreePath {
  VertexId top;
  VertexId bottom;
};

struct DfnRange {
  int lo, hi;  // inclusive dfn positions, lo end nearer the path top
};

/// Rooted DFS tree over the dummy root plus every active vertex, with the
/// indexing the query structure and partitioning need: a restricted preorder
/// where each vertex's heaviest child is visited first (so heavy chains and
/// subtrees are both contiguous dfn intervals), depths, and chain heads.
class DfsTree {
 public:
  DfsTree() = default;

  // Standard DFS from the dummy root; component entry points and neighbor
  // scans use ascending vertex id so the tree is reproducible.
  static DfsTree build(const Graph& g);

  // Reindexes an externally produced parent assignment (e.g. a rebuilt tree).
  static DfsTree from_parents(int n_slots, std::span<const VertexId> parent,
                              std::span<const VertexId> vertices);

  bool in_tree(VertexId v) const {
    return v >= 0 && v < static_cast<int>(dfn_.size()) && dfn_[v] >= 0;
  }
  VertexId parent(VertexId v) const { return parent_[v]; }
  int dfn(VertexId v) const { return dfn_[v]; }
  int sub_end(VertexId v) const { return sub_end_[v]; }     // last dfn of T(v)
  int subtree_size(VertexId v) const { return sub_end_[v] - dfn_[v] + 1; }
  int depth(VertexId v) const { return depth_[v]; }
  VertexId heavy_child(VertexId v) const { return heavy_[v]; }
  VertexId chain_head(VertexId v) const { return head_[v]; }
  VertexId vertex_at(int dfn) const { return order_[dfn]; }
  int size() const { return static_cast<int>(order_.size()); }  // includes the root
  const std::vector<VertexId>& preorder() const { return order_; }
  const std::vector<VertexId>& children(VertexId v) const { return children_[v]; }

  bool is_ancestor(VertexId a, VertexId d) const {  // reflexive
    return dfn_[a] <= dfn_[d] && dfn_[d] <= sub_end_[a];
  }
  int dist(VertexId a, VertexId b) const;  // tree distance via lca

  VertexId lca(VertexId x, VertexId y) const;  // throws kDifferentComponents
  // Child of anc whose subtree contains desc (anc must be a proper ancestor).
  VertexId child_toward(VertexId anc, VertexId desc) const;
  VertexId component_root(VertexId v) const;  // depth-1 ancestor

  // Splits path(top,bottom) into per-chain dfn intervals ordered from top.
  std::vector<DfnRange> decompose_path(const TreePath& p) const;

 private:
  void index_from_parents(const std::vector<VertexId>& vertices);

  std::vector<VertexId> parent_;
  std::vector<int> dfn_, sub_end_, depth_;
  std::vector<VertexId> heavy_, head_;
  std::vector<VertexId> order_;
  std::vector<std::vector<VertexId>> children_;
};

}  // namespace dyndfs
