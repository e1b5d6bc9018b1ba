#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dyndfs/dfs_tree.hpp"
#include "dyndfs/graph.hpp"

namespace dyndfs {

struct ValidityReport {
  bool is_spanning = false;
  bool components_match = false;
  std::optional<EdgeId> offending_edge;  // neither tree edge nor back edge
  bool ok() const { return is_spanning && components_match && !offending_edge; }
};

/// Checks that t is a DFS tree of g: parent links span exactly the active
/// vertices under the dummy root, every parent link is a real edge (or a
/// virtual root edge), each root child spans one component, and every
/// non-tree edge joins an ancestor-descendant pair.
ValidityReport verify_dfs_tree(const Graph& g, const DfsTree& t);

struct BruteHit {
  EdgeId id;
  VertexId on_path;  // endpoint lying on the queried path
  VertexId other;
  int dist;          // dist_T(anchor, on_path)
};

/// Exhaustive nearest-edge query. Source is a single vertex (subtree=false)
/// or the whole subtree T(w). Returns the edge whose path endpoint is
/// nearest to `anchor` (an endpoint of p); ties by smallest
/// (path-endpoint dfn, other-endpoint dfn).
std::optional<BruteHit> brute_query(const Graph& g, const DfsTree& t, VertexId w, bool subtree,
                                    VertexId anchor, VertexId far_end);

/// Articulation points by deleting each vertex and counting components;
/// bridges by deleting each edge.
std::pair<std::vector<VertexId>, std::vector<EdgeId>> brute_articulation_bridges(const Graph& g);

/// Component labels by flood fill: label[v] = smallest vertex id in v's
/// component, 0 for inactive.
std::vector<VertexId> brute_components(const Graph& g);
int brute_component_count(const Graph& g);

/// Minimum dfn over vertices owning an edge into T*(v), counting the parent
/// tree edge and, for component roots, the virtual root edge (dfn 0).
std::vector<int> brute_high(const Graph& g, const DfsTree& tstar);

/// Pairwise oracles straight from the definitions: x,y biconnected iff
/// connected and no single-vertex deletion outside {x,y} separates them;
/// 2-edge-connected iff connected and no single-edge deletion separates
/// them. Reflexive queries are true.
bool brute_biconnected(const Graph& g, VertexId x, VertexId y);
bool brute_two_edge_connected(const Graph& g, VertexId x, VertexId y);

}  // namespace dyndfs
