#include "dyndfs/dfs_tree.hpp"

#include <algorithm>
#include <string>

namespace dyndfs {

DfsTree DfsTree::build(const Graph& g) {
  int slots = g.n_slots();
  DfsTree t;
  t.parent_.assign(slots + 1, -1);
  t.dfn_.assign(slots + 1, -1);

  std::vector<VertexId> visit_order;
  visit_order.reserve(g.n_active() + 1);
  visit_order.push_back(kRoot);
  std::vector<std::vector<HalfEdge>> sorted_adj(slots + 1);
  for (VertexId v = 1; v <= slots; ++v) {
    if (!g.has_vertex(v)) continue;
    sorted_adj[v] = g.adj(v);
    std::sort(sorted_adj[v].begin(), sorted_adj[v].end(),
              [](const HalfEdge& a, const HalfEdge& b) { return a.to < b.to; });
  }

  std::vector<std::uint8_t> seen(slots + 1, 0);
  std::vector<std::pair<VertexId, size_t>> stack;  // (vertex, next neighbor index)
  for (VertexId start = 1; start <= slots; ++start) {
    if (!g.has_vertex(start) || seen[start]) continue;
    seen[start] = 1;
    t.parent_[start] = kRoot;
    visit_order.push_back(start);
    stack.push_back({start, 0});
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i == sorted_adj[v].size()) {
        stack.pop_back();
        continue;
      }
      VertexId to = sorted_adj[v][i++].to;
      if (seen[to]) continue;
      seen[to] = 1;
      t.parent_[to] = v;
      visit_order.push_back(to);
      stack.push_back({to, 0});
    }
  }
  t.index_from_parents(visit_order);
  return t;
}

DfsTree DfsTree::from_parents(int n_slots, std::span<const VertexId> parent,
                              std::span<const VertexId> vertices) {
  DfsTree t;
  t.parent_.assign(n_slots + 1, -1);
  t.dfn_.assign(n_slots + 1, -1);
  std::vector<VertexId> vs;
  vs.reserve(vertices.size() + 1);
  vs.push_back(kRoot);
  for (VertexId v : vertices) {
    t.parent_[v] = parent[v];
    vs.push_back(v);
  }
  t.index_from_parents(vs);
  return t;
}

void DfsTree::index_from_parents(const std::vector<VertexId>& vertices) {
  int slots = static_cast<int>(parent_.size()) - 1;
  sub_end_.assign(slots + 1, -1);
  depth_.assign(slots + 1, -1);
  heavy_.assign(slots + 1, -1);
  head_.assign(slots + 1, -1);
  children_.assign(slots + 1, {});
  for (VertexId v : vertices)
    if (v != kRoot) children_[parent_[v]].push_back(v);
  for (auto& cs : children_) std::sort(cs.begin(), cs.end());

  // Subtree sizes bottom-up over a plain preorder, then heavy children.
  std::vector<int> size(slots + 1, 0);
  std::vector<VertexId> pre;
  pre.reserve(vertices.size());
  pre.push_back(kRoot);
  for (size_t i = 0; i < pre.size(); ++i)
    for (VertexId c : children_[pre[i]]) pre.push_back(c);
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    VertexId v = *it;
    size[v] += 1;
    if (v != kRoot) size[parent_[v]] += size[v];
  }
  for (VertexId v : pre) {
    VertexId best = -1;
    for (VertexId c : children_[v])
      if (best == -1 || size[c] > size[best]) best = c;  // ties: smaller id wins
    heavy_[v] = best;
  }

  // Restricted preorder: heavy child first, remaining children ascending.
  order_.clear();
  order_.reserve(vertices.size());
  std::vector<VertexId> stack{kRoot};
  head_[kRoot] = kRoot;
  depth_[kRoot] = 0;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    dfn_[v] = static_cast<int>(order_.size());
    order_.push_back(v);
    for (auto it = children_[v].rbegin(); it != children_[v].rend(); ++it)
      if (*it != heavy_[v]) stack.push_back(*it);
    if (heavy_[v] != -1) stack.push_back(heavy_[v]);
    for (VertexId c : children_[v]) {
      depth_[c] = depth_[v] + 1;
      head_[c] = (c == heavy_[v]) ? head_[v] : c;
    }
  }
  for (VertexId v : order_) sub_end_[v] = dfn_[v] + size[v] - 1;
}

int DfsTree::dist(VertexId a, VertexId b) const {
  VertexId l = lca(a, b);
  return depth_[a] + depth_[b] - 2 * depth_[l];
}

VertexId DfsTree::lca(VertexId x, VertexId y) const {
  if (x != kRoot && y != kRoot && component_root(x) != component_root(y))
    fail(Errc::kDifferentComponents,
         "lca of " + std::to_string(x) + " and " + std::to_string(y) + ": different components");
  while (head_[x] != head_[y]) {
    if (depth_[head_[x]] < depth_[head_[y]])
      y = parent_[head_[y]];
    else
      x = parent_[head_[x]];
  }
  return depth_[x] < depth_[y] ? x : y;
}

VertexId DfsTree::child_toward(VertexId anc, VertexId desc) const {
  if (anc == desc || !is_ancestor(anc, desc))
    fail(Errc::kNotAncestorDescendant, "child_toward: not a proper ancestor");
  VertexId v = desc;
  while (head_[v] != head_[anc]) {
    VertexId h = head_[v];
    if (parent_[h] == anc) return h;
    v = parent_[h];
  }
  return order_[dfn_[anc] + 1];  // next vertex on anc's heavy chain
}

VertexId DfsTree::component_root(VertexId v) const {
  while (depth_[head_[v]] > 1) v = parent_[head_[v]];
  if (depth_[v] == 0) fail(Errc::kUnknownVertex, "component_root of the dummy root");
  // Walk down the chain containing the depth-1 vertex.
  return order_[dfn_[head_[v]] + 1 - depth_[head_[v]]];
}

std::vector<DfnRange> DfsTree::decompose_path(const TreePath& p) const {
  if (!in_tree(p.top) || !in_tree(p.bottom) || !is_ancestor(p.top, p.bottom))
    fail(Errc::kNotAncestorDescendant, "decompose_path: endpoints not ancestor-descendant");
  std::vector<DfnRange> out;
  VertexId v = p.bottom;
  while (head_[v] != head_[p.top]) {
    out.push_back({dfn_[head_[v]], dfn_[v]});
    v = parent_[head_[v]];
  }
  out.push_back({dfn_[p.top], dfn_[v]});
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace dyndfs
