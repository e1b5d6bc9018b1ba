#include "dyndfs/partition.hpp"

#include <algorithm>
#include <string>

namespace dyndfs {

Membership Partition::membership(VertexId v) const {
  if (v < 0 || v >= static_cast<int>(state_.size())) return Membership::kNone;
  return state_[v];
}

VertexId Partition::tree_root_of(VertexId v) const {
  if (membership(v) != Membership::kInTree) fail(Errc::kNotInTree, "vertex not in a tree");
  auto it = trees_by_dfn_.upper_bound(base_->dfn(v));
  --it;
  return it->second;
}

int Partition::path_id_of(VertexId v) const {
  if (membership(v) != Membership::kInPath) fail(Errc::kNotInPath, "vertex not on a path");
  return path_id_[v];
}

int Partition::max_path_reentries() const {
  int m = 0;
  for (const auto& p : paths_) m = std::max(m, p.reentries);
  return m;
}

std::vector<VertexId> Partition::tree_roots() const {
  std::vector<VertexId> out;
  out.reserve(trees_by_dfn_.size());
  for (const auto& [_, root] : trees_by_dfn_) out.push_back(root);
  return out;
}

void Partition::add_tree(VertexId root) { trees_by_dfn_[base_->dfn(root)] = root; }

void Partition::remove_tree(VertexId root) { trees_by_dfn_.erase(base_->dfn(root)); }

int Partition::add_path(VertexId top, VertexId bottom, int reentries) {
  int id = static_cast<int>(paths_.size());
  paths_.push_back({top, bottom, -1, true, reentries});
  ++live_paths_;
  peak_paths_ = std::max(peak_paths_, live_paths_);
  for (VertexId v = bottom;; v = base_->parent(v)) {
    state_[v] = Membership::kInPath;
    path_id_[v] = id;
    if (v == top) break;
  }
  return id;
}

int Partition::add_inserted_singleton(VertexId v) {
  int id = static_cast<int>(paths_.size());
  paths_.push_back({-1, -1, v, true, 0});
  ++live_paths_;
  peak_paths_ = std::max(peak_paths_, live_paths_);
  state_[v] = Membership::kInPath;
  path_id_[v] = id;
  return id;
}

// Inserts every subtree hanging off path(top..bottom) (top the ancestor);
// children on the path and the branch rooted at skip_child stay out.
void Partition::hang_subtrees_off(VertexId bottom, VertexId top, VertexId skip_child,
                                  std::vector<VertexId>* collect) {
  const DfsTree& t = *base_;
  for (VertexId w = bottom;; w = t.parent(w)) {
    for (VertexId c : t.children(w)) {
      if (c == skip_child || state_[c] != Membership::kInTree) continue;
      if (t.is_ancestor(c, bottom)) continue;  // on the path
      add_tree(c);
      if (collect) collect->push_back(c);
    }
    if (w == top) break;
  }
}

Partition Partition::build(const Graph& g_base, const DfsTree& t, const UpdateBatch& u) {
  if (u.size() > std::max(1, g_base.n_active()))
    fail(Errc::kBatchTooLarge, "batch of " + std::to_string(u.size()) + " updates on " +
                                   std::to_string(g_base.n_active()) + " vertices");
  Partition part;
  part.base_ = &t;
  int max_id = 0;
  for (VertexId v : t.preorder()) max_id = std::max(max_id, v);
  for (const auto& vi : u.vertex_inserts()) max_id = std::max(max_id, vi.v);
  part.state_.assign(max_id + 1, Membership::kNone);
  part.path_id_.assign(max_id + 1, -1);

  for (VertexId v : t.preorder()) {
    if (v == kRoot) continue;
    part.state_[v] = Membership::kInTree;
    if (t.parent(v) == kRoot) part.add_tree(v);
  }

  for (VertexId v : u.vertex_fails()) part.process_vertex_failure(v);
  for (EdgeId e : u.edge_fails()) {
    const EdgeRec& rec = g_base.edge(e);
    if (t.parent(rec.v) == rec.u)
      part.process_tree_edge_failure(rec.u, rec.v);
    else if (t.parent(rec.u) == rec.v)
      part.process_tree_edge_failure(rec.v, rec.u);
    // back edges do not touch the partition
  }
  for (const auto& vi : u.vertex_inserts()) part.add_inserted_singleton(vi.v);

  part.paths_at_construction_ = part.live_paths_;
  part.unvisited_ = 0;
  for (Membership s : part.state_)
    if (s == Membership::kInTree || s == Membership::kInPath) ++part.unvisited_;
  return part;
}

void Partition::process_vertex_failure(VertexId v) {
  const DfsTree& t = *base_;
  if (state_[v] == Membership::kInTree) {
    VertexId root = tree_root_of(v);
    remove_tree(root);
    state_[v] = Membership::kNone;
    path_id_[v] = -1;
    if (v != root) {
      add_path(root, t.parent(v));
      hang_subtrees_off(t.parent(v), root, /*skip_child=*/v, nullptr);
    }
    for (VertexId c : t.children(v))
      if (state_[c] == Membership::kInTree) add_tree(c);
  } else if (state_[v] == Membership::kInPath) {
    int id = path_id_[v];
    PathRec p = paths_[id];
    paths_[id].alive = false;
    --live_paths_;
    state_[v] = Membership::kNone;
    path_id_[v] = -1;
    if (p.top != v) add_path(p.top, t.parent(v));
    if (p.bottom != v) add_path(t.child_toward(v, p.bottom), p.bottom);
  } else {
    state_[v] = Membership::kNone;
    path_id_[v] = -1;
  }
}

void Partition::process_tree_edge_failure(VertexId parent_end, VertexId child_end) {
  const DfsTree& t = *base_;
  VertexId a = parent_end, b = child_end;
  if (state_[a] == Membership::kInTree && state_[b] == Membership::kInTree &&
      tree_root_of(a) == tree_root_of(b)) {
    VertexId root = tree_root_of(a);
    remove_tree(root);
    add_path(root, a);
    hang_subtrees_off(a, root, /*skip_child=*/b, nullptr);
    add_tree(b);
  } else if (state_[a] == Membership::kInPath && state_[b] == Membership::kInPath &&
             path_id_[a] == path_id_[b]) {
    int id = path_id_[a];
    PathRec p = paths_[id];
    paths_[id].alive = false;
    --live_paths_;
    add_path(p.top, a);
    add_path(b, p.bottom);
  }
  // Endpoints already in different pieces: no element contains the edge.
}

ExtractedPath Partition::extract_from_tree(VertexId entry) {
  const DfsTree& t = *base_;
  VertexId root = tree_root_of(entry);  // throws kNotInTree
  remove_tree(root);
  ExtractedPath out;
  out.from_tree = true;
  out.inserted_singleton = false;
  for (VertexId w = entry;; w = t.parent(w)) {
    out.vertices.push_back(w);
    state_[w] = Membership::kVisited;
    if (w == root) break;
  }
  unvisited_ -= static_cast<int>(out.vertices.size());
  hang_subtrees_off(entry, root, /*skip_child=*/-1, &out.new_tree_roots);
  return out;
}

ExtractedPath Partition::extract_from_path(VertexId entry) {
  const DfsTree& t = *base_;
  int id = path_id_of(entry);  // throws kNotInPath
  PathRec p = paths_[id];
  paths_[id].alive = false;
  --live_paths_;

  ExtractedPath out;
  out.from_tree = false;
  if (p.is_inserted()) {
    out.inserted_singleton = true;
    out.vertices.push_back(entry);
    state_[entry] = Membership::kVisited;
    --unvisited_;
    return out;
  }
  out.inserted_singleton = false;
  int dist_top = t.depth(entry) - t.depth(p.top);
  int dist_bottom = t.depth(p.bottom) - t.depth(entry);
  if (dist_top >= dist_bottom) {  // ties toward the ancestor endpoint
    for (VertexId w = entry;; w = t.parent(w)) {
      out.vertices.push_back(w);
      if (w == p.top) break;
    }
    if (entry != p.bottom)
      add_path(t.child_toward(entry, p.bottom), p.bottom, p.reentries + 1);
  } else {
    std::vector<VertexId> rev;
    for (VertexId w = p.bottom;; w = t.parent(w)) {
      rev.push_back(w);
      if (w == entry) break;
    }
    out.vertices.assign(rev.rbegin(), rev.rend());
    if (entry != p.top) add_path(p.top, t.parent(entry), p.reentries + 1);
  }
  for (VertexId w : out.vertices) state_[w] = Membership::kVisited;
  unvisited_ -= static_cast<int>(out.vertices.size());
  return out;
}

bool check_partition(const Graph& g_base, const DfsTree& t, const UpdateBatch& u,
                     const Partition& part) {
  if (part.path_count() > u.size()) return false;

  // Per-vertex coverage: survivors and inserted vertices are visited, on
  // exactly one live path, or in exactly one tree; failed vertices nowhere.
  std::vector<int> covered(std::max<size_t>(part.base().preorder().size(),
                                            static_cast<size_t>(g_base.n_slots() + 1)) +
                               1,
                           0);
  auto mark = [&](VertexId v) {
    if (v >= static_cast<int>(covered.size())) covered.resize(v + 1, 0);
    ++covered[v];
  };
  for (const auto& p : part.paths()) {
    if (!p.alive) continue;
    if (p.is_inserted()) {
      mark(p.inserted);
      continue;
    }
    if (!t.is_ancestor(p.top, p.bottom)) return false;
    for (VertexId w = p.bottom;; w = t.parent(w)) {
      mark(w);
      if (part.membership(w) != Membership::kInPath) return false;
      if (u.vertex_failed(w)) return false;
      if (w != p.bottom) {
        // the path edge below w must be alive in G+U
        auto e = g_base.find_edge(w, t.child_toward(w, p.bottom));
        if (!e) return false;
        if (std::find(u.edge_fails().begin(), u.edge_fails().end(), *e) != u.edge_fails().end())
          return false;
      }
      if (w == p.top) break;
    }
  }
  for (VertexId root : part.tree_roots()) {
    for (int pos = t.dfn(root); pos <= t.sub_end(root); ++pos) {
      VertexId w = t.vertex_at(pos);
      mark(w);
      if (part.membership(w) != Membership::kInTree) return false;
      if (u.vertex_failed(w)) return false;
      if (w != root) {
        auto e = g_base.find_edge(w, t.parent(w));
        if (!e) return false;
        if (std::find(u.edge_fails().begin(), u.edge_fails().end(), *e) != u.edge_fails().end())
          return false;
      }
    }
  }
  for (VertexId v = 1; v <= g_base.n_slots(); ++v) {
    if (!g_base.has_vertex(v)) continue;
    bool survives = !u.vertex_failed(v);
    int want = survives ? (part.membership(v) == Membership::kVisited ? 0 : 1) : 0;
    if (covered[v] != want) return false;
    if (!survives && part.membership(v) != Membership::kNone) return false;
  }
  for (const auto& vi : u.vertex_inserts()) {
    int want = part.membership(vi.v) == Membership::kVisited ? 0 : 1;
    if (covered[vi.v] != want) return false;
  }

  // No surviving base edge joins two distinct trees.
  for (EdgeId e : g_base.live_edges()) {
    const auto& rec = g_base.edge(e);
    if (u.vertex_failed(rec.u) || u.vertex_failed(rec.v)) continue;
    if (std::find(u.edge_fails().begin(), u.edge_fails().end(), e) != u.edge_fails().end())
      continue;
    if (part.membership(rec.u) == Membership::kInTree &&
        part.membership(rec.v) == Membership::kInTree &&
        part.tree_root_of(rec.u) != part.tree_root_of(rec.v))
      return false;
  }
  return true;
}

}  // namespace dyndfs
