#include "dyndfs/query_structure.hpp"

#include <string>

#include <algorithm>
#include <cstdlib>

namespace dyndfs {

// ---------------------------------------------------------------- NodeSet

int QueryStructure::NodeSet::find_ge(std::int32_t k) const {
  return static_cast<int>(std::lower_bound(key.begin(), key.end(), k) - key.begin());
}

int QueryStructure::NodeSet::next_live(int i) const {
  int n = static_cast<int>(key.size());
  if (i >= n) return n;
  while (i < n && dead[i]) i = nxt[i];
  return i;
}

int QueryStructure::NodeSet::prev_live(int i) const {
  if (i < 0) return -1;
  while (i >= 0 && dead[i]) i = prv[i];
  return i;
}

std::optional<std::pair<std::int32_t, EdgeId>> QueryStructure::NodeSet::min_in(
    std::int32_t lo, std::int32_t hi) const {
  int i = next_live(find_ge(lo));
  if (i < static_cast<int>(key.size()) && key[i] <= hi) return std::pair{key[i], eid[i]};
  return std::nullopt;
}

std::optional<std::pair<std::int32_t, EdgeId>> QueryStructure::NodeSet::max_in(
    std::int32_t lo, std::int32_t hi) const {
  int i = prev_live(find_ge(hi + 1) - 1);
  if (i >= 0 && key[i] >= lo) return std::pair{key[i], eid[i]};
  return std::nullopt;
}

void QueryStructure::NodeSet::kill(std::int32_t k, EdgeId e) {
  int n = static_cast<int>(key.size());
  // entries are unique on (key, edge id); binary search the pair
  int lo = 0, hi = n;
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (std::pair{key[mid], eid[mid]} < std::pair{k, e})
      lo = mid + 1;
    else
      hi = mid;
  }
  int i = lo;
  if (i >= n || key[i] != k || eid[i] != e || dead[i]) return;  // caller guards liveness
  dead[i] = 1;
  nxt[i] = i + 1;
  prv[i] = i - 1;
  --live;
  ++tomb;
  if (tomb > live) compact();
}

void QueryStructure::NodeSet::compact() {
  std::vector<std::int32_t> k2;
  std::vector<EdgeId> e2;
  k2.reserve(live);
  e2.reserve(live);
  for (size_t i = 0; i < key.size(); ++i) {
    if (!dead[i]) {
      k2.push_back(key[i]);
      e2.push_back(eid[i]);
    }
  }
  key = std::move(k2);
  eid = std::move(e2);
  dead.assign(key.size(), 0);
  nxt.resize(key.size());
  prv.resize(key.size());
  for (size_t i = 0; i < key.size(); ++i) {
    nxt[i] = static_cast<std::int32_t>(i) + 1;
    prv[i] = static_cast<std::int32_t>(i) - 1;
  }
  tomb = 0;
}

// ---------------------------------------------------------------- Builder

QueryStructure::Builder::Builder(const Graph& g, const DfsTree& t) {
  out_ = std::make_unique<QueryStructure>();
  out_->tree_ = &t;
  out_->leaf_count_ = g.n_active();
  out_->base_ = 1;
  while (out_->base_ < std::max(1, out_->leaf_count_)) out_->base_ <<= 1;
  out_->nodes_.assign(2 * out_->base_, {});
  out_->live_edge_.assign(std::max(1, g.edge_slots()), 0);
  out_->edge_ends_.assign(std::max(1, g.edge_slots()), {0, 0});
  for (EdgeId e = 0; e < g.edge_slots(); ++e)
    out_->edge_ends_[e] = {g.edge(e).u, g.edge(e).v};

  // Both orientations of every live edge, grouped by first-endpoint leaf.
  pending_.reserve(2 * g.m_active());
  std::vector<std::pair<std::int32_t, std::pair<std::int32_t, EdgeId>>> items;
  items.reserve(2 * g.m_active());
  for (EdgeId e : g.live_edges()) {
    auto rec = g.edge(e);
    items.push_back({out_->pos(rec.u), {out_->pos(rec.v), e}});
    items.push_back({out_->pos(rec.v), {out_->pos(rec.u), e}});
    out_->live_edge_[e] = 1;
  }
  std::sort(items.begin(), items.end());
  leaf_of_.reserve(items.size());
  for (auto& it : items) {
    leaf_of_.push_back(it.first);
    pending_.push_back(it.second);
  }

  // One unit per entry placed at a leaf, plus one per entry touched in each
  // level's merges (entries appear once per level above the leaves).
  int levels = 0;
  for (int b = out_->base_; b > 1; b >>= 1) ++levels;
  total_work_ = pending_.size() * static_cast<std::uint64_t>(1 + levels);
  if (total_work_ == 0) total_work_ = 1;
}

std::uint64_t QueryStructure::Builder::advance(std::uint64_t units) {
  if (done_) return 0;
  std::uint64_t spent = 0;
  auto& nodes = out_->nodes_;
  while (spent < units && !done_) {
    if (stage_ == 0) {  // distribute sorted entries to leaves
      if (stage_pos_ == pending_.size()) {
        stage_ = 1;
        level_width_ = out_->base_ >> 1;
        stage_pos_ = level_width_;  // first node of the level
        merge_l_ = merge_r_ = 0;
        if (spent == units) break;
        continue;
      }
      int leaf = out_->base_ + leaf_of_[stage_pos_];
      nodes[leaf].key.push_back(pending_[stage_pos_].first);
      nodes[leaf].eid.push_back(pending_[stage_pos_].second);
      ++stage_pos_;
      ++spent;
    } else {  // merge children pairwise, level by level
      if (level_width_ == 0) {
        done_ = true;
        break;
      }
      size_t z = stage_pos_;
      auto& L = nodes[2 * z];
      auto& R = nodes[2 * z + 1];
      auto& N = nodes[z];
      bool advanced = false;
      while (spent < units && (merge_l_ < L.key.size() || merge_r_ < R.key.size())) {
        bool take_left =
            merge_r_ == R.key.size() ||
            (merge_l_ < L.key.size() &&
             std::pair{L.key[merge_l_], L.eid[merge_l_]} <= std::pair{R.key[merge_r_], R.eid[merge_r_]});
        if (take_left) {
          N.key.push_back(L.key[merge_l_]);
          N.eid.push_back(L.eid[merge_l_]);
          ++merge_l_;
        } else {
          N.key.push_back(R.key[merge_r_]);
          N.eid.push_back(R.eid[merge_r_]);
          ++merge_r_;
        }
        ++spent;
        advanced = true;
      }
      if (merge_l_ == L.key.size() && merge_r_ == R.key.size()) {
        merge_l_ = merge_r_ = 0;
        ++stage_pos_;
        if (stage_pos_ == 2 * level_width_) {  // level finished
          level_width_ >>= 1;
          stage_pos_ = level_width_;
          if (level_width_ == 0) done_ = true;
        }
      } else if (!advanced) {
        break;
      }
    }
  }
  work_done_ += spent;
  if (done_) out_->finish_build();
  return spent;
}

QueryStructure QueryStructure::Builder::take() {
  QueryStructure result = std::move(*out_);
  out_.reset();
  return result;
}

void QueryStructure::finish_build() {
  for (auto& n : nodes_) {
    n.live = static_cast<std::int32_t>(n.key.size());
    n.tomb = 0;
    n.dead.assign(n.key.size(), 0);
    n.nxt.resize(n.key.size());
    n.prv.resize(n.key.size());
    for (size_t i = 0; i < n.key.size(); ++i) {
      n.nxt[i] = static_cast<std::int32_t>(i) + 1;
      n.prv[i] = static_cast<std::int32_t>(i) - 1;
    }
    total_live_ += n.live;
  }
}

QueryStructure::QueryStructure(const Graph& g, const DfsTree& t) {
  Builder b(g, t);
  b.advance(b.total_work());
  *this = b.take();
}

// ---------------------------------------------------------------- queries

QueryStructure::Plan QueryStructure::plan_path(VertexId x, VertexId y) const {
  const DfsTree& t = *tree_;
  if (!t.in_tree(x) || !t.in_tree(y) || x == kRoot || y == kRoot)
    fail(Errc::kInvalidPath, "query path endpoints must be live base-tree vertices");
  bool x_top = t.is_ancestor(x, y);
  if (!x_top && !t.is_ancestor(y, x))
    fail(Errc::kInvalidPath, "query path endpoints are not ancestor-descendant");
  TreePath p = x_top ? TreePath{x, y} : TreePath{y, x};
  auto segs = t.decompose_path(p);
  Plan plan;
  plan.anchor_is_top = x_top;
  plan.segs.reserve(segs.size());
  if (x_top) {
    for (auto s : segs) plan.segs.push_back({s.lo - 1, s.hi - 1});
  } else {
    for (auto it = segs.rbegin(); it != segs.rend(); ++it)
      plan.segs.push_back({it->lo - 1, it->hi - 1});
  }
  return plan;
}

void QueryStructure::cover(int lo, int hi, std::vector<int>& out) const {
  int l = lo + base_, r = hi + base_ + 1;
  while (l < r) {
    if (l & 1) out.push_back(l++);
    if (r & 1) out.push_back(--r);
    l >>= 1;
    r >>= 1;
  }
}

std::optional<EdgeHit> QueryStructure::run_query(const std::vector<int>& cover_nodes, VertexId x,
                                                 VertexId y) const {
  ++queries_;
  last_probes_ = 0;
  Plan plan = plan_path(x, y);
  const DfsTree& t = *tree_;
  for (const auto& seg : plan.segs) {
    // Within one heavy-chain segment, positions grow away from the top, so
    // the anchor-nearest candidate has extremal key. Segments themselves are
    // visited nearest-anchor first, so the first hit decides.
    std::optional<std::pair<std::int32_t, EdgeId>> best;
    for (int z : cover_nodes) {
      if (nodes_[z].live == 0) continue;
      ++probes_;
      ++last_probes_;
      auto got = plan.anchor_is_top ? nodes_[z].min_in(seg.lo, seg.hi)
                                    : nodes_[z].max_in(seg.lo, seg.hi);
      if (!got) continue;
      if (!best || (plan.anchor_is_top ? got->first < best->first : got->first > best->first))
        best = got;
    }
    if (best) {
      VertexId on_path = vertex_at_pos(best->first);
      auto [eu, ev] = edge_ends_[best->second];
      VertexId other = (eu == on_path) ? ev : eu;
      return EdgeHit{best->second, on_path, other, std::abs(t.depth(on_path) - t.depth(x))};
    }
  }
  return std::nullopt;
}

std::optional<EdgeHit> QueryStructure::query_vertex(VertexId w, VertexId x, VertexId y) const {
  if (!tree_->in_tree(w) || w == kRoot) fail(Errc::kInvalidPath, "query vertex not in base tree");
  std::vector<int> node{base_ + pos(w)};
  return run_query(node, x, y);
}

std::optional<EdgeHit> QueryStructure::query_subtree(VertexId w, VertexId x, VertexId y) const {
  const DfsTree& t = *tree_;
  if (!t.in_tree(w) || w == kRoot) fail(Errc::kInvalidPath, "query subtree not in base tree");
  VertexId bot = t.is_ancestor(x, y) ? y : x;
  // Path vertices are exactly the ancestors of bot down to the top, so T(w)
  // meets the path iff w is an ancestor of bot.
  if (t.is_ancestor(w, bot))
    fail(Errc::kSourceIntersectsPath, "subtree source intersects the query path");
  std::vector<int> nodes;
  cover(pos(w), t.sub_end(w) - 1, nodes);
  return run_query(nodes, x, y);
}

void QueryStructure::delete_edge(EdgeId e) {
  if (!edge_live(e))
    fail(Errc::kEdgeNotPresent, "edge " + std::to_string(e) + " not live in the query structure");
  auto [eu, ev] = edge_ends_[e];
  auto kill_side = [&](VertexId from, VertexId to) {
    std::int32_t k = pos(to);
    for (int z = base_ + pos(from); z >= 1; z >>= 1) {
      auto& n = nodes_[z];
      std::int64_t before_live = n.live, before_tomb = n.tomb;
      n.kill(k, e);
      total_live_ += n.live - before_live;
      total_tomb_ += n.tomb - before_tomb;
    }
  };
  kill_side(eu, ev);
  kill_side(ev, eu);
  live_edge_[e] = 0;
}

}  // namespace dyndfs
