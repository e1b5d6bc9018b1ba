#include "dyndfs/rebuild.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "dyndfs/static_oracle.hpp"

namespace dyndfs {

namespace {

struct Rerooter {
  const DfsTree& t;
  const QueryStructure& d;
  std::vector<VertexId>& parent;
  std::uint64_t queries = 0;

  void run(VertexId r0, VertexId nr) {
    if (r0 == nr) return;  // the subtree is already a DFS tree rooted here
    if (!t.is_ancestor(r0, nr))
      fail(Errc::kNewRootOutsideSubtree, "new root " + std::to_string(nr) + " outside subtree of " +
                                             std::to_string(r0));
    std::vector<VertexId> path;
    for (VertexId v = nr;; v = t.parent(v)) {
      path.push_back(v);
      if (v == r0) break;
    }
    std::reverse(path.begin(), path.end());  // path[0] = r0, path.back() = nr
    for (size_t i = 0; i + 1 < path.size(); ++i) parent[path[i]] = path[i + 1];
    for (size_t i = 0; i < path.size(); ++i) {
      VertexId b = path[i];
      VertexId on_path_child = i + 1 < path.size() ? path[i + 1] : -1;
      for (VertexId c : t.children(b)) {
        if (c == on_path_child) continue;
        ++queries;
        auto hit = d.query_subtree(c, r0, b);
        if (hit) {
          run(c, hit->other);
          parent[hit->other] = hit->on_path;
        }
        // A null answer cannot happen while the subtree's own tree edges are
        // live; leaving c under b is the degenerate fallback.
      }
    }
  }
};

}  // namespace

RerootRecord reroot(const DfsTree& t, const QueryStructure& d, VertexId subtree_root,
                    VertexId new_root, std::vector<VertexId>& parent) {
  Rerooter r{t, d, parent};
  r.run(subtree_root, new_root);
  return {t.subtree_size(subtree_root), r.queries};
}

namespace {

// Clipped root path of v: (component root .. v), never touching the dummy
// root. Anchor for "lowest edge" queries is v itself.
std::optional<EdgeHit> lowest_edge_to_root_path(const DfsTree& t, const QueryStructure& d,
                                                VertexId subtree, VertexId path_bottom) {
  VertexId top = t.component_root(path_bottom);
  return d.query_subtree(subtree, path_bottom, top);
}

DfsTree finish(const Graph& g_after, std::vector<VertexId>& parent) {
  std::vector<VertexId> vs = g_after.active_vertices();
  return DfsTree::from_parents(g_after.n_slots(), parent, vs);
}

}  // namespace

DfsTree apply_single_update(const Graph& g, const DfsTree& t, QueryStructure& d,
                            const SingleUpdate& upd, SingleUpdateStats* stats) {
  std::vector<VertexId> parent(std::max(g.n_slots(), upd.u) + 1, -1);
  for (VertexId v = 1; v <= g.n_slots(); ++v)
    if (g.has_vertex(v)) parent[v] = t.parent(v);
  auto note = [&](const RerootRecord& rec) {
    if (stats) stats->reroots.push_back(rec);
  };

  switch (upd.kind) {
    case UpdateKind::kDeleteEdge: {
      auto e = g.find_edge(upd.u, upd.v);
      if (!e) fail(Errc::kUnknownEdge, "deleting a missing edge");
      Graph after = g;
      after.remove_edge(*e);
      if (d.edge_live(*e)) d.delete_edge(*e);
      VertexId pu = upd.u, cv = upd.v;
      if (t.parent(cv) != pu && t.parent(pu) == cv) std::swap(pu, cv);
      if (t.parent(cv) == pu) {  // tree edge
        auto hit = lowest_edge_to_root_path(t, d, cv, pu);
        if (hit) {
          RerootRecord rec = reroot(t, d, cv, hit->other, parent);
          note(rec);
          parent[hit->other] = hit->on_path;
        } else {
          parent[cv] = kRoot;  // the subtree becomes its own component
        }
      }
      return finish(after, parent);
    }
    case UpdateKind::kInsertEdge: {
      Graph after = g;
      after.add_edge(upd.u, upd.v);  // validates endpoints and duplicates
      VertexId u = upd.u, v = upd.v;
      if (t.is_ancestor(u, v) || t.is_ancestor(v, u)) return finish(after, parent);
      VertexId vprime;
      if (t.component_root(u) != t.component_root(v)) {
        vprime = t.component_root(v);
      } else {
        VertexId w = t.lca(u, v);
        vprime = t.child_toward(w, v);
      }
      RerootRecord rec = reroot(t, d, vprime, v, parent);
      note(rec);
      parent[v] = u;
      return finish(after, parent);
    }
    case UpdateKind::kDeleteVertex: {
      if (!g.has_vertex(upd.u)) fail(Errc::kUnknownVertex, "deleting a missing vertex");
      Graph after = g;
      after.remove_vertex(upd.u);
      for (const auto& he : g.adj(upd.u))
        if (d.edge_live(he.id)) d.delete_edge(he.id);
      parent[upd.u] = -1;
      VertexId up = t.parent(upd.u);
      for (VertexId c : t.children(upd.u)) {
        std::optional<EdgeHit> hit;
        if (up != kRoot) hit = lowest_edge_to_root_path(t, d, c, up);
        if (hit) {
          RerootRecord rec = reroot(t, d, c, hit->other, parent);
          note(rec);
          parent[hit->other] = hit->on_path;
        } else {
          parent[c] = kRoot;
        }
      }
      return finish(after, parent);
    }
    case UpdateKind::kInsertVertex: {
      Graph after = g;
      after.add_vertex_with_id(upd.u);
      for (VertexId n : upd.neighbors) after.add_edge(upd.u, n);
      if (upd.neighbors.empty()) {
        parent[upd.u] = kRoot;
        return finish(after, parent);
      }
      std::vector<VertexId> ns = upd.neighbors;
      std::sort(ns.begin(), ns.end());
      VertexId vj = ns.front();
      parent[upd.u] = vj;
      std::vector<VertexId> rerooted;  // hanging-subtree roots already handled
      for (VertexId n : ns) {
        if (n == vj || t.is_ancestor(n, vj)) continue;  // on path(vj, r)
        VertexId vprime;
        if (t.component_root(n) != t.component_root(vj)) {
          vprime = t.component_root(n);
        } else {
          VertexId a = t.lca(n, vj);
          vprime = t.child_toward(a, n);
        }
        if (std::find(rerooted.begin(), rerooted.end(), vprime) != rerooted.end())
          continue;  // a sibling neighbor already re-hung this subtree
        rerooted.push_back(vprime);
        RerootRecord rec = reroot(t, d, vprime, n, parent);
        note(rec);
        parent[n] = upd.u;
      }
      return finish(after, parent);
    }
  }
  fail(Errc::kConflictingUpdate, "unreachable");
}

RebuildResult rebuild_batch(const Graph& g_base, const DfsTree& t, QueryStructure& d,
                            const UpdateBatch& u, const RebuildOptions& opt) {
  const std::uint64_t q_begin = d.queries_issued();

  // (1) the batch's deletions leave d, idempotently within the epoch
  for (EdgeId e : u.edge_fails())
    if (d.edge_live(e)) d.delete_edge(e);
  for (VertexId v : u.vertex_fails())
    for (const auto& he : g_base.adj(v))
      if (d.edge_live(he.id)) d.delete_edge(he.id);

  // (2) disjoint tree partitioning
  Partition part = Partition::build(g_base, t, u);

  int max_id = g_base.n_slots();
  for (const auto& vi : u.vertex_inserts()) max_id = std::max(max_id, vi.v);

  RebuildTrace trace;
  trace.k = u.size();
  trace.base_n_slots = g_base.n_slots();
  trace.path_of_vertex.assign(max_id + 1, -1);
  trace.orig_tree_root.assign(max_id + 1, -1);
  for (VertexId v = 1; v <= g_base.n_slots(); ++v)
    if (part.membership(v) == Membership::kInTree) trace.orig_tree_root[v] = part.tree_root_of(v);
  trace.p_at_construction = part.paths_at_construction();

  // (3) seed the reduced lists from the inserted edges
  ReducedAdjacency L(max_id);
  for (auto [a, b] : u.all_inserted_edges()) {
    L.add(a, b);
    L.add(b, a);
  }

  std::vector<VertexId> parent(max_id + 1, -1);
  std::vector<VertexId> stack;

  std::optional<Graph> audit_graph;
  if (opt.audit) audit_graph = apply_batch(g_base, u);

  // Restart order: unvisited survivors by ascending id (virtual root edges).
  std::vector<VertexId> candidates;
  for (VertexId v = 0; v <= max_id; ++v)
    if (part.membership(v) == Membership::kInTree || part.membership(v) == Membership::kInPath)
      candidates.push_back(v);
  size_t restart_cursor = 0;

  auto attach = [&](VertexId from, VertexId entry) {
    Membership mem = part.membership(entry);
    ExtractedPath ex = (mem == Membership::kInTree) ? part.extract_from_tree(entry)
                                                    : part.extract_from_path(entry);
    VertexId prev = from;
    for (VertexId x : ex.vertices) {
      parent[x] = prev;
      stack.push_back(x);
      trace.path_of_vertex[x] = static_cast<std::int32_t>(trace.paths.size());
      prev = x;
    }
    trace.paths.push_back({ex.head(), ex.tail(), ex.from_tree, ex.inserted_singleton});
    if (ex.from_tree)
      ++trace.paths_from_t;
    else
      ++trace.paths_from_p;
    trace.trees_inserted_total += static_cast<int>(ex.new_tree_roots.size());

    // One candidate edge per (extracted vertex, surviving path) pair.
    for (VertexId x : ex.vertices) {
      for (const PathRec& q : part.paths()) {
        if (!q.alive || q.is_inserted()) continue;
        auto hit = d.query_vertex(x, q.top, q.bottom);
        if (hit) L.add(x, hit->on_path);
      }
    }
    // One candidate edge per reachable tree, landing as deep as possible on
    // the extracted segment (anchored at its far end).
    if (!ex.inserted_singleton) {
      auto probe_tree = [&](VertexId root) {
        auto hit = d.query_subtree(root, ex.tail(), ex.head());
        if (hit) L.add(hit->on_path, hit->other);
      };
      if (ex.from_tree) {
        for (VertexId c : ex.new_tree_roots) probe_tree(c);
      } else {
        for (VertexId root : part.tree_roots()) probe_tree(root);
      }
    }

    if (opt.audit) {
      bool part_ok = check_partition(g_base, t, u, part);
      assert(part_ok);
      if (!part_ok) fail(Errc::kConflictingUpdate, "partition invariant broken mid-rebuild");
      for (size_t i = 1; i < stack.size(); ++i)
        if (parent[stack[i]] != stack[i - 1])
          fail(Errc::kConflictingUpdate, "stack is not a root path");
    }
  };

  while (part.unvisited() > 0) {
    if (stack.empty()) {
      while (restart_cursor < candidates.size() &&
             part.membership(candidates[restart_cursor]) == Membership::kVisited)
        ++restart_cursor;
      attach(kRoot, candidates[restart_cursor]);
      continue;
    }
    VertexId w = stack.back();
    auto y = L.consume(w);
    if (!y) {
      if (opt.audit && audit_graph && w <= g_base.n_slots() && audit_graph->has_vertex(w)) {
        for (const auto& he : audit_graph->adj(w))
          if (part.membership(he.to) != Membership::kVisited)
            fail(Errc::kConflictingUpdate, "popping a vertex with an unvisited neighbor");
      }
      stack.pop_back();
      continue;
    }
    ++trace.edges_scanned;
    if (part.membership(*y) == Membership::kVisited) continue;
    attach(w, *y);
  }

  trace.d_queries = d.queries_issued() - q_begin;
  trace.l_total = L.total_added();
  trace.p_peak = part.peak_path_count();
  trace.max_path_reentries = part.max_path_reentries();

  std::vector<VertexId> actives;
  for (VertexId v = 1; v <= max_id; ++v)
    if (part.membership(v) == Membership::kVisited) actives.push_back(v);
  DfsTree tree = DfsTree::from_parents(max_id, parent, actives);
  return {std::move(tree), std::move(trace)};
}

}  // namespace dyndfs
