#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "doat/graph.hpp"

namespace doat {

/// Pendant-tree data shared by cycle and path decompositions. Indices k are
/// 0-based positions on the cycle (or path); `spine[k]` is the k-th vertex.
struct PendantForest {
  std::vector<std::int32_t> anchor;  ///< per vertex: index k with v in T(spine[k])
  std::vector<Length> depth;         ///< per vertex: distance to spine[anchor] inside its tree
  std::vector<Length> weight;        ///< per k: max depth inside T(spine[k])
  std::vector<Vertex> far;           ///< per k: smallest-id vertex attaining weight[k]
  std::vector<std::int32_t> offset;  ///< members of T(spine[k]) are members[offset[k]..offset[k+1])
  std::vector<Vertex> members;       ///< grouped by anchor, ascending vertex id within a group

  std::span<const Vertex> tree(std::int32_t k) const {
    return {members.data() + offset[k], members.data() + offset[k + 1]};
  }
  std::int32_t tree_size(std::int32_t k) const { return offset[k + 1] - offset[k]; }
};

struct CycleDecomposition : PendantForest {
  std::vector<Vertex> cycle;         ///< clockwise order, cycle[0] is the smallest id
  std::vector<Length> arc_len;       ///< arc_len[k] = length of edge cycle[k] -> cycle[k+1 mod m]
  std::vector<Length> prefix;        ///< clockwise distance from cycle[0] to cycle[k]
  std::vector<std::int32_t> cycle_edge_ids;
  std::vector<char> is_cycle_edge;   ///< per edge id
  Length total = 0;

  std::int32_t size() const { return static_cast<std::int32_t>(cycle.size()); }
};

struct PathDecomposition : PendantForest {
  std::vector<Vertex> path;
  std::vector<Length> prefix;        ///< distance along the path from path[0] to path[k]

  std::int32_t size() const { return static_cast<std::int32_t>(path.size()); }
  Length path_distance(std::int32_t a, std::int32_t b) const {
    return a < b ? prefix[b] - prefix[a] : prefix[a] - prefix[b];
  }
  Length length() const { return prefix.back(); }
};

struct TreePath {
  Length value = 0;
  std::pair<Vertex, Vertex> endpoints{0, 0};
  std::vector<Vertex> path;
};

namespace detail {

/// Scratch for repeated single-source sweeps over a forest of pendant trees.
/// Edges flagged in `blocked` are never crossed, so a sweep stays inside one
/// component.
class TreeSweeper {
 public:
  TreeSweeper(const WeightedGraph& g, std::span<const char> blocked)
      : g_(g), blocked_(blocked), dist_(g.vertex_count(), -1), parent_(g.vertex_count(), kNoVertex) {}

  /// Farthest vertex from `src` (smallest id on ties) and its distance.
  std::pair<Vertex, Length> farthest(Vertex src) {
    reset();
    stack_.push_back(src);
    dist_[src] = 0;
    touched_.push_back(src);
    Vertex best = src;
    Length best_dist = 0;
    while (!stack_.empty()) {
      const Vertex v = stack_.back();
      stack_.pop_back();
      if (dist_[v] > best_dist || (dist_[v] == best_dist && v < best)) {
        best = v;
        best_dist = dist_[v];
      }
      for (const auto& inc : g_.neighbors(v)) {
        if (!blocked_.empty() && blocked_[inc.edge]) continue;
        if (dist_[inc.to] >= 0) continue;
        dist_[inc.to] = dist_[v] + g_.edge(inc.edge).len;
        parent_[inc.to] = v;
        touched_.push_back(inc.to);
        stack_.push_back(inc.to);
      }
    }
    return {best, best_dist};
  }

  /// Vertices on the path from the last sweep's source to `v`, source first.
  std::vector<Vertex> path_to(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex x = v; x != kNoVertex; x = parent_[x]) out.push_back(x);
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  void reset() {
    for (Vertex v : touched_) {
      dist_[v] = -1;
      parent_[v] = kNoVertex;
    }
    touched_.clear();
  }

  const WeightedGraph& g_;
  std::span<const char> blocked_;
  std::vector<Length> dist_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> stack_;
  std::vector<Vertex> touched_;
};

/// Fills a PendantForest by traversing from every spine vertex without
/// crossing blocked (spine) edges.
inline void explore_pendant_trees(const WeightedGraph& g, std::span<const Vertex> spine,
                                  std::span<const char> blocked, PendantForest& out) {
  const Vertex n = g.vertex_count();
  const auto m = static_cast<std::int32_t>(spine.size());
  out.anchor.assign(n, -1);
  out.depth.assign(n, -1);
  out.weight.assign(m, 0);
  out.far.assign(m, kNoVertex);
  out.offset.assign(m + 1, 0);
  out.members.clear();
  out.members.reserve(n);

  std::vector<Vertex> stack;
  for (std::int32_t k = 0; k < m; ++k) {
    const Vertex root = spine[k];
    if (out.anchor[root] != -1) throw GraphError("spine vertex repeated");
    out.offset[k] = static_cast<std::int32_t>(out.members.size());
    out.anchor[root] = k;
    out.depth[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      out.members.push_back(v);
      for (const auto& inc : g.neighbors(v)) {
        if (blocked[inc.edge]) continue;
        if (out.anchor[inc.to] == k) continue;
        if (out.anchor[inc.to] != -1) throw GraphError("pendant trees overlap");
        out.anchor[inc.to] = k;
        out.depth[inc.to] = out.depth[v] + g.edge(inc.edge).len;
        stack.push_back(inc.to);
      }
    }
    auto group = std::span(out.members).subspan(out.offset[k]);
    std::sort(group.begin(), group.end());
    Vertex far = root;
    Length w = 0;
    for (Vertex v : group) {
      if (out.depth[v] > w) {
        w = out.depth[v];
        far = v;
      }
    }
    out.weight[k] = w;
    out.far[k] = far;
  }
  out.offset[m] = static_cast<std::int32_t>(out.members.size());
  if (out.members.size() != static_cast<std::size_t>(n)) {
    throw GraphError("graph is disconnected");
  }
}

}  // namespace detail

/// Returns the unique cycle of a connected unicycle graph, in canonical
/// clockwise order: it starts at the smallest-id cycle vertex and continues
/// toward its smaller-id cycle neighbour. Found by repeatedly peeling leaves.
inline std::vector<Vertex> find_cycle(const WeightedGraph& g) {
  const Vertex n = g.vertex_count();
  const auto edges = static_cast<std::int64_t>(g.edge_count());
  if (n == 0) throw GraphError("empty graph");
  if (!is_connected(g)) throw GraphError("graph is disconnected");
  if (edges == n - 1) throw GraphError("graph is a tree (no cycle)");
  if (edges != n) throw GraphError("graph has more than one cycle");

  std::vector<std::size_t> deg(n);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) leaves.push_back(v);
  }
  std::vector<char> removed(n, 0);
  while (!leaves.empty()) {
    const Vertex v = leaves.back();
    leaves.pop_back();
    removed[v] = 1;
    for (const auto& inc : g.neighbors(v)) {
      if (!removed[inc.to] && --deg[inc.to] == 1) leaves.push_back(inc.to);
    }
  }

  Vertex start = kNoVertex;
  Vertex remaining = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (removed[v]) continue;
    if (deg[v] != 2) throw GraphError("graph has more than one cycle");
    if (start == kNoVertex) start = v;
    ++remaining;
  }
  if (start == kNoVertex) throw GraphError("graph is a tree (no cycle)");

  // First step: toward the smaller-id cycle neighbour, lowest edge id on ties.
  std::int32_t first_edge = -1;
  Vertex first_next = kNoVertex;
  for (const auto& inc : g.neighbors(start)) {
    if (removed[inc.to]) continue;
    if (first_next == kNoVertex || inc.to < first_next ||
        (inc.to == first_next && inc.edge < first_edge)) {
      first_next = inc.to;
      first_edge = inc.edge;
    }
  }

  std::vector<Vertex> cycle{start};
  Vertex cur = first_next;
  std::int32_t via = first_edge;
  while (cur != start) {
    cycle.push_back(cur);
    std::int32_t next_edge = -1;
    for (const auto& inc : g.neighbors(cur)) {
      if (removed[inc.to] || inc.edge == via) continue;
      next_edge = inc.edge;
      break;
    }
    const Edge& e = g.edge(next_edge);
    cur = e.u == cur ? e.v : e.u;
    via = next_edge;
    if (static_cast<Vertex>(cycle.size()) > remaining) {
      throw GraphError("graph has more than one cycle");
    }
  }
  if (static_cast<Vertex>(cycle.size()) != remaining) {
    throw GraphError("graph has more than one cycle");
  }
  return cycle;
}

/// Splits a unicycle graph into its cycle and the pendant trees hanging off
/// each cycle vertex.
inline CycleDecomposition decompose_unicycle(const WeightedGraph& g,
                                             std::span<const Vertex> cycle) {
  CycleDecomposition d;
  const auto m = static_cast<std::int32_t>(cycle.size());
  if (m < 2) throw GraphError("cycle must have at least two vertices");
  d.cycle.assign(cycle.begin(), cycle.end());
  d.is_cycle_edge.assign(g.edge_count(), 0);
  d.arc_len.resize(m);
  d.prefix.resize(m);
  d.cycle_edge_ids.resize(m);

  for (std::int32_t k = 0; k < m; ++k) {
    const Vertex a = cycle[k];
    const Vertex b = cycle[(k + 1) % m];
    std::int32_t pick = -1;
    for (const auto& inc : g.neighbors(a)) {
      if (inc.to != b || d.is_cycle_edge[inc.edge]) continue;
      if (pick == -1 || inc.edge < pick) pick = inc.edge;
    }
    if (pick == -1) throw GraphError("cycle vertices are not adjacent");
    d.is_cycle_edge[pick] = 1;
    d.cycle_edge_ids[k] = pick;
    d.arc_len[k] = g.edge(pick).len;
  }
  d.prefix[0] = 0;
  for (std::int32_t k = 1; k < m; ++k) d.prefix[k] = d.prefix[k - 1] + d.arc_len[k - 1];
  d.total = d.prefix[m - 1] + d.arc_len[m - 1];

  detail::explore_pendant_trees(g, d.cycle, d.is_cycle_edge, d);
  return d;
}

/// Diametral path of a tree by double sweep: farthest vertex a from vertex 0,
/// then farthest vertex b from a (smallest id on ties). The path is reported
/// from the smaller endpoint id to the larger one.
inline TreePath tree_diametral_path(const WeightedGraph& t) {
  require_tree(t);
  detail::TreeSweeper sweep(t, {});
  const auto [a, da] = sweep.farthest(0);
  (void)da;
  const auto [b, db] = sweep.farthest(a);
  TreePath out;
  out.value = db;
  out.path = sweep.path_to(b);
  if (a > b) std::reverse(out.path.begin(), out.path.end());
  out.endpoints = {out.path.front(), out.path.back()};
  return out;
}

/// Splits a tree into a diametral path and the pendant trees hanging off it.
inline PathDecomposition decompose_along_path(const WeightedGraph& t,
                                              std::span<const Vertex> path) {
  PathDecomposition d;
  const auto m = static_cast<std::int32_t>(path.size());
  if (m < 1) throw GraphError("empty path");
  d.path.assign(path.begin(), path.end());
  d.prefix.assign(m, 0);
  std::vector<char> on_path(t.edge_count(), 0);
  for (std::int32_t k = 0; k + 1 < m; ++k) {
    std::int32_t pick = -1;
    for (const auto& inc : t.neighbors(path[k])) {
      if (inc.to == path[k + 1]) {
        pick = inc.edge;
        break;
      }
    }
    if (pick == -1) throw GraphError("path vertices are not adjacent");
    on_path[pick] = 1;
    d.prefix[k + 1] = d.prefix[k] + t.edge(pick).len;
  }
  detail::explore_pendant_trees(t, d.path, on_path, d);
#ifndef NDEBUG
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    const auto k = d.anchor[v];
    assert(d.depth[v] <= std::min(d.prefix[k], d.length() - d.prefix[k]));
  }
#endif
  return d;
}

}  // namespace doat
