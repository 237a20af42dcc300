#pragma once

// Brute-force reference implementations. They are deliberately slow and share
// no traversal code with the linear-time paths, so they can serve as
// independent oracles in tests and in --verify mode.

#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doat/cycle_diameter.hpp"
#include "doat/decomposition.hpp"
#include "doat/graph.hpp"
#include "doat/shortcut_oracle.hpp"

namespace doat::reference {

inline constexpr Length kUnreachable = std::numeric_limits<Length>::max();

class DistanceMatrix {
 public:
  explicit DistanceMatrix(Vertex n)
      : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreachable) {}

  Vertex size() const { return n_; }
  Length operator()(Vertex u, Vertex v) const { return d_[index(u, v)]; }
  Length& at(Vertex u, Vertex v) { return d_[index(u, v)]; }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
  Vertex n_;
  std::vector<Length> d_;
};

/// Binary-heap Dijkstra from `src`.
inline std::vector<Length> dijkstra(const WeightedGraph& g, Vertex src) {
  std::vector<Length> dist(g.vertex_count(), kUnreachable);
  using Item = std::pair<Length, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[src] = 0;
  heap.push({0, src});
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (d != dist[v]) continue;
    for (const auto& inc : g.neighbors(v)) {
      const Length nd = d + g.edge(inc.edge).len;
      if (nd < dist[inc.to]) {
        dist[inc.to] = nd;
        heap.push({nd, inc.to});
      }
    }
  }
  return dist;
}

inline DistanceMatrix apsp(const WeightedGraph& g) {
  const Vertex n = g.vertex_count();
  DistanceMatrix out(n);
  for (Vertex s = 0; s < n; ++s) {
    const auto dist = dijkstra(g, s);
    for (Vertex v = 0; v < n; ++v) {
      if (dist[v] == kUnreachable) throw GraphError("graph is disconnected");
      out.at(s, v) = dist[v];
    }
  }
  return out;
}

struct BruteDiameter {
  Length value = 0;
  std::pair<Vertex, Vertex> pair{0, 0};
};

/// Largest entry of the distance matrix; smallest (u, v), u <= v, on ties.
inline BruteDiameter brute_diameter(const DistanceMatrix& d) {
  BruteDiameter best;
  for (Vertex u = 0; u < d.size(); ++u) {
    for (Vertex v = u + 1; v < d.size(); ++v) {
      if (d(u, v) > best.value) best = {d(u, v), {u, v}};
    }
  }
  return best;
}

inline BruteDiameter brute_diameter(const WeightedGraph& g) {
  if (g.vertex_count() == 0) throw GraphError("empty graph");
  return brute_diameter(apsp(g));
}

struct BrutePair {
  std::int32_t i = 0;
  std::int32_t j = 0;
  Length value = 0;
};

/// max over i < j of w(i) + d_C(i, j) + w(j), by direct enumeration.
inline BrutePair brute_weighted_pair(const WeightedCycle& c) {
  const auto& arcs = c.arcs();
  const auto& w = c.weights();
  const auto m = static_cast<std::int32_t>(arcs.size());
  if (m < 2) throw std::invalid_argument("weighted pair needs at least two cycle vertices");
  Length total = 0;
  for (Length a : arcs) total += a;
  BrutePair best{0, 0, -1};
  for (std::int32_t i = 0; i < m; ++i) {
    Length cw = 0;
    for (std::int32_t j = i + 1; j < m; ++j) {
      cw += arcs[j - 1];
      const Length value = w[i] + std::min(cw, total - cw) + w[j];
      if (value > best.value) best = {i, j, value};
    }
  }
  return best;
}

struct BruteAugment {
  std::pair<Vertex, Vertex> shortcut{0, 0};
  Length value = 0;
};

/// Tries every unordered vertex pair as the shortcut; smallest (u, v) wins ties.
inline BruteAugment brute_doat(const WeightedGraph& t, const ShortcutOracle& oracle) {
  require_tree(t);
  const Vertex n = t.vertex_count();
  if (n < 2) throw GraphError("augmentation needs at least two vertices");
  const auto tree_dist = apsp(t);
  BruteAugment best{{0, 0}, kUnreachable};
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      WeightedGraph g(n);
      for (const auto& e : t.edges()) g.add_edge(e.u, e.v, e.len);
      g.add_edge(u, v, oracle.length(u, v, tree_dist(u, v)));
      const Length value = brute_diameter(g).value;
      if (value < best.value) best = {{u, v}, value};
    }
  }
  return best;
}

/// Diameter after adding the critical-pair shortcut for (i, j), for every
/// j > i. Critical pairs are found by enumeration over tree distances; the
/// decomposition is only consulted for path vertices and tree membership.
inline std::vector<Length> brute_delta_profile(const WeightedGraph& t, const PathDecomposition& pd,
                                               std::int32_t i, const ShortcutOracle& oracle) {
  const Vertex n = t.vertex_count();
  const auto m = static_cast<std::int32_t>(pd.path.size());
  const auto d = apsp(t);
  std::vector<Length> out;
  for (std::int32_t j = i + 1; j < m; ++j) {
    Length best = kUnreachable;
    Vertex bx = kNoVertex;
    Vertex by = kNoVertex;
    for (Vertex x = 0; x < n; ++x) {
      if (pd.anchor[x] != i) continue;
      for (Vertex y = 0; y < n; ++y) {
        if (pd.anchor[y] != j) continue;
        const Length len = d(x, pd.path[i]) + oracle.length(x, y, d(x, y)) + d(y, pd.path[j]);
        if (len < best) {
          best = len;
          bx = x;
          by = y;
        }
      }
    }
    WeightedGraph g(n);
    for (const auto& e : t.edges()) g.add_edge(e.u, e.v, e.len);
    g.add_edge(bx, by, oracle.length(bx, by, d(bx, by)));
    out.push_back(brute_diameter(g).value);
  }
  return out;
}

}  // namespace doat::reference
