#pragma once

#include <algorithm>
#include <exception>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "doat/decomposition.hpp"
#include "doat/graph.hpp"
#include "doat/shortcut_oracle.hpp"
#include "doat/unicycle_diameter.hpp"

namespace doat {

// Single-shortcut augmentation of a tree. The tree is reduced to its
// diametral path P (indices 0..m-1) with vertex weights w(k) = height of the
// pendant tree at P[k]. For each i the best shortcut leaving P[i] is found by
// pruning dominated candidates and binary searching the survivors; the best
// over all i is optimal for the tree.

/// Shortcut between path indices i < j, with the tree vertices (x, y) that
/// realise the cheapest connection between T(P[i]) and T(P[j]).
struct CandidateShortcut {
  std::int32_t i = 0;
  std::int32_t j = 0;
  Length length = 0;  ///< depth(x) + |e(x, y)| + depth(y)
  Vertex x = kNoVertex;
  Vertex y = kNoVertex;

  friend bool operator==(const CandidateShortcut&, const CandidateShortcut&) = default;
};

/// Which term of the diameter decomposition a witness pair (a, b) falls in.
enum class DeltaTag { kAlpha, kBeta, kGamma, kDelta, kLambda };

constexpr std::string_view tag_name(DeltaTag t) {
  switch (t) {
    case DeltaTag::kAlpha: return "alpha";
    case DeltaTag::kBeta: return "beta";
    case DeltaTag::kGamma: return "gamma";
    case DeltaTag::kDelta: return "delta";
    case DeltaTag::kLambda: return "lambda";
  }
  return "?";
}

struct EvalResult {
  Length value = 0;
  DeltaTag tag = DeltaTag::kAlpha;
  std::int32_t a = 0;  ///< normalised witness, a < b
  std::int32_t b = 0;
};

struct VertexBest {
  CandidateShortcut shortcut;
  EvalResult eval;
  std::size_t survivors = 0;
  std::size_t evaluations = 0;
};

struct DoatSolution {
  Vertex x = kNoVertex;
  Vertex y = kNoVertex;
  Length length = 0;  ///< oracle length |e(x, y)|
  Length value = 0;   ///< diameter of T + e(x, y)
  std::int32_t i = 0;
  std::int32_t j = 0;

  friend bool operator==(const DoatSolution&, const DoatSolution&) = default;
};

inline WeightedGraph with_shortcut(const WeightedGraph& t, Vertex x, Vertex y, Length len) {
  WeightedGraph g(t.vertex_count());
  for (const auto& e : t.edges()) g.add_edge(e.u, e.v, e.len);
  g.add_edge(x, y, len);
  return g;
}

/// Tree distance between x in T(P[i]) and y in T(P[j]), i != j.
inline Length cross_tree_distance(const PathDecomposition& pd, Vertex x, Vertex y) {
  return pd.depth[x] + pd.path_distance(pd.anchor[x], pd.anchor[y]) + pd.depth[y];
}

/// All candidates (i, j) for j = i+1..m-1, each by exhaustive search over
/// T(P[i]) x T(P[j]); ties keep the smallest (x, y).
inline std::vector<CandidateShortcut> shortcut_candidates(const PathDecomposition& pd,
                                                          std::int32_t i,
                                                          const ShortcutOracle& oracle) {
  const std::int32_t m = pd.size();
  if (i < 0 || i + 1 >= m) throw std::out_of_range("shortcut_candidates: bad path index");
  std::vector<CandidateShortcut> out;
  out.reserve(static_cast<std::size_t>(m - i - 1));
  const auto from = pd.tree(i);
  for (std::int32_t j = i + 1; j < m; ++j) {
    CandidateShortcut best{i, j, std::numeric_limits<Length>::max(), kNoVertex, kNoVertex};
    const Length between = pd.path_distance(i, j);
    for (Vertex x : from) {
      for (Vertex y : pd.tree(j)) {
        const Length dt = pd.depth[x] + between + pd.depth[y];
        const Length len = pd.depth[x] + oracle.length(x, y, dt) + pd.depth[y];
        if (len < best.length) {
          best.length = len;
          best.x = x;
          best.y = y;
        }
      }
    }
    out.push_back(best);
  }
  return out;
}

/// c1 dominates c2 (same i) when |c1| + d_P(c1.j, c2.j) <= |c2|. Applied in
/// both index orders.
inline bool shortcut_dominates(const CandidateShortcut& c1, const CandidateShortcut& c2,
                               const PathDecomposition& pd) {
  if (c1.i != c2.i) throw std::invalid_argument("shortcut_dominates: different source index");
  if (c1.j == c2.j) throw std::invalid_argument("shortcut_dominates: same target index");
  return c1.length + pd.path_distance(c1.j, c2.j) <= c2.length;
}

/// Stack sweep over candidates in increasing j. Survivors keep their order,
/// are pairwise non-dominating and include an optimal candidate.
inline std::vector<CandidateShortcut> prune_shortcuts(std::span<const CandidateShortcut> cands,
                                                      const PathDecomposition& pd) {
  std::vector<CandidateShortcut> stack;
  for (const auto& c : cands) {
    if (!stack.empty() && shortcut_dominates(stack.back(), c, pd)) continue;
    while (!stack.empty() && shortcut_dominates(c, stack.back(), pd)) stack.pop_back();
    stack.push_back(c);
  }
  return stack;
}

/// Gadget for P + ē(P[i], P[j]): the path with its edge lengths, the shortcut
/// edge, and one leaf per positive weight. Vertex k < m is P[k]; leaves follow.
inline WeightedGraph delta_gadget(const PathDecomposition& pd, const CandidateShortcut& cand,
                                  std::vector<std::int32_t>* owner = nullptr) {
  const std::int32_t m = pd.size();
  std::int32_t leaves = 0;
  for (std::int32_t k = 0; k < m; ++k) leaves += pd.weight[k] > 0 ? 1 : 0;
  WeightedGraph g(m + leaves);
  for (std::int32_t k = 0; k + 1 < m; ++k) g.add_edge(k, k + 1, pd.prefix[k + 1] - pd.prefix[k]);
  g.add_edge(cand.i, cand.j, cand.length);
  if (owner) {
    owner->resize(static_cast<std::size_t>(m + leaves));
    for (std::int32_t k = 0; k < m; ++k) (*owner)[k] = k;
  }
  Vertex next = m;
  for (std::int32_t k = 0; k < m; ++k) {
    if (pd.weight[k] == 0) continue;
    if (owner) (*owner)[next] = k;
    g.add_edge(k, next++, pd.weight[k]);
  }
  return g;
}

/// Classifies a normalised witness pair (a < b) for shortcut (i, j).
inline DeltaTag classify_pair(std::int32_t a, std::int32_t b, std::int32_t i, std::int32_t j,
                              std::int32_t m) {
  const std::int32_t last = m - 1;
  if (a == 0 && b == last) return DeltaTag::kAlpha;
  if (a == 0 && b > i && b < j) return DeltaTag::kBeta;
  if (a == 0 && b > 0 && b <= i) return DeltaTag::kLambda;
  if (a > i && a < last && b == last) return DeltaTag::kGamma;
  if (a > i && b < j) return DeltaTag::kDelta;
  throw std::logic_error("witness pair does not fit any case");
}

/// Diameter of the vertex-weighted path plus ē(P[i], P[j]), computed as the
/// diameter of the gadget unicycle graph, with the witness classified.
inline EvalResult evaluate_delta(const PathDecomposition& pd, const CandidateShortcut& cand) {
  const std::int32_t m = pd.size();
  if (!(0 <= cand.i && cand.i < cand.j && cand.j < m)) {
    throw std::invalid_argument("evaluate_delta: need 0 <= i < j < m");
  }
  std::vector<std::int32_t> owner;
  const auto g = delta_gadget(pd, cand, &owner);
  const auto d = diameter(g);

  std::int32_t a = owner[d.pair.first];
  std::int32_t b = owner[d.pair.second];
  if (a == b) throw std::logic_error("gadget witness collapsed to one path index");
  if (a > b) std::swap(a, b);
  if (a > 0 && a <= cand.i) a = 0;
  if (b >= cand.j && b < m - 1) b = m - 1;
  return {d.value, classify_pair(a, b, cand.i, cand.j, m), a, b};
}

/// Best shortcut leaving P[i]: candidates, pruning, then a binary search over
/// the survivors driven by the witness classification of two neighbours.
inline VertexBest best_shortcut_for_vertex(const PathDecomposition& pd, std::int32_t i,
                                           const ShortcutOracle& oracle) {
  const auto cands = shortcut_candidates(pd, i, oracle);
  const auto surv = prune_shortcuts(cands, pd);
  const auto t = static_cast<std::int32_t>(surv.size());

  VertexBest out;
  out.survivors = surv.size();
  std::vector<std::optional<EvalResult>> memo(surv.size());
  auto eval = [&](std::int32_t pos) -> const EvalResult& {
    auto& slot = memo[static_cast<std::size_t>(pos)];
    if (!slot) {
      slot = evaluate_delta(pd, surv[pos]);
      ++out.evaluations;
    }
    return *slot;
  };
  auto pick = [&](std::int32_t pos) {
    out.shortcut = surv[pos];
    out.eval = eval(pos);
    return out;
  };
  auto better = [&](std::int32_t p, std::int32_t q) {
    // Survivors are in increasing j, so ties go to the smaller position.
    return eval(q).value < eval(p).value ? q : p;
  };
  auto increasing = [](DeltaTag tag) { return tag == DeltaTag::kBeta || tag == DeltaTag::kDelta; };
  auto decreasing = [](DeltaTag tag) { return tag == DeltaTag::kAlpha || tag == DeltaTag::kGamma; };

  std::int32_t l = 0;
  std::int32_t r = t - 1;
  while (r - l >= 2) {
    const std::int32_t k = l + (r - l) / 2;
    const DeltaTag f = eval(k).tag;
    const DeltaTag g = eval(k + 1).tag;
    if (f == DeltaTag::kLambda) return pick(k);
    if (g == DeltaTag::kLambda) return pick(k + 1);
    if (increasing(f) && increasing(g)) {
      r = k;
    } else if (decreasing(f) && decreasing(g)) {
      l = k;
    } else {
      return pick(better(k, k + 1));
    }
  }
  std::int32_t best = l;
  for (std::int32_t p = l + 1; p <= r; ++p) best = better(best, p);
  return pick(best);
}

struct SolveOptions {
  unsigned threads = 1;
};

/// Shortcut minimising the diameter of T + e(x, y). The reported solution is
/// the lexicographic minimum of (value, i, j) over all source indices i, so
/// the result does not depend on the thread count.
inline DoatSolution solve_doat(const WeightedGraph& t, const ShortcutOracle& oracle,
                               SolveOptions opts = {}) {
  require_tree(t);
  if (t.vertex_count() < 2) throw GraphError("augmentation needs at least two vertices");
  const auto tp = tree_diametral_path(t);
  const auto pd = decompose_along_path(t, tp.path);
  const std::int32_t m = pd.size();

  struct Slot {
    bool set = false;
    VertexBest best;
    std::exception_ptr error;
  };
  auto key = [](const VertexBest& v) {
    return std::make_tuple(v.eval.value, v.shortcut.i, v.shortcut.j);
  };
  auto run = [&](unsigned tid, unsigned stride, Slot& slot) {
    try {
      for (std::int32_t i = static_cast<std::int32_t>(tid); i + 1 < m;
           i += static_cast<std::int32_t>(stride)) {
        auto vb = best_shortcut_for_vertex(pd, i, oracle);
        if (!slot.set || key(vb) < key(slot.best)) {
          slot.set = true;
          slot.best = std::move(vb);
        }
      }
    } catch (...) {
      slot.error = std::current_exception();
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(m - 1)));
  std::vector<Slot> slots(threads);
  if (threads == 1) {
    run(0, 1, slots[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned tid = 0; tid < threads; ++tid) {
      pool.emplace_back([&, tid] { run(tid, threads, slots[tid]); });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& s : slots) {
    if (s.error) std::rethrow_exception(s.error);
  }

  const Slot* winner = nullptr;
  for (const auto& s : slots) {
    if (s.set && (!winner || key(s.best) < key(winner->best))) winner = &s;
  }
  const auto& c = winner->best.shortcut;
  DoatSolution sol;
  sol.x = c.x;
  sol.y = c.y;
  sol.length = oracle.length(c.x, c.y, cross_tree_distance(pd, c.x, c.y));
  sol.value = winner->best.eval.value;
  sol.i = c.i;
  sol.j = c.j;
  return sol;
}

}  // namespace doat
