#pragma once

#include <cstdint>
#include <utility>

#include "doat/cycle_diameter.hpp"
#include "doat/decomposition.hpp"
#include "doat/graph.hpp"

namespace doat {

enum class DiameterKind { kWithinTree, kCrossTree };

struct DiameterResult {
  Length value = 0;
  std::pair<Vertex, Vertex> pair{0, 0};
  DiameterKind kind = DiameterKind::kCrossTree;
  /// Cycle indices of the two pendant trees holding the pair (cross-tree only).
  std::pair<std::int32_t, std::int32_t> cycle_pair{-1, -1};
};

inline WeightedCycle weighted_cycle(const CycleDecomposition& d) {
  return WeightedCycle(d.arc_len, d.weight);
}

/// Diameter of a connected unicycle graph in linear time, with a witness
/// pair. A diametral pair either lies inside one pendant tree (checked by a
/// double sweep per tree) or spans two trees, in which case it is realised by
/// the farthest vertices of a vertex-weighted diametral pair on the cycle.
/// Equal candidates are resolved in favour of the cross-tree pair.
inline DiameterResult diameter(const WeightedGraph& g) {
  const auto cycle = find_cycle(g);
  const auto d = decompose_unicycle(g, cycle);
  const auto wc = weighted_cycle(d);
  const auto survivors = prune_cycle(wc);
  const auto best = weighted_diametral_pair(wc, survivors);

  DiameterResult out;
  out.value = best.value;
  out.pair = {d.far[best.i], d.far[best.j]};
  out.kind = DiameterKind::kCrossTree;
  out.cycle_pair = {best.i, best.j};

  detail::TreeSweeper sweep(g, d.is_cycle_edge);
  for (std::int32_t k = 0; k < d.size(); ++k) {
    if (d.tree_size(k) == 1) continue;
    // A pendant tree's diameter is at most twice its weight.
    if (2 * d.weight[k] <= out.value) continue;
    const auto [a, da] = sweep.farthest(d.cycle[k]);
    (void)da;
    const auto [b, db] = sweep.farthest(a);
    if (db > out.value) {
      out.value = db;
      out.pair = {a, b};
      out.kind = DiameterKind::kWithinTree;
      out.cycle_pair = {-1, -1};
    }
  }
  return out;
}

}  // namespace doat
