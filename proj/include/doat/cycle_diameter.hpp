#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "doat/graph.hpp"

namespace doat {

/// A cycle whose vertices carry non-negative weights. Index k runs clockwise
/// from 0 to m-1; arc k joins k and k+1 (mod m).
class WeightedCycle {
 public:
  WeightedCycle(std::vector<Length> arc_len, std::vector<Length> weight)
      : arc_len_(std::move(arc_len)), weight_(std::move(weight)) {
    if (arc_len_.size() != weight_.size()) {
      throw std::invalid_argument("arc and weight counts differ");
    }
    if (arc_len_.empty()) throw std::invalid_argument("empty cycle");
    prefix_.resize(arc_len_.size());
    Length run = 0;
    for (std::size_t k = 0; k < arc_len_.size(); ++k) {
      if (arc_len_[k] <= 0) throw std::invalid_argument("nonpositive arc length");
      if (weight_[k] < 0) throw std::invalid_argument("negative vertex weight");
      prefix_[k] = run;
      run += arc_len_[k];
    }
    total_ = run;
  }

  std::int32_t size() const { return static_cast<std::int32_t>(arc_len_.size()); }
  Length total() const { return total_; }
  Length weight(std::int32_t k) const { return weight_[k]; }
  Length arc(std::int32_t k) const { return arc_len_[k]; }
  Length prefix(std::int32_t k) const { return prefix_[k]; }
  const std::vector<Length>& weights() const { return weight_; }
  const std::vector<Length>& arcs() const { return arc_len_; }

  /// Clockwise path length from i to j.
  Length clockwise(std::int32_t i, std::int32_t j) const {
    return i <= j ? prefix_[j] - prefix_[i] : total_ - (prefix_[i] - prefix_[j]);
  }

  void check_index(std::int32_t k) const {
    if (k < 0 || k >= size()) throw std::out_of_range("cycle index " + std::to_string(k));
  }

 private:
  std::vector<Length> arc_len_;
  std::vector<Length> weight_;
  std::vector<Length> prefix_;
  Length total_ = 0;
};

inline Length cycle_distance(const WeightedCycle& c, std::int32_t i, std::int32_t j) {
  c.check_index(i);
  c.check_index(j);
  const Length cw = c.clockwise(i, j);
  return std::min(cw, c.total() - cw);
}

/// Whether j lies in the counterclockwise half-cycle of i: the
/// counterclockwise walk from i to j is at most half the cycle. Ties count
/// as inside.
inline bool in_ccw_half(const WeightedCycle& c, std::int32_t i, std::int32_t j) {
  c.check_index(i);
  c.check_index(j);
  if (i == j) throw std::invalid_argument("in_ccw_half requires distinct indices");
  const Length ccw = c.clockwise(j, i);
  return 2 * ccw <= c.total();
}

/// Strict complement of in_ccw_half.
inline bool in_cw_half(const WeightedCycle& c, std::int32_t i, std::int32_t j) {
  return !in_ccw_half(c, i, j);
}

/// i dominates j when w(i) > w(j) + d_C(i, j).
inline bool dominates(const WeightedCycle& c, std::int32_t i, std::int32_t j) {
  if (i == j) throw std::invalid_argument("dominates requires distinct indices");
  return c.weight(i) > c.weight(j) + cycle_distance(c, i, j);
}

inline bool mutually_undominated(const WeightedCycle& c, std::int32_t i, std::int32_t j) {
  return !dominates(c, i, j) && !dominates(c, j, i);
}

/// Stack of surviving cycle indices. Elements are pushed and popped at the
/// top; the wrap-around pass removes from the bottom.
using SurvivorSet = std::deque<std::int32_t>;

namespace detail {

inline void process_vertex(const WeightedCycle& c, std::int32_t i, SurvivorSet& s) {
  if (s.empty()) {
    s.push_back(i);
    return;
  }
  const std::int32_t top = s.back();
  if (!in_ccw_half(c, i, top) || mutually_undominated(c, i, top)) {
    s.push_back(i);
  } else if (dominates(c, i, top)) {
    s.pop_back();
    while (!s.empty() && in_ccw_half(c, i, s.back()) && dominates(c, i, s.back())) {
      s.pop_back();
    }
    s.push_back(i);
  }
  // Otherwise top dominates i and i is dropped.
}

}  // namespace detail

/// Removes every dominated cycle vertex. The first pass scans 0..m-1 with a
/// stack; the second pass re-examines stack bottoms that lie clockwise within
/// half a cycle of vertex 0 (vertex 0 included), each at most once, so that
/// pairs straddling the wrap-around are compared as well.
///
/// On return no two survivors dominate each other and every removed index is
/// dominated by some survivor.
inline SurvivorSet prune_cycle(const WeightedCycle& c) {
  const std::int32_t m = c.size();
  SurvivorSet s;
  for (std::int32_t i = 0; i < m; ++i) detail::process_vertex(c, i, s);
  if (m == 1) return s;

  std::vector<char> revisited(m, 0);
  while (!s.empty()) {
    const std::int32_t bottom = s.front();
    if (revisited[bottom]) break;
    if (bottom != 0 && !in_cw_half(c, 0, bottom)) break;
    s.pop_front();
    revisited[bottom] = 1;
    detail::process_vertex(c, bottom, s);
  }
  return s;
}

struct WeightedPair {
  std::int32_t i = 0;
  std::int32_t j = 0;
  Length value = 0;
};

/// Pair (i < j) maximizing w(i) + d_C(i, j) + w(j), given the survivors of
/// prune_cycle. With one survivor the partner is found by a linear scan;
/// otherwise each survivor is matched with its farthest survivor on either
/// half-cycle by a two-pointer sweep. Ties go to the lexicographically
/// smallest pair among those examined.
inline WeightedPair weighted_diametral_pair(const WeightedCycle& c, const SurvivorSet& s) {
  const std::int32_t m = c.size();
  if (m < 2) throw std::invalid_argument("weighted pair needs at least two cycle vertices");
  if (s.empty()) throw std::invalid_argument("empty survivor set");

  WeightedPair best{0, 0, -1};
  auto consider = [&](std::int32_t a, std::int32_t b) {
    if (a == b) return;
    if (a > b) std::swap(a, b);
    const Length value = c.weight(a) + cycle_distance(c, a, b) + c.weight(b);
    if (value > best.value || (value == best.value && (a < best.i || (a == best.i && b < best.j)))) {
      best = {a, b, value};
    }
  };

  if (s.size() == 1) {
    const std::int32_t v = s.front();
    for (std::int32_t u = 0; u < m; ++u) consider(u, v);
    return best;
  }

  std::vector<std::int32_t> order(s.begin(), s.end());
  std::sort(order.begin(), order.end());
  const auto t = static_cast<std::int64_t>(order.size());
  auto at = [&](std::int64_t q) { return order[static_cast<std::size_t>(q % t)]; };

  // q marks the last survivor (in unrolled clockwise order) whose clockwise
  // distance from order[p] is below half the cycle, i.e. the farthest
  // survivor in the clockwise half. Its successor is the farthest one in the
  // counterclockwise half. Both only move forward as p advances.
  std::int64_t q = 0;
  for (std::int64_t p = 0; p < t; ++p) {
    if (q < p) q = p;
    const std::int32_t u = order[static_cast<std::size_t>(p)];
    while (q + 1 < p + t && 2 * c.clockwise(u, at(q + 1)) < c.total()) ++q;
    if (q > p) consider(u, at(q));
    if (q + 1 < p + t) consider(u, at(q + 1));
  }
  return best;
}

}  // namespace doat
