#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "doat/graph.hpp"
#include "doat/splitmix.hpp"

namespace doat {

enum class Shape { kRandom, kPath, kStar, kCaterpillar, kBinary };

inline Shape parse_shape(std::string_view s) {
  if (s == "random") return Shape::kRandom;
  if (s == "path") return Shape::kPath;
  if (s == "star") return Shape::kStar;
  if (s == "caterpillar") return Shape::kCaterpillar;
  if (s == "binary") return Shape::kBinary;
  throw std::invalid_argument("unknown shape '" + std::string(s) + "'");
}

struct GenSpec {
  Vertex n = 1;
  std::uint64_t seed = 0;
  Shape shape = Shape::kRandom;
  Length lo = 1;
  Length hi = 1;
  Vertex cycle = 3;  ///< unicycle only
};

namespace detail {

inline void check_spec(const GenSpec& s) {
  if (s.n < 1) throw std::invalid_argument("generator needs n >= 1");
  if (s.lo < 1 || s.hi < s.lo) throw std::invalid_argument("generator needs 1 <= lo <= hi");
}

/// Parent of vertex k (> first) in the skeleton for `shape`. Vertices
/// [0, first) form the core (a single root for trees, the cycle otherwise).
inline Vertex skeleton_parent(const GenSpec& s, Vertex k, Vertex first, SplitMix64& rng) {
  switch (s.shape) {
    case Shape::kRandom: return static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(k)));
    case Shape::kPath: return k - 1;
    case Shape::kStar: return 0;
    case Shape::kBinary: return (k - 1) / 2;
    case Shape::kCaterpillar: {
      // Spine of ceil(n/2) vertices beyond the core; the rest are legs.
      const Vertex spine_end = first + (s.n - first + 1) / 2;
      if (k < spine_end) return k - 1;
      return first + (k - spine_end) % (spine_end - first);
    }
  }
  return 0;
}

}  // namespace detail

/// Seeded tree with exactly n-1 edges. Vertex k > 0 attaches to a parent in
/// [0, k) chosen by the shape; lengths are uniform in [lo, hi].
inline WeightedGraph random_tree(const GenSpec& spec) {
  detail::check_spec(spec);
  SplitMix64 rng(spec.seed);
  WeightedGraph g(spec.n);
  for (Vertex k = 1; k < spec.n; ++k) {
    const Vertex parent = detail::skeleton_parent(spec, k, 1, rng);
    g.add_edge(parent, k, rng.in_range(spec.lo, spec.hi));
  }
  return g;
}

/// Seeded unicycle graph: cycle 0..m-1, remaining vertices hung off earlier
/// vertices as pendant trees. Exactly n edges.
inline WeightedGraph random_unicycle(const GenSpec& spec) {
  detail::check_spec(spec);
  if (spec.cycle < 3 || spec.cycle > spec.n) {
    throw std::invalid_argument("unicycle generator needs 3 <= cycle <= n");
  }
  SplitMix64 rng(spec.seed);
  WeightedGraph g(spec.n);
  const Vertex m = spec.cycle;
  for (Vertex k = 0; k < m; ++k) g.add_edge(k, (k + 1) % m, rng.in_range(spec.lo, spec.hi));
  for (Vertex k = m; k < spec.n; ++k) {
    const Vertex parent = detail::skeleton_parent(spec, k, m, rng);
    g.add_edge(parent, k, rng.in_range(spec.lo, spec.hi));
  }
  return g;
}

}  // namespace doat
