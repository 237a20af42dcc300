#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "doat/graph.hpp"
#include "doat/splitmix.hpp"

namespace doat {

/// Constant-time shortcut lengths |e(u, v)|. Every kind is symmetric,
/// positive and deterministic.
class ShortcutOracle {
 public:
  struct Constant {
    Length c;
  };
  /// ceil(num * d_T(u, v) / den).
  struct Scaled {
    Length num;
    Length den;
  };
  /// lo + splitmix64(seed ^ (min << 32 | max)) mod (hi - lo + 1).
  struct Hash {
    std::uint64_t seed;
    Length lo;
    Length hi;
  };
  struct Matrix {
    Vertex n;
    std::vector<Length> table;  ///< row-major n x n, symmetric
  };
  using Kind = std::variant<Constant, Scaled, Hash, Matrix>;

  static ShortcutOracle constant(Length c) {
    if (c <= 0) throw std::invalid_argument("constant oracle needs a positive length");
    return ShortcutOracle(Constant{c});
  }
  static ShortcutOracle scaled(Length num, Length den) {
    if (num <= 0 || den <= 0) throw std::invalid_argument("scaled oracle needs a positive ratio");
    return ShortcutOracle(Scaled{num, den});
  }
  static ShortcutOracle hash(std::uint64_t seed, Length lo, Length hi) {
    if (lo <= 0 || hi < lo) throw std::invalid_argument("hash oracle needs 1 <= lo <= hi");
    return ShortcutOracle(Hash{seed, lo, hi});
  }
  static ShortcutOracle matrix(Vertex n, std::vector<Length> table) {
    if (table.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
      throw std::invalid_argument("matrix oracle table has the wrong size");
    }
    return ShortcutOracle(Matrix{n, std::move(table)});
  }

  /// Length of the shortcut between u and v. `tree_distance` is d_T(u, v);
  /// only the scaled kind reads it.
  Length length(Vertex u, Vertex v, Length tree_distance) const {
    return std::visit(
        [&](const auto& k) -> Length {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, Constant>) {
            return k.c;
          } else if constexpr (std::is_same_v<K, Scaled>) {
            const __int128 scaled = static_cast<__int128>(k.num) * tree_distance;
            return static_cast<Length>((scaled + k.den - 1) / k.den);
          } else if constexpr (std::is_same_v<K, Hash>) {
            const auto lo = static_cast<std::uint64_t>(std::min(u, v));
            const auto hi = static_cast<std::uint64_t>(std::max(u, v));
            const std::uint64_t key = k.seed ^ ((lo << 32) + hi);
            const auto span = static_cast<std::uint64_t>(k.hi - k.lo) + 1;
            return k.lo + static_cast<Length>(splitmix64(key) % span);
          } else {
            if (u >= k.n || v >= k.n) throw std::out_of_range("matrix oracle: vertex out of range");
            return k.table[static_cast<std::size_t>(u) * k.n + v];
          }
        },
        kind_);
  }

  bool needs_tree_distance() const { return std::holds_alternative<Scaled>(kind_); }
  const Kind& kind() const { return kind_; }

 private:
  explicit ShortcutOracle(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view s, std::string_view what) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("bad " + std::string(what) + " in oracle spec: '" +
                                std::string(s) + "'");
  }
  return value;
}

}  // namespace detail

/// Reads a matrix oracle file: lines "u v w" covering every pair u < v < n.
inline ShortcutOracle load_matrix_oracle(std::istream& in, Vertex n) {
  const auto nn = static_cast<std::size_t>(n);
  std::vector<Length> table(nn * nn, 0);
  detail::for_each_data_line(in, [&](std::string_view line, std::size_t line_no) {
    const auto f = detail::parse_ints(line, 3, line_no);
    if (f[0] < 0 || f[1] < 0 || f[0] >= n || f[1] >= n || f[0] == f[1]) {
      throw GraphError("matrix oracle line " + std::to_string(line_no) + ": bad vertex pair");
    }
    if (f[2] <= 0) {
      throw GraphError("matrix oracle line " + std::to_string(line_no) + ": nonpositive length");
    }
    table[f[0] * nn + f[1]] = f[2];
    table[f[1] * nn + f[0]] = f[2];
    return true;
  });
  for (std::size_t u = 0; u < nn; ++u) {
    for (std::size_t v = u + 1; v < nn; ++v) {
      if (table[u * nn + v] == 0) {
        throw GraphError("matrix oracle is missing pair " + std::to_string(u) + " " +
                         std::to_string(v));
      }
    }
  }
  return ShortcutOracle::matrix(n, std::move(table));
}

/// Parses `constant:C`, `scaled:NUM/DEN`, `hash:SEED:LO:HI` or `matrix:FILE`.
/// `n` is the vertex count of the tree (needed to validate matrix files).
inline ShortcutOracle parse_oracle_spec(std::string_view spec, Vertex n) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("oracle spec needs KIND:ARGS, got '" + std::string(spec) + "'");
  }
  const auto kind = spec.substr(0, colon);
  const auto args = spec.substr(colon + 1);
  if (kind == "constant") {
    return ShortcutOracle::constant(detail::parse_number<Length>(args, "constant"));
  }
  if (kind == "scaled") {
    const auto parts = detail::split(args, '/');
    if (parts.size() != 2) throw std::invalid_argument("scaled oracle needs NUM/DEN");
    return ShortcutOracle::scaled(detail::parse_number<Length>(parts[0], "numerator"),
                                  detail::parse_number<Length>(parts[1], "denominator"));
  }
  if (kind == "hash") {
    const auto parts = detail::split(args, ':');
    if (parts.size() != 3) throw std::invalid_argument("hash oracle needs SEED:LO:HI");
    return ShortcutOracle::hash(detail::parse_number<std::uint64_t>(parts[0], "seed"),
                                detail::parse_number<Length>(parts[1], "lo"),
                                detail::parse_number<Length>(parts[2], "hi"));
  }
  if (kind == "matrix") {
    std::ifstream in{std::string(args)};
    if (!in) throw std::invalid_argument("cannot open matrix file '" + std::string(args) + "'");
    return load_matrix_oracle(in, n);
  }
  throw std::invalid_argument("unknown oracle kind '" + std::string(kind) + "'");
}

}  // namespace doat
