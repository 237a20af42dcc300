#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace doat {

/// Exact edge lengths and path sums. Inputs are bounded by 1e9 per edge and
/// 1e7 vertices, so every sum of edge lengths fits comfortably.
using Length = std::int64_t;
using Vertex = std::int32_t;

inline constexpr Vertex kNoVertex = -1;

/// Raised for malformed input and for graphs that violate a structural
/// precondition (not a tree, not unicyclic, disconnected, ...).
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  Vertex u;
  Vertex v;
  Length len;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex to;
  std::int32_t edge;
};

/// Undirected multigraph with positive integer edge lengths. Parallel edges
/// are allowed; self-loops are not.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(Vertex n) : adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw GraphError("negative vertex count");
  }

  std::int32_t add_edge(Vertex u, Vertex v, Length len) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
      throw GraphError("vertex id out of range: " + std::to_string(u) + " " +
                       std::to_string(v));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (len <= 0) throw GraphError("nonpositive edge length " + std::to_string(len));
    const auto id = static_cast<std::int32_t>(edges_.size());
    edges_.push_back({u, v, len});
    adj_[u].push_back({v, id});
    adj_[v].push_back({u, id});
    return id;
  }

  Vertex vertex_count() const { return static_cast<Vertex>(adj_.size()); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::int32_t id) const { return edges_[id]; }
  const std::vector<Incidence>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<Incidence>> adj_;
  std::vector<Edge> edges_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

/// Splits a line into exactly `want` signed integers.
inline std::vector<std::int64_t> parse_ints(std::string_view line, std::size_t want,
                                            std::size_t line_no) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    const auto consumed = static_cast<std::size_t>(ptr - (line.data() + pos));
    if (ec != std::errc{} || consumed == 0 ||
        (pos + consumed < line.size() && line[pos + consumed] != ' ' &&
         line[pos + consumed] != '\t')) {
      throw GraphError("line " + std::to_string(line_no) + ": malformed integer");
    }
    out.push_back(value);
    pos += consumed;
  }
  if (out.size() != want) {
    throw GraphError("line " + std::to_string(line_no) + ": expected " +
                     std::to_string(want) + " integers, found " +
                     std::to_string(out.size()));
  }
  return out;
}

/// Yields non-empty, non-comment lines together with their 1-based number.
template <typename Fn>
void for_each_data_line(std::istream& in, Fn&& fn) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!fn(line, line_no)) return;
  }
}

}  // namespace detail

/// Reads the edge-list format: a header line "n m" followed by m lines
/// "u v w". Lines starting with '#' are comments; blank lines are skipped.
inline WeightedGraph parse_graph(std::istream& in) {
  WeightedGraph g;
  std::int64_t expected = -1;
  std::int64_t seen = 0;
  detail::for_each_data_line(in, [&](std::string_view line, std::size_t line_no) {
    if (expected < 0) {
      auto header = detail::parse_ints(line, 2, line_no);
      if (header[0] < 0 || header[0] > std::numeric_limits<Vertex>::max() || header[1] < 0) {
        throw GraphError("line " + std::to_string(line_no) + ": invalid header");
      }
      g = WeightedGraph(static_cast<Vertex>(header[0]));
      expected = header[1];
      return true;
    }
    if (seen == expected) {
      throw GraphError("line " + std::to_string(line_no) + ": more edges than declared");
    }
    auto f = detail::parse_ints(line, 3, line_no);
    if (f[2] <= 0) {
      throw GraphError("line " + std::to_string(line_no) + ": nonpositive length");
    }
    if (f[0] < 0 || f[1] < 0 || f[0] >= g.vertex_count() || f[1] >= g.vertex_count()) {
      throw GraphError("line " + std::to_string(line_no) + ": vertex id out of range");
    }
    if (f[0] == f[1]) throw GraphError("line " + std::to_string(line_no) + ": self-loop");
    g.add_edge(static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]), f[2]);
    ++seen;
    return true;
  });
  if (expected < 0) throw GraphError("missing header line");
  if (seen != expected) {
    throw GraphError("expected " + std::to_string(expected) + " edges, found " +
                     std::to_string(seen));
  }
  return g;
}

inline WeightedGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

inline void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.len << '\n';
}

inline std::string to_string(const WeightedGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

/// True iff every vertex is reachable from vertex 0 (vacuously true for n <= 1).
inline bool is_connected(const WeightedGraph& g) {
  const Vertex n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  Vertex count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const auto& inc : g.neighbors(v)) {
      if (!seen[inc.to]) {
        seen[inc.to] = 1;
        ++count;
        stack.push_back(inc.to);
      }
    }
  }
  return count == n;
}

inline void require_tree(const WeightedGraph& g) {
  if (g.vertex_count() == 0) throw GraphError("empty graph");
  if (g.edge_count() + 1 != static_cast<std::size_t>(g.vertex_count())) {
    throw GraphError("not a tree: " + std::to_string(g.vertex_count()) + " vertices, " +
                     std::to_string(g.edge_count()) + " edges");
  }
  if (!is_connected(g)) throw GraphError("not a tree: graph is disconnected");
}

}  // namespace doat
