#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "doat/augment.hpp"
#include "doat/generate.hpp"
#include "doat/graph.hpp"
#include "doat/reference.hpp"
#include "doat/shortcut_oracle.hpp"
#include "doat/unicycle_diameter.hpp"

namespace doat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitMismatch = 2;

class VerifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open '" + path + "'");
  return parse_graph(in);
}

inline std::vector<Vertex> parse_sizes(const std::string& csv) {
  std::vector<Vertex> out;
  for (auto part : doat::detail::split(csv, ',')) {
    out.push_back(doat::detail::parse_number<Vertex>(part, "size"));
    if (out.back() < 3) throw std::invalid_argument("bench sizes must be >= 3");
  }
  return out;
}

inline void cmd_diameter(const std::string& file, bool verify, std::ostream& out) {
  const auto g = load_graph(file);
  const auto d = diameter(g);
  if (verify) {
    const auto brute = reference::brute_diameter(g);
    if (brute.value != d.value) {
      throw VerifyError("diameter mismatch: fast " + std::to_string(d.value) + ", brute " +
                        std::to_string(brute.value));
    }
    const Length witness = reference::dijkstra(g, d.pair.first)[d.pair.second];
    if (witness != d.value) {
      throw VerifyError("witness pair is at distance " + std::to_string(witness));
    }
  }
  out << "diameter " << d.value << "\npair " << d.pair.first << ' ' << d.pair.second << '\n';
}

inline void cmd_augment(const std::string& file, const std::string& oracle_spec, bool verify,
                        unsigned threads, std::ostream& out) {
  const auto t = load_graph(file);
  require_tree(t);
  const auto oracle = parse_oracle_spec(oracle_spec, t.vertex_count());
  const auto sol = solve_doat(t, oracle, {threads});
  if (verify) {
    const auto brute = reference::brute_doat(t, oracle);
    if (brute.value != sol.value) {
      throw VerifyError("augment mismatch: fast " + std::to_string(sol.value) + ", brute " +
                        std::to_string(brute.value));
    }
    const Length realised =
        reference::brute_diameter(with_shortcut(t, sol.x, sol.y, sol.length)).value;
    if (realised != sol.value) {
      throw VerifyError("reported shortcut yields diameter " + std::to_string(realised));
    }
  }
  out << "shortcut " << std::min(sol.x, sol.y) << ' ' << std::max(sol.x, sol.y) << "\nlength "
      << sol.length << "\ndiameter " << sol.value << '\n';
}

inline void cmd_gen(const std::string& kind, GenSpec spec, const std::string& path) {
  WeightedGraph g;
  if (kind == "tree") {
    g = random_tree(spec);
  } else if (kind == "unicycle") {
    g = random_unicycle(spec);
  } else {
    throw std::invalid_argument("gen kind must be 'tree' or 'unicycle'");
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  write_graph(f, g);
}

inline void cmd_bench(const std::string& algo, const std::string& sizes, std::uint64_t seed,
                      int reps, const std::string& oracle_spec, unsigned threads,
                      std::ostream& out) {
  if (algo != "diameter" && algo != "augment") {
    throw std::invalid_argument("bench --algo must be 'diameter' or 'augment'");
  }
  if (reps < 1) throw std::invalid_argument("bench --reps must be >= 1");
  out << "algo,n,seed,rep,micros\n";
  for (Vertex n : parse_sizes(sizes)) {
    GenSpec spec;
    spec.n = n;
    spec.seed = seed;
    spec.lo = 1;
    spec.hi = 100;
    spec.cycle = std::max<Vertex>(3, n / 2);
    const auto g = algo == "diameter" ? random_unicycle(spec) : random_tree(spec);
    const auto oracle = algo == "augment" ? parse_oracle_spec(oracle_spec, n)
                                          : ShortcutOracle::constant(1);
    for (int rep = 0; rep < reps; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      Length sink = 0;
      if (algo == "diameter") {
        sink = diameter(g).value;
      } else {
        sink = solve_doat(g, oracle, {threads}).value;
      }
      const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
      (void)sink;
      out << algo << ',' << n << ',' << seed << ',' << rep << ',' << micros << '\n';
    }
  }
}

}  // namespace detail

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out`, diagnostics to `err`. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unicycle diameter and diameter-optimal tree augmentation"};
  app.require_subcommand(1);

  std::string file;
  bool verify = false;
  std::string oracle_spec;
  unsigned threads = 1;

  auto* diam = app.add_subcommand("diameter", "Diameter of a unicycle graph");
  diam->add_option("file", file, "Graph file")->required();
  diam->add_flag("--verify", verify, "Cross-check against the brute-force oracle");

  auto* aug = app.add_subcommand("augment", "Best single shortcut for a tree");
  aug->add_option("file", file, "Tree file")->required();
  aug->add_option("--oracle", oracle_spec, "constant:C | scaled:NUM/DEN | hash:SEED:LO:HI | matrix:FILE")
      ->required();
  aug->add_flag("--verify", verify, "Cross-check against the brute-force oracle");
  aug->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 1024u));

  std::string gen_kind;
  std::string shape = "random";
  std::string out_path;
  GenSpec spec;
  spec.hi = 100;
  auto* gen = app.add_subcommand("gen", "Write a seeded random instance");
  gen->add_option("kind", gen_kind, "tree | unicycle")->required()->check(CLI::IsMember({"tree", "unicycle"}));
  gen->add_option("--n", spec.n, "Vertex count")->required();
  gen->add_option("--seed", spec.seed, "Seed")->required();
  gen->add_option("--shape", shape, "random | path | star | caterpillar | binary")
      ->check(CLI::IsMember({"random", "path", "star", "caterpillar", "binary"}));
  gen->add_option("--cycle", spec.cycle, "Cycle length (unicycle)");
  gen->add_option("--wmin", spec.lo, "Minimum edge length");
  gen->add_option("--wmax", spec.hi, "Maximum edge length");
  gen->add_option("-o,--output", out_path, "Output file")->required();

  std::string algo;
  std::string sizes;
  std::uint64_t bench_seed = 1;
  int reps = 5;
  std::string bench_oracle = "hash:1:1:100";
  auto* bench = app.add_subcommand("bench", "Time an algorithm on generated instances (CSV)");
  bench->add_option("--algo", algo, "diameter | augment")->required();
  bench->add_option("--sizes", sizes, "Comma-separated vertex counts")->required();
  bench->add_option("--seed", bench_seed, "Seed")->required();
  bench->add_option("--reps", reps, "Repetitions per size")->required();
  bench->add_option("--oracle", bench_oracle, "Oracle spec for augment");
  bench->add_option("--threads", threads, "Worker threads for augment")->check(CLI::Range(1u, 1024u));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (*diam) {
      detail::cmd_diameter(file, verify, out);
    } else if (*aug) {
      detail::cmd_augment(file, oracle_spec, verify, threads, out);
    } else if (*gen) {
      spec.shape = parse_shape(shape);
      detail::cmd_gen(gen_kind, spec, out_path);
    } else if (*bench) {
      detail::cmd_bench(algo, sizes, bench_seed, reps, bench_oracle, threads, out);
    }
  } catch (const VerifyError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}

}  // namespace doat::cli
