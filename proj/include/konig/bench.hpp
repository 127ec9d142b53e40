#pragma once

// Cross-checker benchmark: every (kind, size, seed) cell is generated once and run through all
// four checkers `repeat` times. Rows are sorted by (algorithm, kind, n, m, seed, rep), where
// algorithm and kind follow declaration order.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "konig/algorithms/check.hpp"
#include "konig/generators.hpp"

namespace konig {

inline constexpr std::string_view kBenchCsvHeader =
    "algorithm,kind,n,m,seed,rep,verdict,elapsed_ns,ops_counter";

struct BenchConfig {
  std::vector<std::pair<std::size_t, std::size_t>> sizes;  // (n, m)
  std::vector<std::uint64_t> seeds;
  std::vector<GenKind> kinds;
  std::size_t repeat = 1;
  std::size_t cycle_len = 5;  // planted-odd-cycle
};

struct BenchRow {
  Algorithm algorithm;
  GenKind kind;
  std::size_t n;
  std::size_t m;
  std::uint64_t seed;
  std::size_t rep;
  bool bipartite;
  std::uint64_t elapsed_ns;
  std::uint64_t ops;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  std::vector<std::string> disagreements;  // one message per inconsistent cell
};

/// Maps a benchmark cell onto a generator spec. Planted kinds split n as evenly as possible;
/// planted-odd-cycle spends cycle_len of the n vertices on the cycle.
inline GenSpec bench_spec(GenKind kind, std::size_t n, std::size_t m, std::uint64_t seed,
                          std::size_t cycle_len) {
  GenSpec spec;
  spec.kind = kind;
  spec.seed = seed;
  spec.cycle_len = cycle_len;
  switch (kind) {
    case GenKind::random:
      spec.n = n;
      spec.m = m;
      break;
    case GenKind::planted_bipartite:
      spec.left = n / 2;
      spec.right = n - n / 2;
      spec.m = m;
      break;
    case GenKind::planted_odd_cycle: {
      const auto base = n > cycle_len ? n - cycle_len : 0;
      spec.left = base / 2;
      spec.right = base - base / 2;
      spec.m = m;
      break;
    }
    case GenKind::forest:
      spec.n = n;
      break;
  }
  return spec;
}

inline BenchResult run_bench(const BenchConfig& config) {
  BenchResult result;
  for (const auto kind : config.kinds) {
    for (const auto& [n, m] : config.sizes) {
      for (const auto seed : config.seeds) {
        const auto g = generate(bench_spec(kind, n, m, seed, config.cycle_len));
        std::optional<bool> cell_verdict;
        bool consistent = true;
        for (const auto algo : kAllAlgorithms) {
          for (std::size_t rep = 0; rep < config.repeat; ++rep) {
            CheckStats stats;
            const auto start = std::chrono::steady_clock::now();
            auto outcome = run_unverified(g, algo, &stats);
            const auto stop = std::chrono::steady_clock::now();
            if (!verify_outcome(g, outcome)) {
              throw InvariantError(std::string(to_string(algo)) + " produced an invalid certificate");
            }
            const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start);
            result.rows.push_back({algo, kind, g.vertex_count(), g.edge_count(), seed, rep,
                                   outcome.is_bipartite(), static_cast<std::uint64_t>(ns.count()),
                                   stats.ops});
            if (!cell_verdict) cell_verdict = outcome.is_bipartite();
            consistent = consistent && *cell_verdict == outcome.is_bipartite();
          }
        }
        if (!consistent) {
          result.disagreements.push_back("verdicts disagree for kind=" + std::string(to_string(kind)) +
                                         " n=" + std::to_string(g.vertex_count()) +
                                         " m=" + std::to_string(g.edge_count()) +
                                         " seed=" + std::to_string(seed));
        }
      }
    }
  }
  std::stable_sort(result.rows.begin(), result.rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.algorithm, a.kind, a.n, a.m, a.seed, a.rep) <
           std::tie(b.algorithm, b.kind, b.n, b.m, b.seed, b.rep);
  });
  return result;
}

inline void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchCsvHeader << '\n';
  for (const auto& r : rows) {
    out << to_string(r.algorithm) << ',' << to_string(r.kind) << ',' << r.n << ',' << r.m << ','
        << r.seed << ',' << r.rep << ',' << (r.bipartite ? "bipartite" : "odd_cycle") << ','
        << r.elapsed_ns << ',' << r.ops << '\n';
  }
}

}  // namespace konig
