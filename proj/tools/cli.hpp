#pragma once

// Command-line front end: `check`, `gen` and `bench`.
// Exit codes: 0 bipartite, 1 odd cycle, 2 usage or input error, 3 internal invariant failure.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "konig/konig.hpp"

namespace konig::cli {

inline constexpr int kExitBipartite = 0;
inline constexpr int kExitOddCycle = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;

struct CheckArgs {
  std::string file;
  std::string format = "edgelist";
  std::string algo = "all";
  bool json = false;
  bool timing = false;
  std::string dot_path;
};

struct GenArgs {
  std::string kind;
  std::size_t n = 0;
  std::size_t left = 0;
  std::size_t right = 0;
  std::optional<std::size_t> m;
  std::optional<double> p;
  std::size_t cycle_len = 3;
  std::uint64_t seed = 0;
  bool loops = false;
  bool multi = false;
  double isolate_p = 0.1;
  std::string format = "edgelist";
  std::string output;
};

struct BenchArgs {
  std::vector<std::string> sizes{"1000:2000"};
  std::vector<std::uint64_t> seeds{1};
  std::vector<std::string> kinds{"random"};
  std::size_t repeat = 1;
  std::size_t cycle_len = 5;
};

inline FileFormat parse_format(const std::string& name) {
  return name == "dimacs" ? FileFormat::dimacs : FileFormat::edgelist;
}

inline int run_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    g = parse_graph(read_text_file(args.file), parse_format(args.format));
  } catch (const InputError& e) {
    err << "error: " << args.file << ": " << e.what() << '\n';
    return kExitUsage;
  }

  std::vector<Algorithm> algos;
  if (args.algo == "all") {
    algos.assign(kAllAlgorithms.begin(), kAllAlgorithms.end());
  } else {
    algos.push_back(*parse_algorithm(args.algo));
  }

  std::vector<CheckOutcome> outcomes;
  std::vector<ResultReport> reports;
  for (const auto a : algos) {
    const auto start = std::chrono::steady_clock::now();
    auto outcome = run_unverified(g, a);
    const auto stop = std::chrono::steady_clock::now();
    if (!verify_outcome(g, outcome)) {
      err << "internal error: " << to_string(a) << " returned a certificate its verifier rejects\n";
      return kExitInvariant;
    }
    std::optional<std::uint64_t> elapsed;
    if (args.timing) {
      elapsed = static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    }
    reports.push_back(make_report(g, a, outcome, elapsed));
    outcomes.push_back(std::move(outcome));
  }

  const bool bipartite = outcomes.front().is_bipartite();
  const bool agree = std::all_of(outcomes.begin(), outcomes.end(), [&](const CheckOutcome& o) {
    return o.is_bipartite() == bipartite;
  });

  if (args.json) {
    nlohmann::ordered_json doc;
    doc["n"] = g.vertex_count();
    doc["m"] = g.edge_count();
    doc["verdict"] = bipartite ? "bipartite" : "odd_cycle";
    doc["agree"] = agree;
    doc["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) doc["reports"].push_back(to_json(r));
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& r : reports) out << to_text(r);
  }

  if (!agree) {
    err << "internal error: checkers disagree on the verdict\n";
    return kExitInvariant;
  }

  if (!args.dot_path.empty()) {
    std::ofstream dot(args.dot_path, std::ios::binary);
    if (!dot) {
      err << "error: cannot write '" << args.dot_path << "'\n";
      return kExitUsage;
    }
    dot << write_dot(g, outcomes.front());
  }
  return bipartite ? kExitBipartite : kExitOddCycle;
}

inline int run_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  GenSpec spec;
  spec.kind = *parse_gen_kind(args.kind);
  spec.n = args.n;
  spec.left = args.left;
  spec.right = args.right;
  spec.m = args.m;
  spec.p = args.p;
  spec.cycle_len = args.cycle_len;
  spec.seed = args.seed;
  spec.allow_loops = args.loops;
  spec.allow_multi = args.multi;
  spec.isolate_p = args.isolate_p;

  std::string text;
  try {
    text = write_graph(generate(spec), parse_format(args.format));
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (args.output.empty()) {
    out << text;
  } else {
    std::ofstream file(args.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << args.output << "'\n";
      return kExitUsage;
    }
    file << text;
  }
  return 0;
}

inline int run_bench_command(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  BenchConfig config;
  config.repeat = args.repeat;
  config.cycle_len = args.cycle_len;
  config.seeds = args.seeds;
  for (const auto& s : args.sizes) {
    const auto colon = s.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument(s);
      std::size_t used_n = 0;
      std::size_t used_m = 0;
      const auto n = std::stoull(s.substr(0, colon), &used_n);
      const auto m = std::stoull(s.substr(colon + 1), &used_m);
      if (used_n != colon || used_m != s.size() - colon - 1) throw std::invalid_argument(s);
      config.sizes.emplace_back(n, m);
    } catch (const std::exception&) {
      err << "error: size '" << s << "' is not of the form <n>:<m>\n";
      return kExitUsage;
    }
  }
  for (const auto& k : args.kinds) {
    const auto kind = parse_gen_kind(k);
    if (!kind) {
      err << "error: unknown kind '" << k << "'\n";
      return kExitUsage;
    }
    config.kinds.push_back(*kind);
  }

  BenchResult result;
  try {
    result = run_bench(config);
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  write_bench_csv(out, result.rows);
  for (const auto& msg : result.disagreements) err << "internal error: " << msg << '\n';
  return result.disagreements.empty() ? 0 : kExitInvariant;
}

/// `args` excludes the program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certifying bipartiteness checks: every answer is a 2-coloring or an odd cycle."};
  app.name("konig");
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Check a graph file with one or all checkers");
  check_cmd->add_option("file", check_args.file, "Graph file")->required();
  check_cmd->add_option("--format", check_args.format, "Input format")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  check_cmd->add_option("--algo", check_args.algo, "Checker to run")
      ->check(CLI::IsMember({"growth", "flip", "dsu", "forest", "all"}));
  check_cmd->add_flag("--json", check_args.json, "Emit JSON");
  check_cmd->add_flag("--timing", check_args.timing, "Include checker wall time in the report");
  check_cmd->add_option("--dot", check_args.dot_path, "Write a Graphviz rendering of the certificate");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded graph");
  gen_cmd->add_option("--kind", gen_args.kind, "Graph family")
      ->required()
      ->check(CLI::IsMember({"random", "planted-bipartite", "planted-odd-cycle", "forest"}));
  gen_cmd->add_option("--n", gen_args.n, "Vertex count (random, forest)");
  gen_cmd->add_option("--left", gen_args.left, "Left side size (planted kinds)");
  gen_cmd->add_option("--right", gen_args.right, "Right side size (planted kinds)");
  auto* m_opt = gen_cmd->add_option("--m", gen_args.m, "Edge count");
  gen_cmd->add_option("--p", gen_args.p, "Edge probability")->excludes(m_opt);
  gen_cmd->add_option("--cycle-len", gen_args.cycle_len, "Odd cycle length (planted-odd-cycle)");
  gen_cmd->add_option("--seed", gen_args.seed, "Generator seed");
  gen_cmd->add_flag("--loops", gen_args.loops, "Allow loops (random)");
  gen_cmd->add_flag("--multi", gen_args.multi, "Allow parallel edges (random)");
  gen_cmd->add_option("--isolate-p", gen_args.isolate_p, "Chance a forest vertex starts a new tree");
  gen_cmd->add_option("--format", gen_args.format, "Output format")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  gen_cmd->add_option("-o,--output", gen_args.output, "Write to a file instead of stdout");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Time all four checkers on generated graphs (CSV)");
  bench_cmd->add_option("--sizes", bench_args.sizes, "Comma-separated <n>:<m> pairs")->delimiter(',');
  bench_cmd->add_option("--seeds", bench_args.seeds, "Comma-separated seeds")->delimiter(',');
  bench_cmd->add_option("--kinds", bench_args.kinds, "Comma-separated generator kinds")->delimiter(',');
  bench_cmd->add_option("--repeat", bench_args.repeat, "Repetitions per cell")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--cycle-len", bench_args.cycle_len, "Cycle length for planted-odd-cycle");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const auto code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  if (check_cmd->parsed()) return run_check(check_args, out, err);
  if (gen_cmd->parsed()) return run_gen(gen_args, out, err);
  return run_bench_command(bench_args, out, err);
}

}  // namespace konig::cli
