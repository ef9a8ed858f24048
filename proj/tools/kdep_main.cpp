// kdep: approximate maximum k-dependent sets on bipartite graphs.
//
// Subcommands: solve, exact, gen-worst, gen-random, verify, tight.
// Exit codes: 0 ok, 2 bad input/parameters, 3 invalid scripted matchings,
// 4 instance over the oracle threshold, 5 property violation.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kdep/kdep.hpp"

using json = nlohmann::ordered_json;
using namespace kdep;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitBadMatchings = 3;
constexpr int kExitTooLarge = 4;
constexpr int kExitViolation = 5;

double ms_since(std::chrono::steady_clock::time_point start) {
  auto d = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double, std::milli>(d).count();
}

int env_limit(const char* name, int fallback) {
  const char* value = std::getenv(name);
  if (!value) return fallback;
  try {
    return std::stoi(value);
  } catch (const std::exception&) {
    return fallback;
  }
}

int dependent_limit() { return env_limit("KDEP_ORACLE_LIMIT", kDependentOracleLimit); }

void emit(const json& report, bool as_json, const std::vector<std::string>& timing_lines) {
  if (as_json) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  for (auto& [key, value] : report.items()) {
    if (key == "timings") continue;
    if (value.is_array() && key == "iterations") {
      int i = 0;
      for (const auto& it : value) {
        std::cout << "iteration " << ++i << ":";
        for (auto& [k2, v2] : it.items()) std::cout << ' ' << k2 << '=' << v2.dump();
        std::cout << '\n';
      }
    } else if (value.is_array()) {
      std::cout << key << ":";
      for (const auto& v : value) std::cout << ' ' << v.dump();
      std::cout << '\n';
    } else if (value.is_object()) {
      std::cout << key << ":";
      for (auto& [k2, v2] : value.items()) std::cout << ' ' << k2 << '=' << v2.dump();
      std::cout << '\n';
    } else {
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                << '\n';
    }
  }
  for (const std::string& line : timing_lines) std::cout << "# timing " << line << '\n';
}

std::pair<int, int> parse_k_range(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw Error("k-range must look like A:B, got '" + spec + "'");
  int lo = std::stoi(spec.substr(0, colon));
  int hi = std::stoi(spec.substr(colon + 1));
  if (lo < 1 || hi < lo) throw Error("bad k-range '" + spec + "'");
  return {lo, hi};
}

// --- solve ---------------------------------------------------------------

int cmd_solve(const std::string& file, int k, const std::string& matchings_file,
              const std::string& solution_out, bool as_json) {
  auto t0 = std::chrono::steady_clock::now();
  Graph g;
  try {
    g = load_graph(file);
  } catch (const NotBipartiteError& e) {
    std::cerr << "error: " << e.what() << "; odd cycle:";
    for (int v : e.odd_cycle) std::cerr << ' ' << v;
    std::cerr << "\n";
    return kExitBadInput;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  double parse_ms = ms_since(t0);

  MatchingProvider provider = default_provider();
  if (!matchings_file.empty()) {
    try {
      provider = scripted_provider(g.vertex_count(), load_matchings(matchings_file));
    } catch (const ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitBadInput;
    } catch (const InvalidProviderError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitBadMatchings;
    }
  }

  auto t1 = std::chrono::steady_clock::now();
  VertexSet solution;
  RunTrace trace;
  try {
    std::tie(solution, trace) = solve(g, k, provider);
  } catch (const InvalidProviderError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadMatchings;
  } catch (const InvalidKError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  double solve_ms = ms_since(t1);

  long long bound_lhs = static_cast<long long>(k) * solution.size();
  long long bound_rhs = static_cast<long long>(k) * g.vertex_count() - trace.removed_count();

  json report;
  report["command"] = "solve";
  report["instance"] = file;
  report["n"] = g.vertex_count();
  report["m"] = g.edge_count();
  report["k"] = k;
  report["provider"] = provider.name;
  report["iterations"] = json::array();
  for (const auto& it : trace.iterations)
    report["iterations"].push_back(
        {{"matching_size", it.matching.size()},
         {"residual_edges", it.residual_edges_after}});
  report["removed_total"] = trace.removed_count();
  report["cover_size"] = trace.final_cover.size();
  report["solution_size"] = solution.size();
  report["solution"] = solution;
  report["removal_bound"] = {{"lhs", bound_lhs}, {"rhs", bound_rhs},
                      {"holds", check_removal_bound(trace)}};
  report["timings"] = {{"parse_ms", parse_ms}, {"solve_ms", solve_ms}};
  emit(report, as_json,
       {"parse_ms=" + std::to_string(parse_ms), "solve_ms=" + std::to_string(solve_ms)});

  if (!solution_out.empty()) {
    std::ofstream out(solution_out);
    if (!out) {
      std::cerr << "error: cannot write '" << solution_out << "'\n";
      return kExitBadInput;
    }
    write_solution(solution, out);
  }
  return kExitOk;
}

// --- exact ---------------------------------------------------------------

int cmd_exact(const std::string& file, int k, std::optional<int> limit, bool as_json) {
  Graph g;
  try {
    g = load_graph(file);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  int effective_limit = limit.value_or(dependent_limit());

  auto t0 = std::chrono::steady_clock::now();
  OracleResult result;
  try {
    result = exact_max_k_dependent(g, k, effective_limit);
  } catch (const TooLargeError& e) {
    std::cerr << "error: " << e.what() << " (override with --limit)\n";
    return kExitTooLarge;
  } catch (const InvalidKError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  double oracle_ms = ms_since(t0);

  json report;
  report["command"] = "exact";
  report["instance"] = file;
  report["n"] = g.vertex_count();
  report["m"] = g.edge_count();
  report["k"] = k;
  report["optimum_size"] = result.size;
  report["optimum"] = result.optimum;
  report["nodes_explored"] = result.nodes_explored;
  report["certified"] = result.certified;
  report["timings"] = {{"oracle_ms", oracle_ms}};
  emit(report, as_json, {"oracle_ms=" + std::to_string(oracle_ms)});
  return kExitOk;
}

// --- generators ----------------------------------------------------------

int cmd_gen_worst(int k, std::string prefix) {
  WorstCaseInstance inst;
  try {
    inst = generate_worst_case(k);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  if (prefix.empty()) prefix = "worst" + std::to_string(k);

  save_graph(inst.graph, prefix + ".el");
  {
    std::ofstream out(prefix + ".matchings");
    write_matchings(inst.scripted, out);
  }
  json meta;
  meta["k"] = inst.k;
  meta["n"] = inst.graph.vertex_count();
  meta["m"] = inst.graph.edge_count();
  meta["a_ids"] = inst.a_ids;
  meta["b_ids"] = inst.b_ids;
  meta["u"] = inst.u_id;
  meta["w"] = inst.w_id;
  meta["expected_opt"] = inst.expected_opt;
  meta["expected_alg"] = inst.expected_alg;
  meta["residual_ab_edges"] = json::array();
  for (const Edge& e : inst.expected_residual_ab)
    meta["residual_ab_edges"].push_back({e.u, e.v});
  meta["residual_path"] = inst.expected_path;
  meta["matchings"] = json::array();
  for (const Matching& m : inst.scripted) {
    json block = json::array();
    for (const Edge& e : m.pairs) block.push_back({e.u, e.v});
    meta["matchings"].push_back(block);
  }
  {
    std::ofstream out(prefix + ".meta.json");
    out << meta.dump(2) << "\n";
  }
  std::cout << "wrote " << prefix << ".el " << prefix << ".matchings " << prefix
            << ".meta.json\n";
  return kExitOk;
}

int cmd_gen_random(int n, double p, std::uint64_t seed, const std::string& out_file) {
  Graph g;
  try {
    g = random_bipartite(n, p, seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  save_graph(g, out_file);
  std::cout << "wrote " << out_file << " (n=" << g.vertex_count()
            << " m=" << g.edge_count() << ")\n";
  return kExitOk;
}

// --- verify / tight ------------------------------------------------------

int run_tight_sweep(int k_lo, int k_hi, bool as_json) {
  json rows = json::array();
  for (int k = k_lo; k <= k_hi; ++k) {
    TightnessReport r;
    try {
      r = demonstrate_tightness(k, 8, std::max(dependent_limit(), 2 * (8 + 2)));
    } catch (const TightnessViolationError& e) {
      std::cerr << "tightness violation: " << e.what() << "\n";
      return kExitViolation;
    }
    json row = {{"k", k},
                {"n", r.n},
                {"m", r.m},
                {"alg", r.alg_size},
                {"opt", r.opt_size},
                {"opt_basis", r.opt_certified ? "oracle" : "construction"},
                {"ratio", r.achieved.str()},
                {"bound", r.bound.str()},
                {"equal", r.equals_bound}};
    if (as_json) {
      rows.push_back(row);
    } else {
      std::cout << "k=" << k << ": n=" << r.n << " m=" << r.m << " alg=" << r.alg_size
                << " opt=" << r.opt_size << " ("
                << (r.opt_certified ? "oracle" : "construction") << ") ratio="
                << r.achieved.str() << " bound=" << r.bound.str()
                << " equal=" << (r.equals_bound ? "yes" : "no") << "\n";
    }
  }
  if (as_json) std::cout << rows.dump(2) << "\n";
  return kExitOk;
}

struct TrialOutcome {
  bool feasible = false, removal_bound = false, missed_edges_bound = false, ratio = false;
  bool ok() const { return feasible && removal_bound && missed_edges_bound && ratio; }
};

int cmd_verify(int k, int trials, int max_n, std::uint64_t seed, bool tight,
               const std::string& k_range, bool as_json) {
  if (tight) {
    auto [lo, hi] = parse_k_range(k_range.empty() ? "1:10" : k_range);
    return run_tight_sweep(lo, hi, as_json);
  }
  if (k < 1) {
    std::cerr << "error: verify requires -k >= 1\n";
    return kExitBadInput;
  }
  int oracle_cap = dependent_limit();
  if (max_n > oracle_cap) {
    std::cerr << "error: --max-n " << max_n << " exceeds the oracle limit " << oracle_cap
              << " (raise KDEP_ORACLE_LIMIT)\n";
    return kExitBadInput;
  }

  const double p_choices[] = {0.1, 0.2, 0.3, 0.5};
  std::mt19937_64 rng(seed);
  json rows = json::array();
  for (int t = 0; t < trials; ++t) {
    int n = 4 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, max_n - 3)));
    double p = p_choices[rng() % 4];
    std::uint64_t graph_seed = rng();
    Graph g = random_bipartite(n, p, graph_seed);

    auto [s, trace] = solve(g, k);
    OracleResult opt = exact_max_k_dependent(g, k, oracle_cap);

    TrialOutcome out;
    out.feasible = is_k_dependent(g, s, k);
    out.removal_bound = check_removal_bound(trace);
    out.missed_edges_bound = check_missed_edges_bound(g, k, trace, opt.optimum).first;
    out.ratio = check_ratio(static_cast<long long>(s.size()), opt.size, k);

    if (as_json) {
      rows.push_back({{"trial", t},
                      {"n", n},
                      {"m", g.edge_count()},
                      {"p", p},
                      {"alg", s.size()},
                      {"opt", opt.size},
                      {"feasible", out.feasible},
                      {"removal_bound", out.removal_bound},
                      {"missed_edges_bound", out.missed_edges_bound},
                      {"ratio", out.ratio}});
    } else {
      std::cout << "trial " << t << ": n=" << n << " m=" << g.edge_count() << " alg="
                << s.size() << " opt=" << opt.size << " feasible=" << out.feasible
                << " removal_bound=" << out.removal_bound << " missed_edges_bound=" << out.missed_edges_bound
                << " ratio=" << out.ratio << "\n";
    }
    if (!out.ok()) {
      std::string repro = "kdep_violation_k" + std::to_string(k) + "_trial" +
                          std::to_string(t) + ".el";
      std::ofstream rf(repro);
      rf << "# reproducer trial=" << t << " k=" << k << " p=" << p
         << " graph_seed=" << graph_seed << " sweep_seed=" << seed << "\n";
      serialize_edge_list(g, rf);
      std::cerr << "violation at trial " << t << "; reproducer written to " << repro << "\n";
      if (as_json) std::cout << rows.dump(2) << "\n";
      return kExitViolation;
    }
  }
  if (as_json) {
    std::cout << rows.dump(2) << "\n";
  } else {
    std::cout << "all " << trials << " trials passed\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximum k-dependent set approximation on bipartite graphs"};
  app.require_subcommand(1);

  // solve
  std::string solve_file, solve_matchings, solve_out;
  int solve_k = 1;
  bool solve_json = false;
  auto* solve_cmd = app.add_subcommand("solve", "run the k-round approximation");
  solve_cmd->add_option("file", solve_file, "edge-list file")->required();
  solve_cmd->add_option("-k", solve_k, "dependence bound k >= 1")->required();
  solve_cmd->add_option("--matchings", solve_matchings, "scripted matchings sidecar");
  solve_cmd->add_option("-o,--solution", solve_out, "write solution file (one id per line)");
  solve_cmd->add_flag("--json", solve_json, "JSON report");

  // exact
  std::string exact_file;
  int exact_k = 1;
  std::optional<int> exact_limit;
  bool exact_json = false;
  auto* exact_cmd = app.add_subcommand("exact", "certified optimum by brute force");
  exact_cmd->add_option("file", exact_file, "edge-list file")->required();
  exact_cmd->add_option("-k", exact_k, "dependence bound k >= 0")->required();
  exact_cmd->add_option("--limit", exact_limit, "override the oracle size threshold");
  exact_cmd->add_flag("--json", exact_json, "JSON report");

  // gen-worst
  int gw_k = 1;
  std::string gw_prefix;
  auto* gw_cmd = app.add_subcommand("gen-worst", "emit the tight instance for k");
  gw_cmd->add_option("-k", gw_k, "family parameter k >= 1")->required();
  gw_cmd->add_option("-o,--out-prefix", gw_prefix, "output prefix (default worst<k>)");

  // gen-random
  int gr_n = 0;
  double gr_p = 0.0;
  std::uint64_t gr_seed = 0;
  std::string gr_out = "random.el";
  auto* gr_cmd = app.add_subcommand("gen-random", "emit a random bipartite instance");
  gr_cmd->add_option("-n", gr_n, "vertex count")->required();
  gr_cmd->add_option("-p", gr_p, "edge probability in [0,1]")->required();
  gr_cmd->add_option("--seed", gr_seed, "RNG seed")->required();
  gr_cmd->add_option("-o", gr_out, "output file (default random.el)");

  // verify
  int v_k = 0, v_trials = 100, v_max_n = 14;
  std::uint64_t v_seed = 1;
  bool v_tight = false, v_json = false;
  std::string v_k_range;
  auto* v_cmd = app.add_subcommand("verify", "property sweep against the oracle");
  v_cmd->add_option("-k", v_k, "dependence bound");
  v_cmd->add_option("--trials", v_trials, "number of random instances");
  v_cmd->add_option("--max-n", v_max_n, "largest instance size");
  v_cmd->add_option("--seed", v_seed, "sweep seed");
  v_cmd->add_flag("--tight", v_tight, "check the worst-case family instead");
  v_cmd->add_option("--k-range", v_k_range, "A:B range for --tight");
  v_cmd->add_flag("--json", v_json, "JSON report");

  // tight
  std::string t_k_range = "1:10";
  int t_k = 0;
  bool t_json = false;
  auto* t_cmd = app.add_subcommand("tight", "demonstrate the exact ratio bound");
  t_cmd->add_option("--k-range", t_k_range, "A:B sweep range (default 1:10)");
  t_cmd->add_option("-k", t_k, "single k instead of a range");
  t_cmd->add_flag("--json", t_json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (solve_cmd->parsed())
      return cmd_solve(solve_file, solve_k, solve_matchings, solve_out, solve_json);
    if (exact_cmd->parsed()) return cmd_exact(exact_file, exact_k, exact_limit, exact_json);
    if (gw_cmd->parsed()) return cmd_gen_worst(gw_k, gw_prefix);
    if (gr_cmd->parsed()) return cmd_gen_random(gr_n, gr_p, gr_seed, gr_out);
    if (v_cmd->parsed())
      return cmd_verify(v_k, v_trials, v_max_n, v_seed, v_tight, v_k_range, v_json);
    if (t_cmd->parsed()) {
      if (t_k > 0) return run_tight_sweep(t_k, t_k, t_json);
      auto [lo, hi] = parse_k_range(t_k_range);
      return run_tight_sweep(lo, hi, t_json);
    }
  } catch (const TooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const InvalidProviderError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadMatchings;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
