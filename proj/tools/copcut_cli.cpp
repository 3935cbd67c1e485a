// Command-line front end: solve MBQPs via the copositive cutting-plane
// loop, run max-clique benchmarks, and poke at the individual pieces
// (copositivity checks, penalty sweeps, MILP export).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "copcut/copcut.hpp"
#include "copcut/json_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitSolverFailure = 3;

struct SolverFlags {
  std::string solver = "exact";
  int bits = 4;
  int sweeps = 100;
  int reads = 1000;
  std::uint64_t seed = 0;
};

copcut::QuboSampler make_sampler(const SolverFlags& f) {
  if (f.solver == "exact") return copcut::exact_sampler();
  if (f.solver == "sa") return copcut::sa_sampler(f.sweeps, f.reads, f.seed);
  throw CLI::ValidationError("--solver must be 'exact' or 'sa'");
}

void add_solver_flags(CLI::App* cmd, SolverFlags& f, int default_bits) {
  f.bits = default_bits;
  cmd->add_option("--solver", f.solver, "Ising solver: exact | sa")
      ->check(CLI::IsMember({"exact", "sa"}));
  cmd->add_option("--bits", f.bits, "discretization bits per variable");
  cmd->add_option("--sweeps", f.sweeps, "SA sweeps per read");
  cmd->add_option("--reads", f.reads, "SA reads per oracle call");
  cmd->add_option("--seed", f.seed, "RNG seed");
}

int cmd_solve(const std::string& path, const SolverFlags& sf, double radius,
              double target_width, int max_iters, bool multi_cut,
              bool escalate, const std::string& history_path) {
  copcut::Mbqp p = copcut::mbqp_from_json(copcut::load_json_file(path));

  copcut::OracleConfig oracle;
  oracle.bits = sf.bits;
  oracle.sampler = make_sampler(sf);
  oracle.stochastic = (sf.solver == "sa");
  oracle.sweeps = sf.sweeps;
  oracle.reads = sf.reads;
  oracle.seed = sf.seed;
  if (escalate && oracle.stochastic) {
    oracle.escalate_reads_max = 4 * sf.reads;
    oracle.escalate_k_max = sf.bits + 2;
  }

  copcut::SolveConfig cfg;
  cfg.initial_radius = radius;
  cfg.target_radius = target_width;
  cfg.gap_tol = target_width;
  cfg.max_iters = max_iters;
  cfg.multi_cut = multi_cut;

  copcut::SolveReport rep = copcut::solve_cop(p, oracle, cfg);
  std::printf("lower_bound %.10g\nupper_bound %.10g\niterations %d\n",
              rep.lower_bound, rep.upper_bound, rep.iterations);
  std::printf("oracle_time_s %.4f\nother_time_s %.4f\n", rep.oracle_time,
              rep.other_time);
  if (!history_path.empty()) {
    std::ofstream out(history_path, std::ios::trunc);
    out << rep.history_csv();
    std::printf("history %s\n", history_path.c_str());
  }
  return rep.status == copcut::SolveStatus::OracleFailure ? kExitSolverFailure
                                                          : kExitOk;
}

int cmd_maxclique(const std::string& path, const SolverFlags& sf,
                  double target_width, int max_iters,
                  const std::string& history_path) {
  copcut::Graph g = copcut::load_graph_file(path);
  copcut::CliqueSolveConfig cfg;
  cfg.bits = sf.bits;
  cfg.target_width = target_width;
  cfg.max_iters = max_iters;
  copcut::CliqueSolveOutcome out = copcut::solve_max_clique(
      g, make_sampler(sf), cfg, sf.solver == "exact");
  std::printf("clique_number %d\nlower_bound_raw %.10g\ncertified %d\n",
              out.clique_number_estimate, out.lower_bound_raw,
              out.certified ? 1 : 0);
  std::printf("oracle_time_s %.4f\nother_time_s %.4f\n",
              out.report.oracle_time, out.report.other_time);
  if (!history_path.empty()) {
    std::ofstream o(history_path, std::ios::trunc);
    o << out.report.history_csv();
  }
  return kExitOk;
}

int cmd_checkcop(const std::string& path, const SolverFlags& sf,
                 const std::string& samples_path) {
  copcut::SymMatrix M =
      copcut::sym_matrix_from_json(copcut::load_json_file(path));
  copcut::Discretization d = copcut::build_discretization(M.size(), sf.bits);
  copcut::QuboSampler sampler = make_sampler(sf);
  if (!samples_path.empty()) {
    // Tee the raw sample set out before interpreting it.
    copcut::QuboSampler inner = sampler;
    sampler = [&samples_path, inner](const copcut::Qubo& q) {
      copcut::SampleSet set = inner(q);
      std::ofstream out(samples_path, std::ios::trunc);
      out << copcut::sample_set_csv(set);
      return set;
    };
  }
  copcut::CopositivityVerdict v = copcut::check_copositivity(M, d, sampler);
  copcut::json j;
  j["copositive"] = v.copositive;
  j["value"] = v.value;
  if (v.copositive) {
    j["certificate"] = nullptr;
  } else {
    j["certificate"] = std::vector<double>(
        v.certificate.data(), v.certificate.data() + v.certificate.size());
  }
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int cmd_bench(const std::string& path, const std::string& out_path) {
  copcut::json j = copcut::load_json_file(path);
  copcut::BenchConfig cfg;
  if (j.contains("sizes")) cfg.sizes = j["sizes"].get<std::vector<int>>();
  if (j.contains("densities"))
    cfg.densities = j["densities"].get<std::vector<double>>();
  if (j.contains("seeds")) cfg.seeds = j["seeds"].get<int>();
  if (j.contains("base_seed")) cfg.base_seed = j["base_seed"].get<std::uint64_t>();
  if (j.contains("sweeps")) cfg.sweeps = j["sweeps"].get<int>();
  if (j.contains("reads")) cfg.reads = j["reads"].get<int>();
  if (j.contains("penalty_weight"))
    cfg.penalty_weight = j["penalty_weight"].get<double>();
  if (j.contains("methods")) {
    cfg.methods.clear();
    for (const auto& m : j["methods"]) {
      cfg.methods.push_back(
          copcut::bench_method_from_string(m.get<std::string>()));
    }
  }
  std::vector<copcut::BenchRecord> records = copcut::run_benchmark(cfg);
  copcut::write_bench_csv(records, out_path);
  std::printf("wrote %zu records to %s\n", records.size(), out_path.c_str());
  return kExitOk;
}

int cmd_penalty_sweep(const std::string& path, const std::vector<double>& weights,
                      int sweeps, int reads, std::uint64_t seed) {
  copcut::Graph g = copcut::load_graph_file(path);
  const int truth = copcut::brute_force_clique(g);
  std::printf("n %d truth %d\n", g.n, truth);
  std::printf("weight,valid_fraction,mean_normalized_size,p_succ,tts999_s\n");
  for (double w : weights) {
    copcut::Qubo q = copcut::penalty_clique_qubo(g, w);
    copcut::SampleSet set = copcut::simulated_anneal(
        q, copcut::default_anneal_params(q, sweeps, reads, seed));
    copcut::CliqueSampleMetrics met =
        copcut::clique_sample_metrics(g, set, truth);
    double mean_norm = 0.0;
    for (double v : met.normalized_sizes) mean_norm += v;
    mean_norm /= std::max<std::size_t>(1, met.normalized_sizes.size());
    const double p = copcut::p_succ_exact(set, -static_cast<double>(truth));
    const double tts =
        copcut::time_to_target({0.999, p, set.anneal_time_per_read});
    std::printf("%g,%.4f,%.4f,%.4f,%g\n", w, met.valid_fraction, mean_norm, p,
                tts);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"copositive cutting-plane solver for mixed-binary QPs"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "solve an MBQP's copositive dual");
  std::string solve_path, solve_history;
  SolverFlags solve_flags;
  double solve_radius = 10.0, solve_width = 1e-3;
  int solve_iters = 500;
  bool solve_multi = false, solve_escalate = false;
  solve->add_option("mbqp", solve_path, "MBQP JSON file")->required();
  add_solver_flags(solve, solve_flags, 4);
  solve->add_option("--radius", solve_radius, "initial dual-space ball radius");
  solve->add_option("--target-width", solve_width, "termination width / gap");
  solve->add_option("--max-iters", solve_iters, "iteration cap");
  solve->add_flag("--multi-cut", solve_multi, "apply multiple cuts per iteration");
  solve->add_flag("--escalate", solve_escalate,
                  "re-check stochastic copositive verdicts");
  solve->add_option("--history", solve_history, "write iterate history CSV");

  // maxclique
  auto* mc = app.add_subcommand("maxclique", "clique number via the 1-D copositive program");
  std::string mc_path, mc_history;
  SolverFlags mc_flags;
  double mc_width = 1e-3;
  int mc_iters = 200;
  mc->add_option("graph", mc_path, "graph file (DIMACS or JSON)")->required();
  add_solver_flags(mc, mc_flags, 1);
  mc->add_option("--target-width", mc_width, "bisection termination width");
  mc->add_option("--max-iters", mc_iters, "iteration cap");
  mc->add_option("--history", mc_history, "write iterate history CSV");

  // checkcop
  auto* cc = app.add_subcommand("checkcop", "grid copositivity check of a matrix");
  std::string cc_path, cc_samples;
  SolverFlags cc_flags;
  cc->add_option("matrix", cc_path, "matrix JSON file")->required();
  add_solver_flags(cc, cc_flags, 4);
  cc->add_option("--samples", cc_samples, "write the raw sample set CSV");

  // bench
  auto* bench = app.add_subcommand("bench", "run a benchmark suite");
  std::string bench_path, bench_out = "results.csv";
  bench->add_option("suite", bench_path, "suite config JSON")->required();
  bench->add_option("--out", bench_out, "output CSV path");

  // penalty-sweep
  auto* ps = app.add_subcommand("penalty-sweep", "penalty-QUBO weight sweep");
  std::string ps_path;
  std::vector<double> ps_weights = {0.5, 1, 2, 4, 8, 16};
  int ps_sweeps = 1000, ps_reads = 1000;
  std::uint64_t ps_seed = 0;
  ps->add_option("graph", ps_path, "graph file")->required();
  ps->add_option("--weights", ps_weights, "penalty weights")->delimiter(',');
  ps->add_option("--sweeps", ps_sweeps, "SA sweeps");
  ps->add_option("--reads", ps_reads, "SA reads");
  ps->add_option("--seed", ps_seed, "RNG seed");

  // export-milp
  auto* milp = app.add_subcommand("export-milp", "LP-format MILP export of max clique");
  std::string milp_path;
  milp->add_option("graph", milp_path, "graph file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      return cmd_solve(solve_path, solve_flags, solve_radius, solve_width,
                       solve_iters, solve_multi, solve_escalate, solve_history);
    }
    if (mc->parsed()) {
      return cmd_maxclique(mc_path, mc_flags, mc_width, mc_iters, mc_history);
    }
    if (cc->parsed()) return cmd_checkcop(cc_path, cc_flags, cc_samples);
    if (bench->parsed()) return cmd_bench(bench_path, bench_out);
    if (ps->parsed()) {
      return cmd_penalty_sweep(ps_path, ps_weights, ps_sweeps, ps_reads, ps_seed);
    }
    if (milp->parsed()) {
      std::cout << copcut::export_milp_text(copcut::load_graph_file(milp_path));
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const copcut::json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitSolverFailure;
  }
  return kExitInvalidInput;
}
