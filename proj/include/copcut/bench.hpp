#ifndef COPCUT_BENCH_HPP
#define COPCUT_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "copcut/anneal.hpp"
#include "copcut/clique.hpp"
#include "copcut/graph.hpp"
#include "copcut/metrics.hpp"

namespace copcut {

enum class BenchMethod { BruteForce, CopositiveExact, CopositiveSa, PenaltySa };

inline const char* to_string(BenchMethod m) {
  switch (m) {
    case BenchMethod::BruteForce: return "brute-force";
    case BenchMethod::CopositiveExact: return "copositive-exact";
    case BenchMethod::CopositiveSa: return "copositive-sa";
    case BenchMethod::PenaltySa: return "penalty-sa";
  }
  return "?";
}

inline BenchMethod bench_method_from_string(const std::string& s) {
  if (s == "brute-force") return BenchMethod::BruteForce;
  if (s == "copositive-exact") return BenchMethod::CopositiveExact;
  if (s == "copositive-sa") return BenchMethod::CopositiveSa;
  if (s == "penalty-sa") return BenchMethod::PenaltySa;
  throw std::invalid_argument("unknown bench method: " + s);
}

struct BenchRecord {
  std::string instance_id;
  int n = 0;
  double density = 0.0;
  std::uint64_t seed = 0;
  BenchMethod method = BenchMethod::BruteForce;
  int sweeps = 0;
  int reads = 0;
  int value = 0;
  int truth = 0;
  bool correct = false;
  double oracle_time_s = 0.0;
  double other_time_s = 0.0;
  double ttt99_s = std::numeric_limits<double>::infinity();
  double ttt999_s = std::numeric_limits<double>::infinity();
};

struct BenchConfig {
  std::vector<int> sizes = {8, 10, 12, 14};
  std::vector<double> densities = {0.25, 0.5, 0.75};
  int seeds = 25;
  std::uint64_t base_seed = 1;
  std::vector<BenchMethod> methods = {BenchMethod::BruteForce,
                                      BenchMethod::CopositiveExact};
  int sweeps = 100;
  int reads = 1000;
  double penalty_weight = 2.0;
};

inline const char* kBenchCsvHeader =
    "instance_id,n,density,seed,method,sweeps,reads,value,truth,correct,"
    "oracle_time_s,other_time_s,ttt99_s,ttt999_s";

namespace detail {

inline std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

inline std::uint64_t instance_seed(std::uint64_t base, int n, double density,
                                   int rep) {
  return splitmix64(base ^ splitmix64(static_cast<std::uint64_t>(n) * 1000003 +
                                      static_cast<std::uint64_t>(density * 1000) * 101 +
                                      static_cast<std::uint64_t>(rep)));
}

inline BenchRecord run_one(const BenchConfig& cfg, int n, double density,
                           int rep, BenchMethod method) {
  const std::uint64_t seed = instance_seed(cfg.base_seed, n, density, rep);
  Graph g = erdos_renyi(n, density, seed);
  const int truth = brute_force_clique(g);

  BenchRecord rec;
  {
    std::ostringstream id;
    id << "er_n" << n << "_d" << density << "_s" << rep;
    rec.instance_id = id.str();
  }
  rec.n = n;
  rec.density = density;
  rec.seed = seed;
  rec.method = method;
  rec.truth = truth;

  const auto t0 = std::chrono::steady_clock::now();
  switch (method) {
    case BenchMethod::BruteForce: {
      rec.value = brute_force_clique(g);
      break;
    }
    case BenchMethod::CopositiveExact: {
      CliqueSolveOutcome out = solve_max_clique(g, exact_sampler());
      rec.value = out.clique_number_estimate;
      rec.oracle_time_s = out.report.oracle_time;
      rec.other_time_s = out.report.other_time;
      break;
    }
    case BenchMethod::CopositiveSa: {
      rec.sweeps = cfg.sweeps;
      rec.reads = cfg.reads;
      CliqueSolveOutcome out = solve_max_clique(
          g, sa_sampler(cfg.sweeps, cfg.reads, seed), {}, false);
      rec.value = out.clique_number_estimate;
      rec.oracle_time_s = out.report.oracle_time;
      rec.other_time_s = out.report.other_time;
      break;
    }
    case BenchMethod::PenaltySa: {
      rec.sweeps = cfg.sweeps;
      rec.reads = cfg.reads;
      Qubo q = penalty_clique_qubo(g, cfg.penalty_weight);
      SampleSet set = simulated_anneal(
          q, default_anneal_params(q, cfg.sweeps, cfg.reads, seed));
      rec.oracle_time_s = set.anneal_time_per_read * cfg.reads;
      // Lower bound only from samples that are actual cliques.
      int best = 0;
      auto adj = g.adjacency();
      for (const Sample& s : set.samples) {
        std::vector<int> chosen;
        for (int i = 0; i < g.n; ++i) {
          if (s.assignment[i]) chosen.push_back(i);
        }
        bool clique = true;
        for (std::size_t a = 0; a < chosen.size() && clique; ++a) {
          for (std::size_t b = a + 1; b < chosen.size(); ++b) {
            if (!adj[chosen[a]][chosen[b]]) {
              clique = false;
              break;
            }
          }
        }
        if (clique) best = std::max(best, static_cast<int>(chosen.size()));
      }
      rec.value = best;
      const double p = p_succ_exact(set, -static_cast<double>(truth));
      rec.ttt99_s = time_to_target({0.99, p, set.anneal_time_per_read});
      rec.ttt999_s = time_to_target({0.999, p, set.anneal_time_per_read});
      break;
    }
  }
  const auto t1 = std::chrono::steady_clock::now();
  if (rec.other_time_s == 0.0 && rec.oracle_time_s == 0.0) {
    rec.other_time_s = std::chrono::duration<double>(t1 - t0).count();
  }
  rec.correct = (rec.value == rec.truth);
  return rec;
}

}  // namespace detail

inline std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg) {
  if (cfg.methods.empty()) {
    throw std::invalid_argument("run_benchmark: empty method list");
  }
  if (cfg.sizes.empty() || cfg.densities.empty() || cfg.seeds < 1) {
    throw std::invalid_argument("run_benchmark: empty suite");
  }
  std::vector<BenchRecord> records;
  for (int n : cfg.sizes) {
    for (double density : cfg.densities) {
      for (int rep = 0; rep < cfg.seeds; ++rep) {
        for (BenchMethod method : cfg.methods) {
          records.push_back(detail::run_one(cfg, n, density, rep, method));
        }
      }
    }
  }
  std::sort(records.begin(), records.end(),
            [](const BenchRecord& a, const BenchRecord& b) {
              return std::tie(a.n, a.density, a.seed, a.method) <
                     std::tie(b.n, b.density, b.seed, b.method);
            });
  return records;
}

inline std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream os;
  os << kBenchCsvHeader << '\n';
  for (const BenchRecord& r : records) {
    os << r.instance_id << ',' << r.n << ',' << detail::format_double(r.density)
       << ',' << r.seed << ',' << to_string(r.method) << ',' << r.sweeps << ','
       << r.reads << ',' << r.value << ',' << r.truth << ','
       << (r.correct ? 1 : 0) << ',' << detail::format_double(r.oracle_time_s)
       << ',' << detail::format_double(r.other_time_s) << ','
       << detail::format_double(r.ttt99_s) << ','
       << detail::format_double(r.ttt999_s) << '\n';
  }
  return os.str();
}

/// Writes the CSV through a temp file and rename, so readers never see a
/// partial file.
inline void write_bench_csv(const std::vector<BenchRecord>& records,
                            const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
    out << bench_csv(records);
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::runtime_error("rename failed: " + path);
  }
}

struct SweepEntry {
  int sweeps = 0;
  double p_succ = 0.0;
  double ttt_s = std::numeric_limits<double>::infinity();
};

struct SweepTable {
  std::vector<SweepEntry> entries;
  int argmin_sweeps = 0;
};

/// Grid search over sweep counts at fixed reads: measures the per-read
/// success probability against the brute-force ground state and reports
/// TTT at 99% confidence. Ties (all infinite) break to the smallest
/// sweep count.
inline SweepTable sweep_grid(const Qubo& q, const std::vector<int>& candidates,
                             int reads, std::uint64_t seed,
                             double confidence = 0.99) {
  if (candidates.empty()) {
    throw std::invalid_argument("sweep_grid: empty candidate list");
  }
  const double ground = brute_force_solve(q).min_energy;
  SweepTable table;
  bool have_best = false;
  double best = std::numeric_limits<double>::infinity();
  for (int sweeps : candidates) {
    SampleSet set =
        simulated_anneal(q, default_anneal_params(q, sweeps, reads, seed));
    SweepEntry e;
    e.sweeps = sweeps;
    e.p_succ = p_succ_exact(set, ground);
    e.ttt_s = time_to_target({confidence, e.p_succ, set.anneal_time_per_read});
    const bool better =
        !have_best || e.ttt_s < best ||
        (e.ttt_s == best && sweeps < table.argmin_sweeps);
    if (better) {
      best = e.ttt_s;
      table.argmin_sweeps = sweeps;
      have_best = true;
    }
    table.entries.push_back(e);
  }
  return table;
}

}  // namespace copcut

#endif  // COPCUT_BENCH_HPP
