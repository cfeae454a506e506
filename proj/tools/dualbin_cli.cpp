// dualbin: instance generation, solvers, advice simulation, separation
// reduction runs, and batch experiments with CSV output.

#include <CLI11.hpp>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "dualbin/advice.hpp"
#include "dualbin/brute_force.hpp"
#include "dualbin/errors.hpp"
#include "dualbin/generator.hpp"
#include "dualbin/greedy.hpp"
#include "dualbin/grouped.hpp"
#include "dualbin/ptas.hpp"
#include "dualbin/reduction.hpp"

namespace {

using namespace dualbin;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<Weight> parse_eps_list(const std::string& csv) {
  std::vector<Weight> out;
  for (const std::string& tok : split_list(csv)) out.push_back(Weight::parse(tok));
  return out;
}

std::string format_ratio(std::uint64_t opt, std::uint64_t packed) {
  if (packed == 0) return opt == 0 ? "1.000000" : "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f",
                static_cast<double>(opt) / static_cast<double>(packed));
  return buf;
}

// Tracks packings surfaced to the user; any verification failure makes
// the whole run exit nonzero.
struct VerifyGate {
  std::atomic<bool> failed{false};

  std::uint64_t check(const Instance& inst, const Packing& p, const std::string& what) {
    VerifyReport report = verify_packing(inst, p);
    if (!report.ok()) {
      failed = true;
      std::cerr << "verification failed for " << what << ": "
                << (report.structure_ok ? "overfull bin" : report.structure_error)
                << '\n';
    }
    return report.packed_count;
  }
};

struct AlgoOutcome {
  std::string packed;  // empty when the run errored
  std::string branch;
  std::string advice_bits;
};

AlgoOutcome run_algo(const Instance& inst, const std::string& algo,
                     const std::optional<Weight>& eps, VerifyGate& gate,
                     const std::string& label, std::size_t brute_guard,
                     std::uint64_t dp_guard) {
  AlgoOutcome out;
  auto record = [&](const Packing& p) {
    out.packed = std::to_string(gate.check(inst, p, label + "/" + algo));
  };
  try {
    if (algo == "ff") {
      record(first_fit(inst));
    } else if (algo == "ffi") {
      record(first_fit_increasing(inst));
    } else if (algo == "rsff") {
      EtaResult result = rsff(inst);
      record(result.packing);
      out.branch = result.eta ? "eta=" + result.eta->str() : "eta=absent";
    } else if (algo == "dp") {
      GroupedInstance gi = group_by_weight(inst);
      if (inst.size() == 0) {
        record(Packing::all_rejected(0));
      } else {
        DPSolution dp = solve_grouped_dp(gi, dp_guard);
        record(expand_solution(inst, gi, dp));
      }
    } else if (algo == "brute") {
      record(brute_force_opt(inst, brute_guard).witness);
    } else if (algo == "ptas") {
      if (!eps) throw std::invalid_argument("ptas needs --eps");
      if (eps->is_zero() || !(*eps < Weight::one()))
        throw std::invalid_argument("eps must lie in (0, 1)");
      try {
        PtasResult result = ptas_solve(inst, *eps, dp_guard);
        record(result.packing);
        out.branch = result.branch == PtasBranch::SmallCertificate
                         ? "small_cert"
                         : "grouped";
      } catch (const std::invalid_argument&) {
        // eps*m < 1 with large items selected: report the exact optimum
        record(brute_force_opt(inst, brute_guard).witness);
        out.branch = "brute_fallback";
      }
    } else if (algo == "advice") {
      if (!eps) throw std::invalid_argument("advice needs --eps");
      SimulationReport report = simulate(inst, *eps, false, brute_guard, dp_guard);
      gate.check(inst, report.transcript.packing, label + "/advice");
      out.packed = std::to_string(report.online_count);
      out.branch = report.ff_mode ? "ff_mode" : "ptas_mode";
      out.advice_bits = std::to_string(report.advice_bits);
    } else {
      throw std::invalid_argument("unknown algorithm '" + algo + "'");
    }
  } catch (const ResourceLimitError&) {
    out.branch = "guard";
  } catch (const std::invalid_argument& e) {
    out.branch = std::string("error:") + e.what();
    for (char& c : out.branch) {
      if (c == ',' || c == '\n') c = ';';  // keep the CSV well formed
    }
  }
  return out;
}

std::string opt_column(const Instance& inst, bool oracle, std::size_t guard) {
  if (!oracle) return "";
  try {
    return std::to_string(brute_force_opt(inst, guard).opt);
  } catch (const ResourceLimitError&) {
    return "";
  }
}

int cmd_gen(const std::string& family, std::uint64_t n, std::uint64_t m,
            std::uint64_t s, std::uint64_t seed, const std::string& eps_text,
            std::uint64_t count, const std::string& out_path) {
  for (std::uint64_t i = 0; i < count; ++i) {
    std::string path = out_path;
    if (count > 1) {
      char suffix[32];
      std::snprintf(suffix, sizeof suffix, "-%03llu",
                    static_cast<unsigned long long>(i));
      auto dot = path.rfind('.');
      if (dot == std::string::npos)
        path += suffix;
      else
        path.insert(dot, suffix);
    }
    if (family == "bsp") {
      write_file(path, serialize_bsp(generate_bsp(n, s, seed + i)));
    } else {
      GenSpec spec{family, n, m, s, seed + i, {}};
      if (!eps_text.empty()) spec.eps = Weight::parse(eps_text);
      write_file(path, serialize_instance(generate_instance(spec)));
    }
    std::cout << path << '\n';
  }
  return 0;
}

int cmd_solve(const std::string& in_path, const std::string& algos_csv,
              const std::string& eps_csv, bool oracle, std::size_t brute_guard,
              std::uint64_t dp_guard, const std::string& out_path) {
  Instance inst = parse_instance(read_file(in_path));
  std::vector<std::string> algos = split_list(algos_csv);
  std::vector<Weight> eps_grid =
      eps_csv.empty() ? std::vector<Weight>{} : parse_eps_list(eps_csv);
  VerifyGate gate;
  std::string opt = opt_column(inst, oracle, brute_guard);

  std::ostringstream csv;
  csv << "instance,algo,eps,n,m,s,packed,opt,ratio,branch\n";
  for (const std::string& algo : algos) {
    std::vector<std::optional<Weight>> eps_runs;
    if (eps_grid.empty())
      eps_runs.push_back(std::nullopt);
    else
      for (const Weight& e : eps_grid) eps_runs.emplace_back(e);
    for (const auto& eps : eps_runs) {
      AlgoOutcome outcome =
          run_algo(inst, algo, eps, gate, in_path, brute_guard, dp_guard);
      std::string ratio;
      if (!opt.empty() && !outcome.packed.empty())
        ratio = format_ratio(std::stoull(opt), std::stoull(outcome.packed));
      csv << in_path << ',' << algo << ',' << (eps ? eps->str() : "") << ','
          << inst.size() << ',' << inst.bins << ',' << inst.max_bit_size() << ','
          << outcome.packed << ',' << opt << ',' << ratio << ','
          << outcome.branch << '\n';
      std::cout << algo;
      if (eps) std::cout << " (eps=" << eps->str() << ")";
      std::cout << ": packed=" << (outcome.packed.empty() ? "?" : outcome.packed);
      if (!opt.empty()) std::cout << " opt=" << opt;
      if (!outcome.branch.empty()) std::cout << " [" << outcome.branch << "]";
      std::cout << '\n';
    }
  }
  if (!out_path.empty()) write_file(out_path, csv.str());
  return gate.failed ? 1 : 0;
}

int cmd_simulate(const std::string& in_path, const std::string& eps_text,
                 bool oracle, std::size_t brute_guard, std::uint64_t dp_guard,
                 const std::string& transcript_path, const std::string& out_path) {
  Instance inst = parse_instance(read_file(in_path));
  Weight eps = Weight::parse(eps_text);
  SimulationReport report = simulate(inst, eps, oracle, brute_guard, dp_guard);
  VerifyGate gate;
  gate.check(inst, report.transcript.packing, in_path + "/advice");

  std::cout << "mode: " << (report.ff_mode ? "ff" : "ptas") << '\n'
            << "groups: " << report.groups << '\n'
            << "advice_bits: " << report.advice_bits << '\n'
            << "online_count: " << report.online_count << '\n'
            << "oracle_count: " << report.oracle_count << '\n'
            << "ptas_count: "
            << (report.ptas_count ? std::to_string(*report.ptas_count) : "-")
            << '\n';
  if (report.opt) {
    std::cout << "opt: " << *report.opt << '\n'
              << "ratio: " << format_ratio(*report.opt, report.online_count)
              << '\n';
  }
  if (!transcript_path.empty())
    write_file(transcript_path, format_transcript(report.transcript));
  if (!out_path.empty()) {
    std::ostringstream csv;
    csv << "instance,eps,mode,groups,advice_bits,online,oracle,ptas,opt,ratio\n"
        << in_path << ',' << eps.str() << ',' << (report.ff_mode ? "ff" : "ptas")
        << ',' << report.groups << ',' << report.advice_bits << ','
        << report.online_count << ',' << report.oracle_count << ','
        << (report.ptas_count ? std::to_string(*report.ptas_count) : "") << ','
        << (report.opt ? std::to_string(*report.opt) : "")
        << ','
        << (report.opt ? format_ratio(*report.opt, report.online_count) : "")
        << '\n';
    write_file(out_path, csv.str());
  }
  return gate.failed ? 1 : 0;
}

int cmd_reduce(const std::string& in_path, const std::string& algos_csv,
               std::uint64_t seed, const std::string& out_path) {
  BspInstance bsp = parse_bsp(read_file(in_path));
  std::ostringstream csv;
  csv << "bsp,algo,n,n1,p1,l2,s2,p3,g1,g2,bound_tight,bound_loose,entropy_bits\n";
  bool failed = false;
  for (const std::string& algo : split_list(algos_csv)) {
    std::unique_ptr<OnlineSolver> solver;
    std::uint64_t bins = bsp.size();
    if (algo == "ff") {
      solver = std::make_unique<FirstFitSolver>(bins);
    } else if (algo == "random") {
      solver = std::make_unique<RandomFitSolver>(bins, seed);
    } else if (algo == "opt") {
      solver = std::make_unique<ReplaySolver>(explicit_pairing(bsp).assignment);
    } else {
      std::cerr << "unknown reduction algorithm '" << algo << "'\n";
      return 2;
    }
    ReductionRun run = reduce_and_run(bsp, *solver);
    const ReductionReport& r = run.report;
    std::uint64_t n = bsp.size();
    std::int64_t tight =
        accounting_bound_tight(r.p1, r.l2, r.s2, r.p3, bsp.n1, bsp.n2());
    std::int64_t loose =
        accounting_bound_loose(r.p1, r.l2, r.s2, r.p3, bsp.n1, bsp.n2());
    if (static_cast<std::int64_t>(r.g1 + r.g2) < loose) {
      std::cerr << "accounting bound violated for " << algo << '\n';
      failed = true;
    }
    std::optional<double> entropy = entropy_lower_bound(n, r.mistakes(n));
    char entropy_text[32] = "NA";
    if (entropy) std::snprintf(entropy_text, sizeof entropy_text, "%.4f", *entropy);
    csv << in_path << ',' << algo << ',' << n << ',' << bsp.n1 << ',' << r.p1
        << ',' << r.l2 << ',' << r.s2 << ',' << r.p3 << ',' << r.g1 << ','
        << r.g2 << ',' << tight << ',' << loose << ',' << entropy_text << '\n';
    std::cout << algo << ": good_guesses=" << r.g1 + r.g2 << "/" << n
              << " unpacked=" << r.unpacked_total() << " bound_tight=" << tight
              << " bound_loose=" << loose << " entropy_bits=" << entropy_text
              << '\n';
  }
  if (!out_path.empty()) write_file(out_path, csv.str());
  return failed ? 1 : 0;
}

struct BenchConfig {
  std::string family = "uniform";
  std::uint64_t n = 12, m = 3, s = 4, seed = 1, count = 10;
  std::string algos = "ff,ffi,rsff,ptas,advice";
  std::string eps = "1/2^2";
  bool oracle = false;
  bool timing = false;
  std::size_t brute_guard = kDefaultBruteForceGuard;
  std::uint64_t dp_guard = kDefaultDpStateGuard;
  unsigned jobs = 0;
  std::string out_path;
};

int cmd_bench(const BenchConfig& cfg) {
  std::vector<std::string> algos = split_list(cfg.algos);
  std::vector<Weight> eps_grid = parse_eps_list(cfg.eps);
  if (eps_grid.empty()) throw std::invalid_argument("bench needs --eps");
  VerifyGate gate;

  std::vector<std::string> instance_rows(cfg.count);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::uint64_t i = next.fetch_add(1);
      if (i >= cfg.count) return;
      GenSpec spec{cfg.family, cfg.n, cfg.m, cfg.s, cfg.seed + i, {}};
      if (cfg.family == "small-heavy") spec.eps = eps_grid.front();
      Instance inst = generate_instance(spec);
      std::string id = cfg.family + "-" + std::to_string(cfg.seed + i);
      std::string opt = opt_column(inst, cfg.oracle, cfg.brute_guard);
      std::ostringstream rows;
      for (const std::string& algo : algos) {
        for (const Weight& eps : eps_grid) {
          auto started = std::chrono::steady_clock::now();
          AlgoOutcome outcome = run_algo(inst, algo, eps, gate, id,
                                         cfg.brute_guard, cfg.dp_guard);
          auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
          std::string ratio;
          if (!opt.empty() && !outcome.packed.empty())
            ratio = format_ratio(std::stoull(opt), std::stoull(outcome.packed));
          rows << id << ',' << cfg.family << ',' << cfg.seed + i << ','
               << inst.size() << ',' << inst.bins << ',' << inst.max_bit_size()
               << ',' << algo << ',' << eps.str() << ',' << outcome.packed << ','
               << opt << ',' << ratio << ',' << outcome.advice_bits << ','
               << outcome.branch;
          if (cfg.timing) rows << ',' << elapsed;
          rows << '\n';
        }
      }
      instance_rows[i] = rows.str();
    }
  };
  unsigned jobs = cfg.jobs ? cfg.jobs
                           : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  std::ostringstream csv;
  csv << "instance_id,family,seed,n,m,s,algo,eps,packed,opt,ratio,advice_bits,branch";
  if (cfg.timing) csv << ",wall_ms";
  csv << '\n';
  for (const std::string& rows : instance_rows) csv << rows;
  if (!cfg.out_path.empty())
    write_file(cfg.out_path, csv.str());
  else
    std::cout << csv.str();
  if (!cfg.out_path.empty())
    std::cout << "wrote " << cfg.count * algos.size() * eps_grid.size()
              << " rows to " << cfg.out_path << '\n';
  return gate.failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dual bin packing solvers, advice simulation, and experiments"};
  app.require_subcommand(1);

  std::string family = "uniform", eps_text, out_path, in_path, algos, transcript;
  std::uint64_t n = 12, m = 3, s = 4, seed = 1, count = 1;
  bool oracle = false;
  std::size_t brute_guard = dualbin::kDefaultBruteForceGuard;
  std::uint64_t dp_guard = dualbin::kDefaultDpStateGuard;

  auto* gen = app.add_subcommand("gen", "generate instance or separation files");
  gen->add_option("--family", family,
                  "uniform | small-heavy | ffi-adversarial | reduction-derived | bsp");
  gen->add_option("--n", n, "item count (value count for bsp/reduction-derived)");
  gen->add_option("--m", m, "bin count");
  gen->add_option("--s", s, "weight bit size (value bits for bsp)");
  gen->add_option("--seed", seed, "seed; instance i uses seed+i");
  gen->add_option("--eps", eps_text, "dyadic eps, e.g. 1/2^3 (small-heavy)");
  gen->add_option("--count", count, "number of files");
  gen->add_option("--out", out_path, "output path")->required();

  auto* solve = app.add_subcommand("solve", "run solvers on an instance file");
  solve->add_option("file", in_path, "instance file")->required();
  solve->add_option("--algos", algos, "comma list: ff,ffi,rsff,dp,brute,ptas,advice")
      ->default_val("ff,ffi,rsff");
  solve->add_option("--eps", eps_text, "comma list of dyadic eps values");
  solve->add_flag("--oracle", oracle, "add the brute-force optimum column");
  solve->add_option("--brute-guard", brute_guard, "oracle size guard");
  solve->add_option("--dp-guard", dp_guard, "DP state-space guard");
  solve->add_option("--out", out_path, "CSV output path");

  auto* sim = app.add_subcommand("simulate", "advice oracle/player round trip");
  sim->add_option("file", in_path, "instance file")->required();
  sim->add_option("--eps", eps_text, "dyadic eps")->required();
  sim->add_flag("--oracle", oracle, "compare against the brute-force optimum");
  sim->add_option("--brute-guard", brute_guard, "oracle size guard");
  sim->add_option("--dp-guard", dp_guard, "DP state-space guard");
  sim->add_option("--transcript", transcript, "write the decision log here");
  sim->add_option("--out", out_path, "CSV output path");

  auto* red = app.add_subcommand("reduce", "run the separation reduction");
  red->add_option("file", in_path, "separation problem file")->required();
  red->add_option("--algos", algos, "comma list: ff,random,opt")
      ->default_val("ff,random,opt");
  red->add_option("--seed", seed, "seed for the random placer");
  red->add_option("--out", out_path, "CSV output path");

  BenchConfig bench;
  auto* ben = app.add_subcommand("bench", "batch experiments over generated instances");
  ben->add_option("--family", bench.family, "instance family");
  ben->add_option("--n", bench.n, "item count");
  ben->add_option("--m", bench.m, "bin count");
  ben->add_option("--s", bench.s, "weight bit size");
  ben->add_option("--seed", bench.seed, "base seed");
  ben->add_option("--count", bench.count, "instances in the batch");
  ben->add_option("--algos", bench.algos, "comma list of algorithms");
  ben->add_option("--eps", bench.eps, "comma list of dyadic eps values");
  ben->add_flag("--oracle", bench.oracle, "add optimum and ratio columns");
  ben->add_flag("--timing", bench.timing, "append a wall_ms column (non-reproducible)");
  ben->add_option("--brute-guard", bench.brute_guard, "oracle size guard");
  ben->add_option("--dp-guard", bench.dp_guard, "DP state-space guard");
  ben->add_option("--jobs", bench.jobs, "worker threads (default: hardware)");
  ben->add_option("--out", bench.out_path, "CSV output path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return cmd_gen(family, n, m, s, seed, eps_text, count, out_path);
    if (solve->parsed())
      return cmd_solve(in_path, algos, eps_text, oracle, brute_guard, dp_guard,
                       out_path);
    if (sim->parsed())
      return cmd_simulate(in_path, eps_text, oracle, brute_guard, dp_guard,
                          transcript, out_path);
    if (red->parsed()) return cmd_reduce(in_path, algos, seed, out_path);
    if (ben->parsed()) return cmd_bench(bench);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
