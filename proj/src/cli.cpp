#include "largecover/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <unordered_set>

#include "largecover/dp_core.hpp"
#include "largecover/errors.hpp"
#include "largecover/few_sets.hpp"
#include "largecover/generators.hpp"
#include "largecover/io.hpp"
#include "largecover/linsat.hpp"
#include "largecover/oracles.hpp"
#include "largecover/sampled_solver.hpp"
#include "largecover/witness.hpp"

namespace largecover::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RandomSeed parse_seed(const std::string& text) {
  if (text == "random") {
    std::random_device rd;
    return RandomSeed{(static_cast<std::uint64_t>(rd()) << 32) ^ rd(), {}};
  }
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("--seed expects an unsigned integer or 'random'");
  return RandomSeed{v, {}};
}

json elements_json(Mask m, int offset = 0) {
  json a = json::array();
  for (int e : elements_of(m)) a.push_back(e + offset);
  return a;
}

json verdict_json(const Verdict& v, int offset = 0) {
  json j;
  j["answer"] = v.yes() ? "YES" : "NO";
  if (v.yes()) {
    j["sets"] = v.sets;
    json blocks = json::array();
    for (Mask b : v.blocks) blocks.push_back(elements_json(b, offset));
    j["blocks"] = blocks;
  }
  return j;
}

std::string bitstring(Mask x, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int k = 0; k < width; ++k)
    if ((x >> k) & 1U) s[static_cast<std::size_t>(k)] = '1';
  return s;
}

json stats_json(const SolverStats& st) {
  json j;
  j["branch"] = st.branch;
  j["a1_calls"] = st.a1_calls;
  j["passes"] = st.passes;
  j["layer_count"] = st.layers.size();
  std::size_t max_closure = 0;
  json layers = json::array();
  for (const LayerStats& l : st.layers) {
    layers.push_back({{"pass", l.pass},
                      {"l", l.l},
                      {"sampled", l.sampled},
                      {"closure", l.closure},
                      {"complement_closure", l.complement_closure}});
    max_closure = std::max({max_closure, l.closure, l.complement_closure});
  }
  j["max_closure"] = max_closure;
  j["layers"] = layers;
  return j;
}

json instance_json(const SetSystemInstance& inst) { return {{"n", inst.n}, {"m", inst.m()}, {"s", inst.s}}; }

SetSystemInstance load_set_system(const std::string& path) { return parse_set_system(read_file(path)); }

// Timer that reports only when asked, so default reports stay byte-identical.
class Timer {
 public:
  explicit Timer(bool on) : on_(on), start_(std::chrono::steady_clock::now()) {}
  void stamp(json& report) const {
    if (!on_) return;
    const auto d = std::chrono::steady_clock::now() - start_;
    report["runtime_ms"] = std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  bool on_;
  std::chrono::steady_clock::time_point start_;
};

json base_report(const std::string& command, const RandomSeed& seed) {
  json r;
  r["schema"] = 1;
  r["command"] = command;
  r["seed"] = seed.seed;
  return r;
}

SetOracle family_oracle(const SetSystemInstance& inst) {
  auto members = std::make_shared<std::unordered_set<Mask>>(inst.sets.begin(), inst.sets.end());
  return SetOracle{inst.n, [members](Mask x) { return members->count(x) > 0; }};
}

// Indices for oracle-found blocks over an explicit family.
std::vector<std::size_t> blocks_to_indices(const SetSystemInstance& inst, const std::vector<Mask>& blocks) {
  std::vector<std::size_t> out;
  std::vector<bool> used(inst.m(), false);
  for (Mask b : blocks) {
    for (std::size_t j = 0; j < inst.m(); ++j) {
      if (!used[j] && inst.sets[j] == b) {
        used[j] = true;
        out.push_back(j);
        break;
      }
    }
  }
  return out;
}

// ---- sweeps for oracle-check ----

struct SweepCounts {
  std::size_t runs = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
  std::size_t mismatches = 0;
  bool exact = false;
};

int uniform(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1))); }

SetSystemInstance random_set_instance(Rng& rng, int n_lo, int n_hi, bool allow_empty_target = false) {
  GeneratorParams p;
  p.n = uniform(rng, n_lo, n_hi);
  p.max_set_size = uniform(rng, 1, 3);
  p.planted = rng.bernoulli(0.5);
  const int min_blocks = (p.n + p.max_set_size - 1) / p.max_set_size;
  p.s = uniform(rng, min_blocks, p.n);
  p.m = uniform(rng, p.s, p.s + 4);
  if (!p.planted) p.m = uniform(rng, std::max(1, p.n / 2), p.n + 2);
  SetSystemInstance inst = generate_random_instance(p, RandomSeed{rng.bits(), {}});
  inst.s = uniform(rng, allow_empty_target ? 0 : 1, p.n);
  if (p.planted && rng.bernoulli(0.5)) inst.s = p.s;
  return inst;
}

void tally(SweepCounts& c, bool said_yes, bool truth) {
  ++c.runs;
  if (said_yes && !truth) ++c.false_positives;
  if (!said_yes && truth) ++c.false_negatives;
  if (said_yes != truth) ++c.mismatches;
}

SweepCounts run_sweep(const std::string& solver, std::size_t count, const RandomSeed& seed) {
  SweepCounts c;
  for (std::size_t k = 0; k < count; ++k) {
    const RandomSeed run_seed = seed.derive(k);
    Rng rng(run_seed.derive(0));
    if (solver == "folklore") {
      c.exact = true;
      const auto inst = random_set_instance(rng, 3, 10, true);
      const Verdict v = folklore_cover_dp(inst);
      if (!check_cover_certificate(inst, v)) throw SoundnessError("folklore certificate failed");
      tally(c, v.yes(), brute_force_set_cover(inst).yes());
    } else if (solver == "solve-cover") {
      const auto inst = random_set_instance(rng, 3, 9);
      const Verdict v = solve_large_cover(inst, run_seed.derive(1));
      tally(c, v.yes(), brute_force_set_cover(inst).yes());
    } else if (solver == "a1") {
      const auto inst = random_set_instance(rng, 4, 9);
      const auto sched = solver_schedule(static_cast<double>(inst.s) / inst.n, inst.n);
      const Verdict v = algorithm_a1(inst, sched, run_seed.derive(1));
      tally(c, v.yes(), brute_force_set_partition(inst).yes());
    } else if (solver == "few-sets") {
      c.exact = true;
      const auto inst = random_set_instance(rng, 3, 9, true);
      const int r = uniform(rng, 2, 4);
      const Problem mode = rng.bernoulli(0.5) ? Problem::cover : Problem::partition;
      const Verdict v = algorithm_a3(inst, r, mode);
      const bool truth =
          mode == Problem::cover ? brute_force_set_cover(inst).yes() : brute_force_set_partition(inst).yes();
      tally(c, v.yes(), truth);
    } else if (solver == "partition-oracle") {
      const int n = uniform(rng, 4, 10);
      SetSystemInstance fam;
      fam.n = n;
      for (int e = 0; e < n; ++e)
        if (rng.bernoulli(0.85)) fam.sets.push_back(Mask{1} << e);
      fam.s = rng.bernoulli(0.5) ? n : uniform(rng, 1, n);
      const Verdict v = solve_partition_oracle(family_oracle(fam), n, fam.s, run_seed.derive(1));
      tally(c, v.yes(), brute_force_set_partition(fam).yes());
    } else if (solver == "chromatic") {
      const int n = uniform(rng, 3, 8);
      const SimpleGraph g = generate_random_graph(n, 0.2 + 0.6 * (rng.bits() % 1000) / 1000.0, RandomSeed{rng.bits(), {}});
      const int s = uniform(rng, 1, n);
      const int chi = brute_force_chromatic(g);
      if (chi == s) continue;
      const Verdict v = chromatic_decision(g, s, run_seed.derive(1));
      tally(c, v.yes(), chi < s);
    } else if (solver == "linsat") {
      const int rows = uniform(rng, 2, 6), cols = uniform(rng, 3, 10);
      const auto inst = generate_random_linsat(rows, cols, 5, uniform(rng, 0, 15),
                                               rng.bernoulli(0.5) ? uniform(rng, 1, cols) : -1,
                                               RandomSeed{rng.bits(), {}});
      const LinSatVerdict v = algorithm_a4(inst, run_seed.derive(1));
      if (!check_linsat_certificate(inst, v)) throw SoundnessError("A4 certificate failed");
      tally(c, v.yes(), brute_force_linsat(inst).yes());
    } else if (solver == "isd") {
      c.exact = true;
      const int cols = uniform(rng, 2, 10);
      const auto inst = generate_random_linsat(uniform(rng, cols, cols + 2), cols, 5, uniform(rng, 0, 15),
                                               uniform(rng, 1, cols), RandomSeed{rng.bits(), {}});
      tally(c, isd_fallback(inst, true).yes(), brute_force_linsat(inst).yes());
    } else {
      throw UsageError("unknown solver '" + solver + "'");
    }
  }
  return c;
}

}  // namespace

Interval wilson_interval(std::size_t successes, std::size_t runs) {
  if (runs == 0) return {0, 1};
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(runs);
  const double p = static_cast<double>(successes) / n;
  const double denom = 1 + z * z / n;
  const double centre = (p + z * z / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact exponential-time solvers for Set Cover, Set Partition, coloring and Linear Sat"};
  app.require_subcommand(1);

  std::string seed_text = "0";
  bool timing = false;
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed_text, "Seed (unsigned integer) or 'random'");
    sub->add_flag("--timing", timing, "Add wall-clock runtime to the report");
  };

  std::string input, oracle_spec, graph_path, mode_text = "cover", solver, sweep = "small", report_path;
  std::optional<int> size, colors;
  int n_opt = 0, r_opt = 2, repeats = 0, trials = 0, r_max = 8;
  std::size_t runs = 100;
  double delta = 0.25, trial_factor = 1.0, sigma = 0.2;

  auto* cover = app.add_subcommand("solve-cover", "Large-solution Set Cover (Monte Carlo)");
  cover->add_option("--input", input, "Set-system file")->required();
  cover->add_option("--size", size, "Target cover size (default: the file's s)");
  cover->add_option("--delta", delta, "Allowed false-negative probability");
  cover->add_option("--repeats", repeats, "Passes per A1 call (default n)");
  add_seed(cover);

  auto* part = app.add_subcommand("solve-partition", "Set Partition through a set oracle (Monte Carlo)");
  auto* part_in = part->add_option("--input", input, "Set-system file used as an explicit oracle");
  auto* part_or = part->add_option("--oracle", oracle_spec, "singleton | independent-set:GRAPH");
  part_in->excludes(part_or);
  part->add_option("--n", n_opt, "Universe size for the singleton oracle");
  part->add_option("--size", size, "Target partition size");
  part->add_option("--delta", delta, "Allowed false-negative probability");
  part->add_option("--repeats", repeats, "Passes per A1 call (default n)");
  add_seed(part);

  auto* chrom = app.add_subcommand("chromatic", "Decide chi(G) < s versus chi(G) > s");
  chrom->add_option("--graph", graph_path, "Graph file")->required();
  chrom->add_option("--colors", colors, "Number of colors s")->required();
  chrom->add_option("--delta", delta, "Allowed false-negative probability");
  add_seed(chrom);

  auto* lin = app.add_subcommand("linsat", "Linear Sat by the representation method (Monte Carlo)");
  lin->add_option("--input", input, "Linear-Sat file")->required();
  lin->add_option("--trials", trials, "Trial count (default ceil(c m^1.5))");
  lin->add_option("--trial-factor", trial_factor, "The constant c");
  add_seed(lin);

  auto* few = app.add_subcommand("few-sets", "Branching on large sets, exact leaves");
  few->add_option("--input", input, "Set-system file")->required();
  few->add_option("--r", r_opt, "Branching threshold r")->required();
  few->add_option("--mode", mode_text, "cover | partition")->check(CLI::IsMember({"cover", "partition"}));
  few->add_option("--size", size, "Target size (default: the file's s)");
  add_seed(few);

  auto* check = app.add_subcommand("oracle-check", "Run a solver against brute force over a seeded sweep");
  check->add_option("--solver", solver, "folklore | solve-cover | a1 | few-sets | partition-oracle | chromatic | linsat | isd")
      ->required();
  check->add_option("--sweep", sweep, "small | medium")->check(CLI::IsMember({"small", "medium"}));
  add_seed(check);

  auto* rate = app.add_subcommand("rate-estimate", "Empirical acceptance frequency with a Wilson 95% interval");
  rate->add_option("--instance", input, "Set-system, graph or Linear-Sat file")->required();
  rate->add_option("--runs", runs, "Number of independent runs");
  rate->add_option("--solver", solver, "solve-cover | a1 | partition | linsat | chromatic (default by file type)");
  rate->add_option("--size", size, "Target size (set systems)");
  rate->add_option("--colors", colors, "Number of colors (graphs)");
  add_seed(rate);

  auto* params = app.add_subcommand("params", "Print schedules and closed-form constants");
  params->add_option("--sigma", sigma, "sigma0");
  params->add_option("--n", n_opt, "Universe size");
  params->add_option("--r-max", r_max, "Largest r in the lambda table");

  auto* verify = app.add_subcommand("verify", "Re-check the certificate in a report");
  verify->add_option("--input", input, "Instance file the report refers to")->required();
  verify->add_option("--report", report_path, "JSON report")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAnswered;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const Timer timer(timing);
    json report;

    if (*cover) {
      const RandomSeed seed = parse_seed(seed_text);
      SetSystemInstance inst = load_set_system(input);
      if (size) inst.s = *size;
      SolverStats st;
      const Verdict v = solve_large_cover(inst, seed, SolveOptions{delta, repeats}, &st);
      report = base_report("solve-cover", seed);
      report["instance"] = instance_json(inst);
      report["sigma"] = inst.n ? static_cast<double>(inst.s) / inst.n : 0.0;
      report["delta"] = delta;
      report["verdict"] = verdict_json(v);
      report["stats"] = stats_json(st);
    } else if (*part) {
      const RandomSeed seed = parse_seed(seed_text);
      SetOracle oracle;
      std::optional<SetSystemInstance> explicit_inst;
      json desc;
      if (!input.empty()) {
        explicit_inst = load_set_system(input);
        oracle = family_oracle(*explicit_inst);
        if (!size) size = explicit_inst->s;
        desc = {{"kind", "explicit"}, {"m", explicit_inst->m()}};
      } else if (oracle_spec == "singleton") {
        if (n_opt < 1) throw UsageError("--oracle singleton needs --n");
        oracle = singleton_oracle(n_opt);
        desc = {{"kind", "singleton"}};
      } else if (oracle_spec.rfind("independent-set:", 0) == 0) {
        const SimpleGraph g = parse_graph(read_file(oracle_spec.substr(16)));
        oracle = independent_set_oracle(g);
        desc = {{"kind", "independent-set"}};
      } else {
        throw UsageError("solve-partition needs --input or --oracle singleton|independent-set:GRAPH");
      }
      if (!size) throw UsageError("solve-partition needs --size with an oracle");
      SolverStats st;
      Verdict v = solve_partition_oracle(oracle, oracle.n, *size, seed, SolveOptions{delta, repeats}, &st);
      if (explicit_inst && v.yes()) v.sets = blocks_to_indices(*explicit_inst, v.blocks);
      report = base_report("solve-partition", seed);
      report["oracle"] = desc;
      report["instance"] = {{"n", oracle.n}, {"s", *size}};
      report["delta"] = delta;
      report["verdict"] = verdict_json(v);
      report["stats"] = stats_json(st);
    } else if (*chrom) {
      const RandomSeed seed = parse_seed(seed_text);
      const SimpleGraph g = parse_graph(read_file(graph_path));
      SolverStats st;
      const Verdict v = chromatic_decision(g, *colors, seed, SolveOptions{delta, 0}, &st);
      report = base_report("chromatic", seed);
      report["instance"] = {{"n", g.n}, {"edges", g.edge_count()}, {"colors", *colors}};
      report["verdict"] = verdict_json(v, 1);
      report["stats"] = stats_json(st);
    } else if (*lin) {
      const RandomSeed seed = parse_seed(seed_text);
      const LinSatInstance inst = parse_linsat(read_file(input));
      LinSatStats st;
      const LinSatVerdict v = algorithm_a4(inst, seed, A4Options{trial_factor, trials}, &st);
      report = base_report("linsat", seed);
      report["instance"] = {{"rows", inst.n_rows}, {"cols", inst.m_cols()}, {"t", inst.t}};
      json vj = {{"answer", v.yes() ? "YES" : "NO"}};
      if (v.yes()) {
        vj["x"] = bitstring(v.x, inst.m_cols());
        vj["cost"] = v.cost;
      }
      report["verdict"] = vj;
      report["stats"] = {{"trials", st.trials}, {"list_entries", st.list_entries}, {"used_isd", st.used_isd},
                         {"shortcut", st.shortcut}};
    } else if (*few) {
      const RandomSeed seed = parse_seed(seed_text);
      SetSystemInstance inst = load_set_system(input);
      if (size) inst.s = *size;
      const Problem mode = mode_text == "cover" ? Problem::cover : Problem::partition;
      A3Stats st;
      const Verdict v = algorithm_a3(inst, r_opt, mode, &st);
      report = base_report("few-sets", seed);
      report["instance"] = instance_json(inst);
      report["mode"] = mode_text;
      report["r"] = r_opt;
      report["verdict"] = verdict_json(v);
      report["stats"] = {{"nodes", st.nodes}, {"leaves", st.leaves}, {"max_commits", st.max_commits},
                         {"lambda_r", r_opt >= 2 ? lambda_r(r_opt) : 0.0}};
    } else if (*check) {
      const RandomSeed seed = parse_seed(seed_text);
      const std::string name = solver == "cover" ? "solve-cover" : solver == "partition" ? "partition-oracle" : solver;
      const std::size_t count = sweep == "small" ? 40 : 200;
      const SweepCounts c = run_sweep(name, count, seed);
      report = base_report("oracle-check", seed);
      report["solver"] = name;
      report["sweep"] = sweep;
      report["runs"] = c.runs;
      report["false_positives"] = c.false_positives;
      report["false_negatives"] = c.false_negatives;
      report["exact"] = c.exact;
      if (c.exact) report["mismatches"] = c.mismatches;
      std::ostringstream summary;
      summary << c.false_positives << " false positives / " << c.runs << " runs";
      report["summary"] = summary.str();
      err << summary.str() << "\n";
      timer.stamp(report);
      out << report.dump(2) << "\n";
      return c.false_positives > 0 || (c.exact && c.mismatches > 0) ? kSoundness : kAnswered;
    } else if (*rate) {
      const RandomSeed seed = parse_seed(seed_text);
      const std::string text = read_file(input);
      std::string kind = solver;
      if (kind.empty()) {
        if (text.find("p linsat") != std::string::npos)
          kind = "linsat";
        else if (text.find("p edge") != std::string::npos)
          kind = "chromatic";
        else
          kind = "solve-cover";
      }
      std::size_t accepted = 0;
      if (kind == "linsat") {
        const LinSatInstance inst = parse_linsat(text);
        for (std::size_t k = 0; k < runs; ++k) accepted += algorithm_a4(inst, seed.derive(k)).yes();
      } else if (kind == "chromatic") {
        if (!colors) throw UsageError("rate-estimate on a graph needs --colors");
        const SimpleGraph g = parse_graph(text);
        for (std::size_t k = 0; k < runs; ++k) accepted += chromatic_decision(g, *colors, seed.derive(k)).yes();
      } else {
        SetSystemInstance inst = parse_set_system(text);
        if (size) inst.s = *size;
        for (std::size_t k = 0; k < runs; ++k) {
          const RandomSeed rs = seed.derive(k);
          if (kind == "solve-cover")
            accepted += solve_large_cover(inst, rs).yes();
          else if (kind == "a1")
            accepted += algorithm_a1(inst, solver_schedule(static_cast<double>(inst.s) / inst.n, inst.n), rs).yes();
          else if (kind == "partition")
            accepted += solve_partition_oracle(family_oracle(inst), inst.n, inst.s, rs).yes();
          else
            throw UsageError("unknown solver '" + kind + "'");
        }
      }
      const Interval ci = wilson_interval(accepted, runs);
      report = base_report("rate-estimate", seed);
      report["solver"] = kind;
      report["runs"] = runs;
      report["accepted"] = accepted;
      report["rate"] = runs ? static_cast<double>(accepted) / static_cast<double>(runs) : 0.0;
      report["wilson95"] = {ci.lo, ci.hi};
    } else if (*params) {
      const int n = n_opt > 0 ? n_opt : 20;
      report["schema"] = 1;
      report["command"] = "params";
      report["sigma0"] = sigma;
      report["n"] = n;
      auto sched_json = [](const ParamSchedule& s) {
        const LayerRange lr = layer_range(s.n, s.beta);
        return json{{"zeta", s.zeta},
                    {"beta", s.beta},
                    {"sample_rate", s.sample_rate},
                    {"sample_rate_log2", -s.zeta * s.n},
                    {"repeats", s.repeats},
                    {"layers", {{"first", lr.first}, {"last_exclusive", lr.last}, {"count", lr.count()}}}};
      };
      try {
        report["schedule"] = sched_json(schedule_for_sigma(sigma, n));
      } catch (const HypothesisError& e) {
        report["schedule"] = {{"error", e.what()}};
      }
      report["solver_schedule"] = sched_json(solver_schedule(sigma, n));
      const LinSatExponent le = linsat_exponent();
      report["linsat_exponent"] = {{"sigma", le.sigma}, {"exponent", le.exponent}};
      json lambdas = json::array();
      for (int r = 2; r <= r_max; ++r) {
        json row = {{"r", r}, {"lambda", lambda_r(r)}};
        if (r >= 3) row["sandwich"] = lambda_sandwich_holds(r);
        lambdas.push_back(row);
      }
      report["lambda_r"] = lambdas;
    } else if (*verify) {
      std::ifstream rf(report_path);
      if (!rf) throw std::ios_base::failure("cannot open '" + report_path + "'");
      json rep;
      try {
        rep = json::parse(rf);
      } catch (const json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
      }
      const std::string command = rep.value("command", "");
      const json& vj = rep.at("verdict");
      const bool yes = vj.at("answer") == "YES";
      bool valid = true;
      if (yes) {
        if (command == "linsat") {
          const LinSatInstance inst = parse_linsat(read_file(input));
          const std::string xs = vj.at("x");
          Mask x = 0;
          for (std::size_t k = 0; k < xs.size(); ++k)
            if (xs[k] == '1') x |= Mask{1} << k;
          valid = check_linsat_certificate(inst, {Answer::yes, x, vj.at("cost").get<std::int64_t>()});
        } else if (command == "chromatic") {
          const SimpleGraph g = parse_graph(read_file(input));
          Verdict v;
          v.answer = Answer::yes;
          for (const auto& b : vj.at("blocks")) {
            Mask m = 0;
            for (int e : b) m |= Mask{1} << (e - 1);
            v.blocks.push_back(m);
          }
          valid = check_coloring_certificate(g, rep.at("instance").at("colors"), v);
        } else {
          SetSystemInstance inst = load_set_system(input);
          inst.s = rep.at("instance").at("s");
          Verdict v;
          v.answer = Answer::yes;
          v.sets = vj.at("sets").get<std::vector<std::size_t>>();
          const bool partition = command == "solve-partition" || rep.value("mode", "") == "partition";
          valid = partition ? check_partition_certificate(inst, v) : check_cover_certificate(inst, v);
        }
      }
      report["schema"] = 1;
      report["command"] = "verify";
      report["verified"] = command;
      report["answer"] = yes ? "YES" : "NO";
      report["valid"] = valid;
      out << report.dump(2) << "\n";
      if (!valid) {
        err << "certificate does not verify\n";
        return kSoundness;
      }
      return kAnswered;
    }

    timer.stamp(report);
    out << report.dump(2) << "\n";
    return kAnswered;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const GuardError& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kGuard;
  } catch (const HypothesisError& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return kHypothesis;
  } catch (const SoundnessError& e) {
    err << "soundness check failed: " << e.what() << "\n";
    return kSoundness;
  } catch (const std::ios_base::failure& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"largecover"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace largecover::cli
