#include "largecover/sampled_solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>

#include "largecover/dp_core.hpp"
#include "largecover/errors.hpp"
#include "largecover/reductions.hpp"

namespace largecover {
namespace {

constexpr double kMaxLayerSubsets = 268435456.0;  // 2^28

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

// Smallest a + b in [lo, hi] over a in `left`, b in `right`, as the pair.
std::optional<std::pair<int, int>> find_split(std::uint64_t left, std::uint64_t right, int lo, int hi) {
  for (std::uint64_t rest = left; rest; rest &= rest - 1) {
    const int a = std::countr_zero(rest);
    for (int b = std::max(0, lo - a); b <= hi - a && b < 64; ++b)
      if ((right >> b) & 1U) return std::make_pair(a, b);
  }
  return std::nullopt;
}

// Shared layer loop. `profile` builds a skip-empty profile on a closure;
// `certify` turns (W, a, b) into a verdict.
template <typename Profile, typename Certify>
Verdict run_a1(int n, int s, int empties, const ParamSchedule& sched, const RandomSeed& seed, SolverStats* stats,
               Profile profile, Certify certify) {
  if (sched.n != n) throw HypothesisError("A1: schedule built for a different n");
  if (stats) ++stats->a1_calls;
  const LayerRange range = layer_range(n, sched.beta);
  const Mask u = full_mask(n);
  for (int pass = 0; pass < sched.repeats; ++pass) {
    if (stats) ++stats->passes;
    const RandomSeed pass_seed = seed.derive(static_cast<std::uint64_t>(pass));
    for (int l = range.first; l < range.last; ++l) {
      const SampledFamily fam = sample_layer(n, l, sched.sample_rate, pass_seed.derive(static_cast<std::uint64_t>(l)));
      LayerStats ls{pass, l, fam.members.size(), 0, 0};
      if (fam.members.empty()) {
        if (stats) stats->layers.push_back(ls);
        continue;
      }
      const DownClosure dw = down_closure(fam.members, n);
      const DownClosure dc = down_closure(fam.complements, n);
      ls.closure = dw.size();
      ls.complement_closure = dc.size();
      if (stats) stats->layers.push_back(ls);
      const PartitionProfile pw = profile(dw);
      const PartitionProfile pc = profile(dc);
      for (Mask w : fam.members) {
        const auto split = find_split(pw.counts(w), pc.counts(u & ~w), s - empties, s);
        if (split) {
          if (stats) stats->branch = "sampled";
          return certify(pw, pc, w, split->first, split->second);
        }
      }
    }
  }
  return Verdict::no();
}

std::vector<std::size_t> dedupe(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Verdict cover_verdict(const SetSystemInstance& inst, std::vector<std::size_t> sets) {
  Verdict v;
  v.answer = Answer::yes;
  v.sets = dedupe(std::move(sets));
  for (std::size_t j : v.sets) v.blocks.push_back(inst.sets[j]);
  if (!check_cover_certificate(inst, v)) throw SoundnessError("cover certificate failed re-verification");
  return v;
}

}  // namespace

SampledFamily sample_layer(int n, int l, double rate, const RandomSeed& seed) {
  if (l < 0 || l > n) throw HypothesisError("sample_layer: layer outside 0..n");
  if (binomial(n, l) > kMaxLayerSubsets) throw GuardError("sample_layer: C(n, l) exceeds 2^28");
  SampledFamily fam;
  fam.l = l;
  if (rate <= 0) return fam;
  Rng rng(seed);
  const Mask u = full_mask(n);
  if (rate >= 1) {
    for_each_k_subset(n, l, [&](Mask w) { fam.members.push_back(w); });
  } else {
    // Geometric gaps between kept subsets, in enumeration order.
    std::geometric_distribution<std::uint64_t> gap(rate);
    std::uint64_t skip = gap(rng.engine());
    for_each_k_subset(n, l, [&](Mask w) {
      if (skip == 0) {
        fam.members.push_back(w);
        skip = gap(rng.engine());
      } else {
        --skip;
      }
    });
  }
  fam.complements.reserve(fam.members.size());
  for (Mask w : fam.members) fam.complements.push_back(u & ~w);
  return fam;
}

Verdict algorithm_a1(const SetSystemInstance& inst, const ParamSchedule& sched, const RandomSeed& seed,
                     SolverStats* stats) {
  inst.validate();
  std::vector<std::size_t> empties;
  for (std::size_t j = 0; j < inst.sets.size(); ++j)
    if (inst.sets[j] == 0) empties.push_back(j);
  const int e = static_cast<int>(std::min<std::size_t>(empties.size(), 63));
  auto profile = [&](const DownClosure& dc) { return partition_profile_on_closure(inst, dc, true); };
  auto certify = [&](const PartitionProfile& pw, const PartitionProfile& pc, Mask w, int a, int b) {
    Verdict v;
    v.answer = Answer::yes;
    v.sets = *extract_partition(inst, pw, w, a);
    const auto right = *extract_partition(inst, pc, inst.universe() & ~w, b);
    v.sets.insert(v.sets.end(), right.begin(), right.end());
    v.sets.insert(v.sets.end(), empties.begin(), empties.begin() + (inst.s - a - b));
    for (std::size_t j : v.sets) v.blocks.push_back(inst.sets[j]);
    if (!check_partition_certificate(inst, v)) throw SoundnessError("A1 certificate failed re-verification");
    return v;
  };
  return run_a1(inst.n, inst.s, e, sched, seed, stats, profile, certify);
}

Verdict algorithm_a1_oracle(const SetOracle& oracle, int n, int s, const ParamSchedule& sched,
                            const RandomSeed& seed, SolverStats* stats) {
  if (n < 0 || n > kMaxUniverse) throw HypothesisError("A1: universe size outside 0..63");
  const int e = oracle(0) ? 1 : 0;
  auto profile = [&](const DownClosure& dc) { return partition_profile_oracle(oracle, dc, true); };
  auto certify = [&](const PartitionProfile& pw, const PartitionProfile& pc, Mask w, int a, int b) {
    Verdict v;
    v.answer = Answer::yes;
    v.blocks = *extract_partition_blocks(oracle, pw, w, a);
    const auto right = *extract_partition_blocks(oracle, pc, full_mask(n) & ~w, b);
    v.blocks.insert(v.blocks.end(), right.begin(), right.end());
    v.blocks.insert(v.blocks.end(), static_cast<std::size_t>(s - a - b), Mask{0});
    if (!check_oracle_partition(oracle, n, s, v)) throw SoundnessError("A1 certificate failed re-verification");
    return v;
  };
  return run_a1(n, s, e, sched, seed, stats, profile, certify);
}

bool check_oracle_partition(const SetOracle& oracle, int n, int s, const Verdict& v) {
  if (!v.yes()) return true;
  if (static_cast<int>(v.blocks.size()) != s) return false;
  Mask seen = 0;
  int empties = 0;
  for (Mask b : v.blocks) {
    if ((b & seen) || !oracle(b)) return false;
    if (b == 0 && ++empties > 1) return false;
    seen |= b;
  }
  return seen == full_mask(n);
}

int amplification_rounds(double delta) {
  if (!(delta > 0 && delta < 1)) throw HypothesisError("delta must lie in (0, 1)");
  return static_cast<int>(std::ceil(std::log(1 / delta) / std::log(4.0 / 3.0) - 1e-12));
}

Verdict solve_large_cover(const SetSystemInstance& inst, const RandomSeed& seed, const SolveOptions& opts,
                          SolverStats* stats) {
  inst.validate();
  const int n = inst.n;
  const int s = inst.s;
  if (n == 0) return cover_verdict(inst, {});
  if (s <= 0) return Verdict::no();
  const double sigma = static_cast<double>(s) / n;

  // Large sets first: each is either part of a cover found by the DP, or dropped.
  const int tau = size_threshold(std::pow(sigma, 4) * n / 1000);
  const LargeSetOutcome outcome = remove_sets_larger_than(inst, tau);
  if (const auto* yes = std::get_if<ResolvedYes>(&outcome)) {
    if (stats) stats->branch = "large-set";
    return cover_verdict(inst, yes->cover);
  }
  const ReducedInstance& reduced = std::get<ReducedInstance>(outcome);

  const int rounds = amplification_rounds(opts.delta);
  const int s_low = static_cast<int>(std::floor(sigma * n / 2 + 1e-9));
  for (int round = 0; round < rounds; ++round) {
    const RandomSeed round_seed = seed.derive(static_cast<std::uint64_t>(round));
    for (int sp = std::max(1, s_low); sp <= s; ++sp) {
      SetSystemInstance base = reduced.inst;
      base.s = sp;
      const ReducedInstance expanded = cover_to_partition(base, static_cast<double>(tau) / n);
      ParamSchedule sched = solver_schedule(static_cast<double>(sp) / n, n);
      if (opts.repeats > 0) sched.repeats = opts.repeats;
      const Verdict v = algorithm_a1(expanded.inst, sched, round_seed.derive(static_cast<std::uint64_t>(sp)), stats);
      if (!v.yes()) continue;
      std::vector<std::size_t> sets;
      for (std::size_t k : v.sets)
        if (expanded.origin[k] != kNoOrigin) sets.push_back(reduced.origin[expanded.origin[k]]);
      return cover_verdict(inst, std::move(sets));
    }
  }

  // Small solutions: covers of both halves, combined.
  const Mask x = full_mask(n / 2);
  const auto left = cover_on_sub_universe(inst, x);
  const auto right = cover_on_sub_universe(inst, inst.universe() & ~x);
  if (left && right && static_cast<int>(left->size() + right->size()) <= s) {
    if (stats) stats->branch = "small-solution";
    std::vector<std::size_t> sets = *left;
    sets.insert(sets.end(), right->begin(), right->end());
    return cover_verdict(inst, std::move(sets));
  }
  return Verdict::no();
}

Verdict solve_partition_oracle(const SetOracle& oracle, int n, int s, const RandomSeed& seed,
                               const SolveOptions& opts, SolverStats* stats) {
  if (n < 0 || n > kMaxUniverse) throw HypothesisError("partition oracle: universe size outside 0..63");
  if (oracle(0)) throw HypothesisError("partition oracle: the family contains the empty set");
  if (n == 0) {
    if (s != 0) return Verdict::no();
    Verdict v;
    v.answer = Answer::yes;
    return v;
  }
  if (s <= 0 || s > n) return Verdict::no();
  const double sigma = static_cast<double>(s) / n;
  const int tau = size_threshold(std::pow(sigma, 4) * n / 8);

  // Spot check: U itself, then random subsets above the size cap.
  if (tau < n) {
    if (oracle(full_mask(n))) throw HypothesisError("partition oracle: a set exceeds the size cap");
    Rng rng(seed.derive(0xC0FFEE));
    for (int probe = 0; probe < 256; ++probe) {
      const Mask x = rng.mask(n);
      if (popcount(x) > tau && oracle(x)) throw HypothesisError("partition oracle: a set exceeds the size cap");
    }
  }

  ParamSchedule sched = solver_schedule(sigma, n);
  if (opts.repeats > 0) sched.repeats = opts.repeats;
  const int rounds = amplification_rounds(opts.delta);
  for (int round = 0; round < rounds; ++round) {
    Verdict v = algorithm_a1_oracle(oracle, n, s, sched, seed.derive(static_cast<std::uint64_t>(round)), stats);
    if (v.yes()) return v;
  }
  return Verdict::no();
}

SetOracle independent_set_oracle(const SimpleGraph& g) {
  return SetOracle{g.n, [g](Mask x) { return x != 0 && is_subset(x, full_mask(g.n)) && g.is_independent(x); }};
}

SetOracle singleton_oracle(int n) {
  return SetOracle{n, [n](Mask x) { return popcount(x) == 1 && is_subset(x, full_mask(n)); }};
}

Verdict chromatic_decision(const SimpleGraph& g, int s, const RandomSeed& seed, const SolveOptions& opts,
                           SolverStats* stats) {
  g.validate();
  const int n = g.n;
  if (n == 0) {
    Verdict v;
    v.answer = Answer::yes;
    return v;
  }
  if (s <= 0) return Verdict::no();
  Verdict v;
  if (s >= n) {
    v.answer = Answer::yes;
    for (int k = 0; k < n; ++k) v.blocks.push_back(Mask{1} << k);
    return v;
  }
  const double sigma = static_cast<double>(s) / n;
  const int tau = std::min(n, size_threshold(std::pow(sigma, 4) * n / 8));

  if (binomial(n, tau) > kMaxLayerSubsets) throw GuardError("chromatic: C(n, tau) exceeds 2^28");
  std::optional<Mask> big;
  for_each_k_subset(n, tau, [&](Mask x) {
    if (!big && g.is_independent(x)) big = x;
  });

  if (big) {
    // Removing an independent set lowers chi by at most one.
    const Coloring rest = exact_coloring(g.induced(full_mask(n) & ~*big));
    if (rest.colors > s - 1) return Verdict::no();
    if (stats) stats->branch = "independent-set";
    const std::vector<int> keep = elements_of(full_mask(n) & ~*big);
    v.answer = Answer::yes;
    v.blocks.push_back(*big);
    for (Mask cls : rest.classes) {
      Mask lifted = 0;
      for (int k : elements_of(cls)) lifted |= Mask{1} << keep[static_cast<std::size_t>(k)];
      v.blocks.push_back(lifted);
    }
  } else {
    const Verdict p = solve_partition_oracle(independent_set_oracle(g), n, s, seed, opts, stats);
    if (!p.yes()) return Verdict::no();
    v.answer = Answer::yes;
    for (Mask b : p.blocks)
      if (b) v.blocks.push_back(b);
  }
  if (!check_coloring_certificate(g, s, v)) throw SoundnessError("coloring certificate failed re-verification");
  return v;
}

}  // namespace largecover
