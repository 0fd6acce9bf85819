#include "largecover/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "largecover/dp_core.hpp"
#include "largecover/errors.hpp"

namespace largecover {
namespace {

void partitions_rec(int remaining, int parts, int cap, IntegerPartition& cur, std::vector<IntegerPartition>& out) {
  if (parts == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  // The remaining parts-1 entries need at least one element each.
  const int hi = std::min(cap, remaining - (parts - 1));
  for (int a = hi; a >= 1; --a) {
    if (a * parts < remaining) break;
    cur.push_back(a);
    partitions_rec(remaining - a, parts - 1, a, cur, out);
    cur.pop_back();
  }
}

void reject_empty_sets(const SetSystemInstance& inst, const char* who) {
  if (inst.has_empty_sets()) throw HypothesisError(std::string(who) + ": instance has empty sets");
}

template <typename IsLarge>
LargeSetOutcome remove_large(const SetSystemInstance& inst, IsLarge is_large) {
  inst.validate();
  ReducedInstance reduced;
  reduced.inst.n = inst.n;
  reduced.inst.s = inst.s;
  reduced.inst.allows_empty = inst.allows_empty;
  for (std::size_t j = 0; j < inst.sets.size(); ++j) {
    const Mask f = inst.sets[j];
    if (!is_large(popcount(f))) {
      reduced.inst.sets.push_back(f);
      reduced.origin.push_back(j);
      continue;
    }
    if (inst.s < 1) continue;
    auto rest = cover_on_sub_universe(inst, inst.universe() & ~f);
    if (rest && static_cast<int>(rest->size()) <= inst.s - 1) {
      ResolvedYes yes;
      yes.cover.push_back(j);
      for (std::size_t k : *rest)
        if (k != j) yes.cover.push_back(k);
      return yes;
    }
  }
  return reduced;
}

}  // namespace

std::vector<IntegerPartition> integer_partitions(int n, int k) {
  std::vector<IntegerPartition> out;
  if (n < 0 || k < 0) return out;
  IntegerPartition cur;
  partitions_rec(n, k, n, cur, out);
  return out;
}

std::size_t count_integer_partitions(int n, int k) {
  if (n < 0 || k < 0) return 0;
  std::vector<std::vector<std::size_t>> p(static_cast<std::size_t>(n) + 1,
                                          std::vector<std::size_t>(static_cast<std::size_t>(k) + 1, 0));
  p[0][0] = 1;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= k; ++b) p[a][b] = p[a - 1][b - 1] + (a >= b ? p[a - b][b] : 0);
  return p[n][k];
}

TupleInstance reduce_solution_size(const SetSystemInstance& inst, int c, Problem mode, std::size_t max_sets) {
  inst.validate();
  if (c < 1) throw HypothesisError("reduce_solution_size: c must be positive");
  if (inst.s % c != 0) throw HypothesisError("reduce_solution_size: c does not divide s");
  if (mode == Problem::partition) reject_empty_sets(inst, "reduce_solution_size");
  const std::size_t m = inst.m();
  {
    long double total = 1;
    for (int k = 0; k < c; ++k) total *= static_cast<long double>(m);
    if (total > static_cast<long double>(max_sets))
      throw GuardError("reduce_solution_size: m^c exceeds the set guard");
  }

  TupleInstance out;
  out.inst.n = inst.n;
  out.inst.s = inst.s / c;
  out.inst.allows_empty = inst.allows_empty;
  if (m == 0) return out;

  std::vector<std::size_t> tuple(static_cast<std::size_t>(c), 0);
  while (true) {
    Mask uni = 0;
    bool ok = true;
    for (std::size_t k = 0; k < tuple.size() && ok; ++k) {
      const Mask f = inst.sets[tuple[k]];
      if (mode == Problem::partition) {
        if (f & uni) ok = false;
        for (std::size_t l = 0; l < k && ok; ++l)
          if (tuple[l] == tuple[k]) ok = false;
      }
      uni |= f;
    }
    if (ok) {
      out.inst.sets.push_back(uni);
      out.origin.push_back(tuple);
    }
    std::size_t pos = tuple.size();
    while (pos > 0 && ++tuple[pos - 1] == m) tuple[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

LargeSetOutcome remove_large_sets(const SetSystemInstance& inst, double eps) {
  if (!(eps > 0 && eps < 1)) throw HypothesisError("remove_large_sets: eps must lie in (0, 1)");
  const double threshold = eps * inst.n;
  return remove_large(inst, [threshold](int size) { return size >= threshold - 1e-9; });
}

LargeSetOutcome remove_sets_larger_than(const SetSystemInstance& inst, int tau) {
  return remove_large(inst, [tau](int size) { return size > tau; });
}

ReducedInstance cover_to_partition(const SetSystemInstance& inst, double eps, std::size_t max_sets) {
  inst.validate();
  const double cap = eps * inst.n + 1e-9;
  long double total = 0;
  for (Mask f : inst.sets) {
    if (popcount(f) > cap) throw HypothesisError("cover_to_partition: a set exceeds eps n elements");
    total += std::exp2(static_cast<long double>(popcount(f)));
  }
  if (total > static_cast<long double>(max_sets)) throw GuardError("cover_to_partition: expansion exceeds the set guard");

  ReducedInstance out;
  out.inst.n = inst.n;
  out.inst.s = inst.s;
  out.inst.allows_empty = true;
  std::unordered_set<Mask> seen;
  for (std::size_t j = 0; j < inst.sets.size(); ++j) {
    for_each_submask(inst.sets[j], [&](Mask x) {
      if (x != 0 && seen.insert(x).second) {
        out.inst.sets.push_back(x);
        out.origin.push_back(j);
      }
    });
  }
  const int empties = std::max(1, inst.s - inst.n);
  for (int k = 0; k < empties; ++k) {
    out.inst.sets.push_back(0);
    out.origin.push_back(kNoOrigin);
  }
  return out;
}

CoverFamily partition_to_cover(const SetSystemInstance& inst, double eps, std::size_t max_sets,
                               std::size_t max_partitions) {
  inst.validate();
  reject_empty_sets(inst, "partition_to_cover");
  if (!(eps > 0)) throw HypothesisError("partition_to_cover: eps must be positive");
  CoverFamily out;
  out.c = static_cast<int>(std::ceil(2.0 / eps - 1e-12));
  out.padded_s = (inst.s + out.c - 1) / out.c * out.c;

  // Each dummy element is covered only by its own dummy set.
  SetSystemInstance padded = inst;
  const int dummies = out.padded_s - inst.s;
  if (padded.n + dummies > kMaxUniverse) throw GuardError("partition_to_cover: padded universe exceeds 63");
  for (int k = 0; k < dummies; ++k) padded.sets.push_back(Mask{1} << (padded.n + k));
  padded.n += dummies;
  padded.s = out.padded_s;

  const TupleInstance reduced = reduce_solution_size(padded, out.c, Problem::partition, max_sets);
  out.s_reduced = reduced.inst.s;
  const int n = reduced.inst.n;
  const int k = out.s_reduced;
  if (n + k > kMaxUniverse) throw GuardError("partition_to_cover: tagged universe exceeds 63");
  if (count_integer_partitions(n, k) > max_partitions) throw GuardError("partition_to_cover: too many integer partitions");
  out.partitions = integer_partitions(n, k);
  for (const IntegerPartition& parts : out.partitions) {
    SetSystemInstance cover;
    cover.n = n + k;
    cover.s = k;
    for (int i = 0; i < k; ++i) {
      const Mask tag = Mask{1} << (n + i);
      for (Mask f : reduced.inst.sets)
        if (popcount(f) == parts[static_cast<std::size_t>(i)]) cover.sets.push_back(f | tag);
    }
    out.instances.push_back(std::move(cover));
  }
  return out;
}

SetSystemInstance pad_partition_solution_size(const SetSystemInstance& inst, double eps1) {
  inst.validate();
  reject_empty_sets(inst, "pad_partition_solution_size");
  const int s = inst.s;
  const int universe = inst.n + s;
  if (universe > kMaxUniverse) throw GuardError("pad_partition_solution_size: tagged universe exceeds 63");
  if (s > std::min(eps1, 0.5) * universe + 1e-9)
    throw HypothesisError("pad_partition_solution_size: s exceeds min(eps1, 1/2) of the tagged universe");

  SetSystemInstance out;
  out.n = universe;
  for (Mask f : inst.sets)
    for (int i = 0; i < s; ++i) out.sets.push_back(f | (Mask{1} << (inst.n + i)));
  const int target = static_cast<int>(std::floor(eps1 * universe + 1e-9));
  const int empties = std::max(0, target - s);
  out.sets.insert(out.sets.end(), static_cast<std::size_t>(empties), Mask{0});
  out.s = s + empties;
  out.allows_empty = empties > 0;
  return out;
}

LinSatInstance partition_to_linsat(const SetSystemInstance& inst) {
  inst.validate();
  reject_empty_sets(inst, "partition_to_linsat");
  LinSatInstance out;
  out.n_rows = inst.n;
  out.columns = inst.sets;
  out.b = inst.universe();
  const std::int64_t n = inst.n;
  for (Mask f : inst.sets) out.weights.push_back(n * popcount(f) + 1);
  out.t = n * n + inst.s;
  return out;
}

std::optional<int> partition_size_from_linsat_cost(int n, std::optional<std::int64_t> min_cost) {
  if (!min_cost) return std::nullopt;
  const std::int64_t sq = static_cast<std::int64_t>(n) * n;
  if (*min_cost > sq + n) return std::nullopt;
  return static_cast<int>(*min_cost - sq);
}

}  // namespace largecover
