#include <algorithm>
#include <cmath>
#include <variant>

#include "doctest.h"
#include "helpers.hpp"
#include "largecover/dp_core.hpp"
#include "largecover/errors.hpp"
#include "largecover/lattice.hpp"
#include "largecover/oracles.hpp"
#include "largecover/reductions.hpp"
#include "largecover/rng.hpp"

using namespace largecover;
using test::bits;
using test::family;

namespace {

SetSystemInstance small_instance(Rng& rng, bool nonempty) {
  SetSystemInstance inst;
  inst.n = 1 + static_cast<int>(rng.below(7));
  const int m = static_cast<int>(rng.below(9));
  for (int j = 0; j < m; ++j) {
    Mask f = rng.mask(inst.n) & rng.mask(inst.n);
    if (nonempty && f == 0) f = Mask{1} << rng.below(static_cast<std::uint64_t>(inst.n));
    inst.sets.push_back(f);
  }
  inst.allows_empty = !nonempty;
  inst.s = static_cast<int>(rng.below(static_cast<std::uint64_t>(inst.n + 1)));
  return inst;
}

// Exact Set Partition through the full-lattice profile (handles many sets).
bool partition_yes(const SetSystemInstance& inst) {
  const DownClosure dc = full_lattice(inst.n);
  return inst.s >= 0 && inst.s <= 63 && partition_profile_on_closure(inst, dc)(inst.universe(), inst.s);
}

bool cover_yes(const SetSystemInstance& inst) { return folklore_cover_dp(inst).yes(); }

}  // namespace

TEST_CASE("integer partitions") {
  CHECK(integer_partitions(4, 2) == std::vector<IntegerPartition>{{3, 1}, {2, 2}});
  CHECK(integer_partitions(0, 0) == std::vector<IntegerPartition>{{}});
  CHECK(integer_partitions(3, 0).empty());
  CHECK(integer_partitions(2, 3).empty());
  for (int n = 0; n <= 30; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto parts = integer_partitions(n, k);
      REQUIRE(parts.size() == count_integer_partitions(n, k));
      for (std::size_t p = 0; p < parts.size(); ++p) {
        CHECK(static_cast<int>(parts[p].size()) == k);
        int sum = 0;
        for (std::size_t q = 0; q < parts[p].size(); ++q) {
          sum += parts[p][q];
          CHECK(parts[p][q] >= 1);
          if (q) CHECK(parts[p][q] <= parts[p][q - 1]);
        }
        CHECK(sum == n);
        if (p) CHECK(parts[p - 1] > parts[p]);
      }
    }
  }
  // p(30) summed over k.
  std::size_t total = 0;
  for (int k = 0; k <= 30; ++k) total += count_integer_partitions(30, k);
  CHECK(total == 5604);
}

TEST_CASE("reduce_solution_size examples") {
  const auto pair = family(2, {bits({0}), bits({1})}, 2);
  const TupleInstance red = reduce_solution_size(pair, 2, Problem::partition);
  CHECK(red.inst.sets == std::vector<Mask>{bits({0, 1}), bits({0, 1})});
  CHECK(red.inst.s == 1);
  CHECK(brute_force_set_partition(red.inst).yes());
  CHECK(red.origin == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}});

  const auto three = family(3, {bits({0}), bits({1, 2}), bits({0, 1})}, 2);
  CHECK(reduce_solution_size(three, 1, Problem::cover).inst == three);

  const TupleInstance cov = reduce_solution_size(family(1, {bits({0}), bits({0})}, 2), 2, Problem::cover);
  CHECK(cov.inst.sets.size() == 4);
  CHECK(std::count(cov.origin.begin(), cov.origin.end(), std::vector<std::size_t>{0, 0}) == 1);

  CHECK_THROWS_AS(reduce_solution_size(three, 3, Problem::cover), HypothesisError);
  CHECK_THROWS_AS(reduce_solution_size(three, 2, Problem::cover, 8), GuardError);
}

TEST_CASE("remove_large_sets examples") {
  const auto one = remove_large_sets(family(4, {bits({0, 1, 2, 3})}, 1), 0.5);
  REQUIRE(std::holds_alternative<ResolvedYes>(one));
  CHECK(std::get<ResolvedYes>(one).cover == std::vector<std::size_t>{0});

  const auto inst = family(4, {bits({0, 1, 2}), bits({3})}, 1);
  const auto out = remove_large_sets(inst, 0.5);
  REQUIRE(std::holds_alternative<ReducedInstance>(out));
  const auto& red = std::get<ReducedInstance>(out);
  CHECK(red.inst.sets == std::vector<Mask>{bits({3})});
  CHECK(red.origin == std::vector<std::size_t>{1});
  CHECK_FALSE(brute_force_set_cover(inst).yes());
  CHECK_FALSE(brute_force_set_cover(red.inst).yes());

  const auto small = family(4, {bits({0}), bits({3})}, 2);
  const auto same = remove_large_sets(small, 0.5);
  REQUIRE(std::holds_alternative<ReducedInstance>(same));
  CHECK(std::get<ReducedInstance>(same).inst == small);

  CHECK_THROWS_AS(remove_large_sets(small, 1.0), HypothesisError);
}

TEST_CASE("cover_to_partition examples") {
  const ReducedInstance exp = cover_to_partition(family(2, {bits({0, 1})}, 1), 1.0);
  std::vector<Mask> sets = exp.inst.sets;
  std::sort(sets.begin(), sets.end());
  CHECK(sets == std::vector<Mask>{0, bits({0}), bits({1}), bits({0, 1})});
  CHECK(exp.inst.allows_empty);

  const auto inst = family(3, {bits({0, 1}), bits({1, 2})}, 2);
  const ReducedInstance yes = cover_to_partition(inst, 1.0);
  CHECK(brute_force_set_cover(inst).yes());
  const Verdict v = brute_force_set_partition(yes.inst);
  CHECK(v.yes());
  CHECK(check_partition_certificate(yes.inst, v));

  CHECK_THROWS_AS(cover_to_partition(inst, 0.5), HypothesisError);
}

TEST_CASE("partition_to_cover examples") {
  const auto inst = family(2, {bits({0}), bits({1}), bits({0, 1})}, 2);
  const CoverFamily fam = partition_to_cover(inst, 2.0);
  CHECK(fam.c == 1);
  CHECK(fam.s_reduced == 2);
  REQUIRE(fam.partitions == std::vector<IntegerPartition>{{1, 1}});
  REQUIRE(fam.instances.size() == 1);
  CHECK(fam.instances[0].n == 4);
  CHECK(fam.instances[0].sets == std::vector<Mask>{bits({0, 2}), bits({1, 2}), bits({0, 3}), bits({1, 3})});
  CHECK(brute_force_set_cover(fam.instances[0]).yes());

  auto one = inst;
  one.s = 1;
  const CoverFamily f1 = partition_to_cover(one, 2.0);
  REQUIRE(f1.instances.size() == 1);
  CHECK(f1.instances[0].sets == std::vector<Mask>{bits({0, 1, 2})});
  CHECK(brute_force_set_cover(f1.instances[0]).yes());

  // c = 2 pads s = 3 to 4 with a forced dummy pair.
  auto odd = family(3, {bits({0}), bits({1}), bits({2})}, 3);
  const CoverFamily f2 = partition_to_cover(odd, 1.0);
  CHECK(f2.c == 2);
  CHECK(f2.padded_s == 4);
  CHECK(f2.s_reduced == 2);
}

TEST_CASE("pad_partition_solution_size examples") {
  const auto a = pad_partition_solution_size(family(2, {bits({0, 1})}, 1), 1.0 / 3);
  CHECK(a.n == 3);
  CHECK(a.sets == std::vector<Mask>{bits({0, 1, 2})});
  CHECK(a.s == 1);
  CHECK(brute_force_set_partition(a).yes());

  const auto b = pad_partition_solution_size(family(2, {bits({0}), bits({1})}, 2), 0.5);
  CHECK(b.sets == std::vector<Mask>{bits({0, 2}), bits({0, 3}), bits({1, 2}), bits({1, 3})});
  CHECK(brute_force_set_partition(b).yes());

  const auto c = pad_partition_solution_size(family(4, {bits({0, 1}), bits({2, 3})}, 2), 0.5);
  CHECK(c.s == 3);
  CHECK(std::count(c.sets.begin(), c.sets.end(), Mask{0}) == 1);
  CHECK(partition_yes(c));

  CHECK_THROWS_AS(pad_partition_solution_size(family(2, {bits({0}), bits({1})}, 2), 0.2), HypothesisError);
  CHECK_THROWS_AS(pad_partition_solution_size(family(2, {0}, 1, true), 0.5), HypothesisError);
}

TEST_CASE("partition_to_linsat examples") {
  const auto inst = family(2, {bits({0}), bits({1}), bits({0, 1})}, 1);
  LinSatInstance lin = partition_to_linsat(inst);
  CHECK(lin.weights == std::vector<std::int64_t>{3, 3, 5});
  CHECK(lin.t == 5);
  lin.t = 1000;
  const LinSatVerdict best = brute_force_linsat(lin);
  REQUIRE(best.yes());
  CHECK(best.cost == 5);
  CHECK(partition_size_from_linsat_cost(2, best.cost) == 1);

  LinSatInstance none = partition_to_linsat(family(2, {bits({0})}, 1));
  none.t = 1000;
  CHECK_FALSE(brute_force_linsat(none).yes());
  CHECK_FALSE(partition_size_from_linsat_cost(2, std::nullopt).has_value());

  LinSatInstance singles = partition_to_linsat(family(3, test::singletons(3), 3));
  singles.t = 1000;
  const LinSatVerdict sv = brute_force_linsat(singles);
  CHECK(sv.cost == 12);
  CHECK(partition_size_from_linsat_cost(3, sv.cost) == 3);

  CHECK_THROWS_AS(partition_to_linsat(family(2, {0}, 1, true)), HypothesisError);
}

TEST_CASE("reductions preserve verdicts on random instances") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(RandomSeed{seed, {21}});
    const auto any = small_instance(rng, false);
    const auto clean = small_instance(rng, true);

    // Observation on tuples, both modes.
    for (int c : {1, 2}) {
      auto cov = any;
      cov.s -= cov.s % c;
      CHECK(cover_yes(reduce_solution_size(cov, c, Problem::cover).inst) == cover_yes(cov));
      auto part = clean;
      part.s -= part.s % c;
      CHECK(partition_yes(reduce_solution_size(part, c, Problem::partition).inst) == partition_yes(part));
    }

    // Large-set removal.
    {
      const double eps = 0.3 + 0.1 * static_cast<double>(rng.below(6));
      const auto outcome = remove_large_sets(any, eps);
      if (const auto* r = std::get_if<ResolvedYes>(&outcome)) {
        Verdict v;
        v.answer = Answer::yes;
        v.sets = r->cover;
        CHECK(check_cover_certificate(any, v));
      } else {
        const auto& red = std::get<ReducedInstance>(outcome);
        CHECK(cover_yes(red.inst) == cover_yes(any));
        for (Mask f : red.inst.sets) CHECK(popcount(f) < eps * any.n);
      }
    }

    // Cover to partition, with the set-count bound.
    {
      const ReducedInstance exp = cover_to_partition(any, 1.0);
      CHECK(partition_yes(exp.inst) == cover_yes(any));
      if (any.m() >= 1) {
        std::size_t bound = 0;
        int biggest = 0;
        for (Mask f : any.sets) biggest = std::max(biggest, popcount(f));
        bound = any.m() << biggest;
        CHECK(exp.inst.m() <= bound);
        const double eps = static_cast<double>(biggest) / any.n;
        CHECK(static_cast<long double>(exp.inst.m()) <= any.m() * std::exp2(static_cast<long double>(eps * any.n)));
      }
      for (std::size_t k = 0; k < exp.inst.m(); ++k) {
        if (exp.origin[k] == kNoOrigin)
          CHECK(exp.inst.sets[k] == 0);
        else
          CHECK(is_subset(exp.inst.sets[k], any.sets[exp.origin[k]]));
      }
    }

    // Partition to a family of cover instances.
    {
      const double eps = rng.bernoulli(0.5) ? 2.0 : 1.0;
      const CoverFamily fam = partition_to_cover(clean, eps);
      bool some = false;
      for (const auto& ci : fam.instances) some = some || cover_yes(ci);
      CHECK(some == partition_yes(clean));
    }

    // Solution-size padding.
    {
      const auto padded = pad_partition_solution_size(clean, 0.5);
      CHECK(partition_yes(padded) == partition_yes(clean));
    }

    // Linear Sat encoding.
    {
      LinSatInstance lin = partition_to_linsat(clean);
      lin.t = std::int64_t{1} << 40;
      const LinSatVerdict best = brute_force_linsat(lin);
      const auto size = partition_size_from_linsat_cost(clean.n, best.yes() ? std::optional<std::int64_t>(best.cost)
                                                                         : std::nullopt);
      CHECK(size == brute_force_min_partition_size(clean));
      const LinSatInstance decision = partition_to_linsat(clean);
      const auto min_size = brute_force_min_partition_size(clean);
      CHECK(brute_force_linsat(decision).yes() == (min_size && *min_size <= clean.s));
    }
  }
}
