#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "largecover/dp_core.hpp"
#include "largecover/errors.hpp"
#include "largecover/generators.hpp"
#include "largecover/oracles.hpp"
#include "largecover/rng.hpp"

using namespace largecover;
using test::bits;
using test::family;

namespace {

SetSystemInstance random_instance(Rng& rng, int n_max, int m_max) {
  SetSystemInstance inst;
  inst.n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max)));
  const int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(m_max + 1)));
  const int cap = 1 + static_cast<int>(rng.below(3));
  for (int j = 0; j < m; ++j) {
    Mask f = 0;
    const int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cap)));
    while (popcount(f) < std::min(size, inst.n)) f |= Mask{1} << rng.below(static_cast<std::uint64_t>(inst.n));
    inst.sets.push_back(f);
  }
  inst.s = static_cast<int>(rng.below(static_cast<std::uint64_t>(inst.n + 1)));
  return inst;
}

SetOracle membership(const SetSystemInstance& inst) {
  return SetOracle{inst.n, [sets = inst.sets](Mask x) { return std::find(sets.begin(), sets.end(), x) != sets.end(); }};
}

// The instance on universe W (relabelled) keeping only sets inside W.
SetSystemInstance restrict_to(const SetSystemInstance& inst, Mask w, int target) {
  const std::vector<int> elems = elements_of(w);
  SetSystemInstance out;
  out.n = static_cast<int>(elems.size());
  out.s = target;
  for (Mask f : inst.sets) {
    if (!is_subset(f, w)) continue;
    Mask g = 0;
    for (std::size_t k = 0; k < elems.size(); ++k)
      if ((f >> elems[k]) & 1U) g |= Mask{1} << k;
    out.sets.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("folklore_cover_dp examples") {
  const auto inst = family(3, {bits({0, 1}), bits({1, 2}), bits({0})}, 2);
  const Verdict v = folklore_cover_dp(inst);
  CHECK(v.yes());
  CHECK(check_cover_certificate(inst, v));
  CHECK(folklore_cover_dp(family(3, {bits({0, 1}), bits({2})}, 5)).yes());
  for (int s = 0; s < 4; ++s) CHECK_FALSE(folklore_cover_dp(family(2, {}, s)).yes());
  CHECK(folklore_cover_dp(family(0, {}, 0)).yes());
  CHECK_THROWS_AS(folklore_cover_dp(family(27, {}, 1)), GuardError);
}

TEST_CASE("folklore_cover_dp agrees with brute force") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Rng rng(RandomSeed{seed, {1}});
    const auto inst = random_instance(rng, 10, 12);
    const Verdict v = folklore_cover_dp(inst);
    CHECK(v.yes() == brute_force_set_cover(inst).yes());
    CHECK(check_cover_certificate(inst, v));
  }
}

TEST_CASE("CoverTable certificates are minimum covers") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(RandomSeed{seed, {2}});
    auto inst = random_instance(rng, 8, 8);
    const CoverTable table(inst);
    const auto best = table.min_cover(inst.universe());
    const auto cert = table.certificate(inst.universe());
    REQUIRE(best.has_value() == cert.has_value());
    if (!cert) continue;
    CHECK(static_cast<int>(cert->size()) == *best);
    inst.s = *best;
    CHECK(brute_force_set_cover(inst).yes());
    if (*best > 0) {
      inst.s = *best - 1;
      CHECK_FALSE(brute_force_set_cover(inst).yes());
    }
  }
}

TEST_CASE("min_cover_on_sub_universe examples") {
  const auto inst = family(4, {bits({0, 1}), bits({2, 3})}, 2);
  CHECK(min_cover_on_sub_universe(inst, 0) == 0);
  CHECK(min_cover_on_sub_universe(inst, bits({0, 1})) == 1);
  CHECK(min_cover_on_sub_universe(inst, bits({1, 2})) == 2);
  CHECK_FALSE(min_cover_on_sub_universe(family(2, {bits({0})}, 1), bits({1})).has_value());
  CHECK(min_cover_on_sub_universe(family(2, {bits({0})}, 1), bits({0})) == 1);
  const auto cover = cover_on_sub_universe(inst, bits({1, 2}));
  REQUIRE(cover.has_value());
  CHECK(*cover == std::vector<std::size_t>{0, 1});
}

TEST_CASE("partition_profile_on_closure examples") {
  const auto inst = family(2, {bits({0}), bits({1}), bits({0, 1})}, 2);
  const DownClosure dc = full_lattice(2);
  const PartitionProfile c = partition_profile_on_closure(inst, dc);
  CHECK(c(bits({0, 1}), 1));
  CHECK(c(bits({0, 1}), 2));
  CHECK_FALSE(c(bits({0}), 2));
  CHECK(c(0, 0));
  CHECK_FALSE(c(0, 1));

  const Mask none = 0;
  const DownClosure only_empty = down_closure(std::span<const Mask>(&none, 1), 2);
  const PartitionProfile c0 = partition_profile_on_closure(inst, only_empty);
  CHECK(only_empty.size() == 1);
  CHECK(c0.counts(0) == 1);
  CHECK_FALSE(c0(bits({0}), 1));
}

TEST_CASE("empty sets shift the profile unless skipped") {
  const auto inst = family(2, {bits({0, 1}), 0, 0}, 3, true);
  const DownClosure dc = full_lattice(2);
  const PartitionProfile with = partition_profile_on_closure(inst, dc);
  CHECK(with(0, 2));
  CHECK(with(bits({0, 1}), 3));
  CHECK_FALSE(with(bits({0, 1}), 4));
  const PartitionProfile skip = partition_profile_on_closure(inst, dc, true);
  CHECK_FALSE(skip(0, 1));
  CHECK(skip.counts(bits({0, 1})) == 0b10);
}

TEST_CASE("partition_profile_oracle examples") {
  const auto inst = family(2, {bits({0}), bits({1}), bits({0, 1})}, 2);
  const DownClosure dc = full_lattice(2);
  const PartitionProfile c = partition_profile_oracle(membership(inst), dc);
  CHECK(c(bits({0, 1}), 1));
  CHECK(c(bits({0, 1}), 2));

  const DownClosure dc4 = full_lattice(4);
  const PartitionProfile never = partition_profile_oracle(SetOracle{4, [](Mask) { return false; }}, dc4);
  for (Mask x = 0; x < 16; ++x) CHECK(never.counts(x) == (x == 0 ? 1U : 0U));

  const SetOracle singles{4, [](Mask x) { return popcount(x) == 1; }};
  const PartitionProfile sp = partition_profile_oracle(singles, dc4);
  for (Mask x = 0; x < 16; ++x) CHECK(sp.counts(x) == (std::uint64_t{1} << popcount(x)));
}

TEST_CASE("explicit and oracle profiles agree on random closures") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Rng rng(RandomSeed{seed, {3}});
    auto inst = random_instance(rng, 10, 12);
    std::sort(inst.sets.begin(), inst.sets.end());
    inst.sets.erase(std::unique(inst.sets.begin(), inst.sets.end()), inst.sets.end());
    std::vector<Mask> ws;
    for (int k = 0; k < 5; ++k) ws.push_back(rng.mask(inst.n));
    const DownClosure dc = down_closure(ws, inst.n);
    CHECK(partition_profile_on_closure(inst, dc) == partition_profile_oracle(membership(inst), dc));
  }
}

TEST_CASE("c_i(W) matches brute force on the induced instance") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(RandomSeed{seed, {4}});
    const auto inst = random_instance(rng, 8, 9);
    const DownClosure dc = full_lattice(inst.n);
    const PartitionProfile prof = partition_profile_on_closure(inst, dc);
    for (std::size_t p = 0; p < dc.size(); ++p) {
      const Mask w = dc[p];
      for (int i = 0; i <= inst.n; ++i) {
        const bool truth = brute_force_set_partition(restrict_to(inst, w, i)).yes();
        CHECK(prof(w, i) == truth);
        if (truth) {
          const auto cert = extract_partition(inst, prof, w, i);
          REQUIRE(cert.has_value());
          Mask u = 0;
          for (std::size_t j : *cert) {
            CHECK((u & inst.sets[j]) == 0);
            u |= inst.sets[j];
          }
          CHECK(u == w);
          CHECK(static_cast<int>(cert->size()) == i);
        }
      }
    }
  }
}

TEST_CASE("extract_partition_blocks recovers oracle partitions") {
  const SetOracle pairs{6, [](Mask x) { return popcount(x) == 2 && (x == bits({0, 1}) || x == bits({2, 3}) || x == bits({4, 5}) || x == bits({1, 2})); }};
  const DownClosure dc = full_lattice(6);
  const PartitionProfile prof = partition_profile_oracle(pairs, dc, true);
  const auto blocks = extract_partition_blocks(pairs, prof, full_mask(6), 3);
  REQUIRE(blocks.has_value());
  CHECK(blocks->size() == 3);
  Mask u = 0;
  for (Mask b : *blocks) {
    CHECK(pairs(b));
    CHECK((u & b) == 0);
    u |= b;
  }
  CHECK(u == full_mask(6));
  CHECK_FALSE(extract_partition_blocks(pairs, prof, full_mask(6), 2).has_value());
}

TEST_CASE("exact_coloring matches brute force chromatic number") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Rng rng(RandomSeed{seed, {5}});
    const int n = static_cast<int>(rng.below(10));
    const SimpleGraph g = generate_random_graph(n, 0.1 + 0.8 * static_cast<double>(rng.below(100)) / 100.0,
                                                RandomSeed{seed, {6}});
    const Coloring col = exact_coloring(g);
    CHECK(col.colors == brute_force_chromatic(g));
    Verdict v;
    v.answer = Answer::yes;
    v.blocks = col.classes;
    CHECK(check_coloring_certificate(g, col.colors, v));
  }
  CHECK_THROWS_AS(exact_coloring(SimpleGraph(21)), GuardError);
}
