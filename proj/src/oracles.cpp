#include "largecover/oracles.hpp"

#include <string>

#include "largecover/errors.hpp"

namespace largecover {
namespace {

void check_limits(const SetSystemInstance& inst, const EnumerationLimits& limits, const char* who) {
  inst.validate();
  if (inst.n > limits.max_n || static_cast<int>(inst.m()) > limits.max_m)
    throw GuardError(std::string(who) + ": enumeration guard exceeded (n=" + std::to_string(inst.n) +
                     ", m=" + std::to_string(inst.m()) + "); use a DP solver instead");
}

std::vector<std::size_t> indices_of(std::uint64_t pick) {
  std::vector<std::size_t> out;
  for (int j : elements_of(pick)) out.push_back(static_cast<std::size_t>(j));
  return out;
}

Verdict make_yes(const SetSystemInstance& inst, std::uint64_t pick) {
  Verdict v;
  v.answer = Answer::yes;
  v.sets = indices_of(pick);
  for (std::size_t j : v.sets) v.blocks.push_back(inst.sets[j]);
  return v;
}

// Union of the picked sets, or ~0 if two of them intersect.
template <bool Disjoint>
Mask union_of(const SetSystemInstance& inst, std::uint64_t pick) {
  Mask u = 0;
  for (std::uint64_t rest = pick; rest; rest &= rest - 1) {
    const Mask f = inst.sets[std::countr_zero(rest)];
    if constexpr (Disjoint) {
      if (u & f) return ~Mask{0};
    }
    u |= f;
  }
  return u;
}

bool colorable(const SimpleGraph& g, int k, std::vector<int>& color, int v) {
  if (v == g.n) return true;
  int used = 0;
  for (int u = 0; u < v; ++u) used = std::max(used, color[u] + 1);
  for (int c = 0; c < std::min(k, used + 1); ++c) {
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (color[u] == c && g.adjacent(u, v)) ok = false;
    if (!ok) continue;
    color[v] = c;
    if (colorable(g, k, color, v + 1)) return true;
  }
  color[v] = -1;
  return false;
}

}  // namespace

Verdict brute_force_set_cover(const SetSystemInstance& inst, EnumerationLimits limits) {
  check_limits(inst, limits, "brute_force_set_cover");
  const std::uint64_t total = std::uint64_t{1} << inst.m();
  const Mask u = inst.universe();
  int best = -1;
  std::uint64_t best_pick = 0;
  for (std::uint64_t pick = 0; pick < total; ++pick) {
    const int size = popcount(pick);
    if (best >= 0 && size >= best) continue;
    if (union_of<false>(inst, pick) == u) {
      best = size;
      best_pick = pick;
    }
  }
  if (best < 0 || best > inst.s) return Verdict::no();
  return make_yes(inst, best_pick);
}

Verdict brute_force_set_partition(const SetSystemInstance& inst, EnumerationLimits limits) {
  check_limits(inst, limits, "brute_force_set_partition");
  const std::uint64_t total = std::uint64_t{1} << inst.m();
  const Mask u = inst.universe();
  for (std::uint64_t pick = 0; pick < total; ++pick) {
    if (popcount(pick) != inst.s) continue;
    if (union_of<true>(inst, pick) == u) return make_yes(inst, pick);
  }
  return Verdict::no();
}

std::optional<int> brute_force_min_partition_size(const SetSystemInstance& inst, EnumerationLimits limits) {
  check_limits(inst, limits, "brute_force_min_partition_size");
  const std::uint64_t total = std::uint64_t{1} << inst.m();
  const Mask u = inst.universe();
  std::optional<int> best;
  for (std::uint64_t pick = 0; pick < total; ++pick) {
    const int size = popcount(pick);
    if (best && size >= *best) continue;
    if (union_of<true>(inst, pick) == u) best = size;
  }
  return best;
}

int brute_force_chromatic(const SimpleGraph& g, int max_n) {
  g.validate();
  if (g.n > max_n)
    throw GuardError("brute_force_chromatic: n=" + std::to_string(g.n) + " exceeds guard " + std::to_string(max_n));
  if (g.n == 0) return 0;
  std::vector<int> color(static_cast<std::size_t>(g.n), -1);
  for (int k = 1;; ++k) {
    if (colorable(g, k, color, 0)) return k;
  }
}

LinSatVerdict brute_force_linsat(const LinSatInstance& inst, int max_m) {
  inst.validate();
  if (inst.m_cols() > max_m)
    throw GuardError("brute_force_linsat: m=" + std::to_string(inst.m_cols()) + " exceeds guard " +
                     std::to_string(max_m));
  const std::uint64_t total = std::uint64_t{1} << inst.m_cols();
  LinSatVerdict best;
  bool found = false;
  for (std::uint64_t x = 0; x < total; ++x) {
    if (inst.image(x) != inst.b) continue;
    const std::int64_t c = inst.cost(x);
    if (!found || c < best.cost) {
      found = true;
      best.x = x;
      best.cost = c;
    }
  }
  if (found && best.cost <= inst.t) best.answer = Answer::yes;
  if (!best.yes()) return LinSatVerdict{};
  return best;
}

}  // namespace largecover
