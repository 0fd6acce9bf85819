#include "largecover/witness.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "largecover/errors.hpp"
#include "largecover/oracles.hpp"

namespace largecover {
namespace {

constexpr double kSlack = 1e-12;

// Partitions of `rest` into nonempty sets, one per call of fn(chosen).
template <typename Fn>
void for_each_partition(const SetSystemInstance& inst, Mask rest, std::vector<std::size_t>& chosen, int budget,
                        Fn& fn) {
  if (rest == 0) {
    fn(chosen);
    return;
  }
  if (budget == 0) return;
  const Mask u = lowest_bit(rest);
  for (std::size_t j = 0; j < inst.sets.size(); ++j) {
    const Mask f = inst.sets[j];
    if (!(f & u) || !is_subset(f, rest)) continue;
    chosen.push_back(j);
    for_each_partition(inst, rest & ~f, chosen, budget - 1, fn);
    chosen.pop_back();
  }
}

bool balanced(int size, int n, double beta) {
  return std::fabs(size - 0.5 * n) <= beta * n + 1e-9;
}

}  // namespace

double entropy(double x) {
  if (!(x >= 0 && x <= 1)) throw HypothesisError("entropy: argument outside [0, 1]");
  if (x == 0 || x == 1) return 0;
  return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

EntropyReport check_entropy_bounds(std::span<const double> grid, std::span<const int> ns) {
  EntropyReport rep;
  auto fail = [&rep](const std::string& what, double at) {
    std::ostringstream os;
    os.precision(17);
    os << what << " at " << at;
    rep.violations.push_back(os.str());
  };
  for (double x : grid) {
    if (x > 0 && x < 0.5) {
      ++rep.checks;
      const double lo = entropy(0.5 - x), hi = entropy(0.5 + x);
      if (std::fabs(lo - hi) > kSlack) fail("symmetry", x);
      if (lo > 1 - x * x) fail("h(1/2-x) <= 1-x^2", x);
    }
    if (x > 0 && x < 1) {
      ++rep.checks;
      if (entropy(x) > x * std::log2(4 / x)) fail("h(x) <= x lg(4/x)", x);
    }
  }
  for (int n : ns) {
    if (n < 1) continue;
    ++rep.checks;
    if (std::pow(1 - 1.0 / n, n) > std::exp(-1.0)) fail("(1-1/n)^n <= 1/e", n);
  }
  return rep;
}

ParamSchedule schedule_for_sigma(double sigma0, int n) {
  if (!(sigma0 > 0 && sigma0 <= 1)) throw HypothesisError("schedule: sigma0 must lie in (0, 1]");
  if (n < 1) throw HypothesisError("schedule: n must be positive");
  ParamSchedule s;
  s.n = n;
  s.sigma0 = sigma0;
  s.zeta = std::min(sigma0, kZetaCap);
  s.beta = sigma0 * sigma0 / 4;
  if (2 * std::sqrt(s.beta) > s.zeta + kSlack)
    throw HypothesisError("schedule: 2 sqrt(beta) exceeds zeta after clamping");
  s.sample_rate = std::exp2(-s.zeta * n);
  s.repeats = n;
  return s;
}

ParamSchedule solver_schedule(double sigma0, int n) {
  if (!(sigma0 > 0 && sigma0 <= 1)) throw HypothesisError("schedule: sigma0 must lie in (0, 1]");
  if (n < 1) throw HypothesisError("schedule: n must be positive");
  ParamSchedule s;
  s.n = n;
  s.sigma0 = sigma0;
  s.zeta = std::min(sigma0, kZetaCap);
  s.beta = std::min(sigma0 * sigma0 / 4, (s.zeta / 2) * (s.zeta / 2));
  s.sample_rate = std::exp2(-s.zeta * n);
  s.repeats = n;
  return s;
}

LayerRange layer_range(int n, double beta) {
  LayerRange r;
  r.first = static_cast<int>(std::floor((0.5 - beta) * n + 1e-9)) + 1;
  r.last = static_cast<int>(std::ceil((0.5 + beta) * n - 1e-9));
  return r;
}

int size_threshold(double x) { return std::max(1, static_cast<int>(std::floor(x + 1e-9))); }

std::vector<WitnessHalve> enumerate_witness_halves(const SetSystemInstance& inst, double beta) {
  inst.validate();
  if (inst.n > 16 || inst.m() > 16) throw GuardError("enumerate_witness_halves: guard n, m <= 16");
  std::vector<std::size_t> empties;
  for (std::size_t j = 0; j < inst.sets.size(); ++j)
    if (inst.sets[j] == 0) empties.push_back(j);

  std::map<Mask, WitnessHalve> found;
  std::vector<std::size_t> chosen;
  auto visit = [&](const std::vector<std::size_t>& part) {
    const int k = static_cast<int>(part.size());
    const int pad = inst.s - k;
    if (pad < 0 || pad > static_cast<int>(empties.size())) return;
    for (Mask pick = 0; pick < (Mask{1} << k); ++pick) {
      Mask w = 0;
      for (int t = 0; t < k; ++t)
        if ((pick >> t) & 1U) w |= inst.sets[part[static_cast<std::size_t>(t)]];
      if (!balanced(popcount(w), inst.n, beta) || found.count(w)) continue;
      WitnessHalve wh;
      wh.w = w;
      for (int t = 0; t < k; ++t)
        ((pick >> t) & 1U ? wh.s1 : wh.s2).push_back(part[static_cast<std::size_t>(t)]);
      wh.s2.insert(wh.s2.end(), empties.begin(), empties.begin() + pad);
      wh.i = static_cast<int>(wh.s1.size());
      found.emplace(w, std::move(wh));
    }
  };
  for_each_partition(inst, inst.universe(), chosen, inst.s, visit);

  std::vector<WitnessHalve> out;
  out.reserve(found.size());
  for (auto& [w, wh] : found) out.push_back(std::move(wh));
  return out;
}

bool is_witness_halve(const SetSystemInstance& inst, double beta, const WitnessHalve& wh) {
  if (!balanced(popcount(wh.w), inst.n, beta)) return false;
  if (static_cast<int>(wh.s1.size()) != wh.i) return false;
  if (static_cast<int>(wh.s1.size() + wh.s2.size()) != inst.s) return false;
  std::vector<bool> used(inst.m(), false);
  Mask u1 = 0, u2 = 0;
  int total = 0;
  for (const auto* side : {&wh.s1, &wh.s2}) {
    for (std::size_t j : *side) {
      if (j >= inst.m() || used[j]) return false;
      used[j] = true;
      total += popcount(inst.sets[j]);
      (side == &wh.s1 ? u1 : u2) |= inst.sets[j];
    }
  }
  return u1 == wh.w && u2 == (inst.universe() & ~wh.w) && total == inst.n;
}

AbundanceResult check_abundance(const SetSystemInstance& inst) {
  inst.validate();
  if (inst.n < 1) throw HypothesisError("check_abundance: empty universe");
  if (inst.has_empty_sets()) throw HypothesisError("check_abundance: instance has empty sets");
  const double sigma0 = static_cast<double>(inst.s) / inst.n;
  const int cap = size_threshold(std::pow(sigma0, 4) * inst.n / 8);
  for (Mask f : inst.sets)
    if (popcount(f) > cap) throw HypothesisError("check_abundance: a set exceeds sigma0^4 n / 8 elements");

  AbundanceResult r;
  r.yes_instance = brute_force_set_partition(inst).yes();
  r.halves = enumerate_witness_halves(inst, sigma0 * sigma0 / 4).size();
  r.threshold = std::exp2(sigma0 * inst.n) / 4;
  r.holds = r.yes_instance == (static_cast<double>(r.halves) >= r.threshold);
  return r;
}

}  // namespace largecover
