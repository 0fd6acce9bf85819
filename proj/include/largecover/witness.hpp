#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "largecover/instances.hpp"

namespace largecover {

// Binary entropy with 0 lg 0 = 0.
double entropy(double x);

struct EntropyReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
// Items: h(1/2 - x) = h(1/2 + x) <= 1 - x^2 for x in (0, 1/2);
// h(x) <= x lg(4/x) for x in (0, 1); (1 - 1/n)^n <= 1/e for each n.
// Symmetry is allowed 1e-12 slack.
EntropyReport check_entropy_bounds(std::span<const double> grid, std::span<const int> ns);

struct ParamSchedule {
  int n = 0;
  double sigma0 = 0;
  double zeta = 0;
  double beta = 0;
  double sample_rate = 1;
  int repeats = 1;
};

inline constexpr double kZetaCap = 0.2499;

// zeta = min(sigma0, 0.2499), beta = sigma0^2 / 4, rate 2^(-zeta n),
// repeats = n. Throws HypothesisError when 2 sqrt(beta) > zeta.
ParamSchedule schedule_for_sigma(double sigma0, int n);
// As above, but shrinks beta to (zeta/2)^2 instead of throwing.
ParamSchedule solver_schedule(double sigma0, int n);

// Layer sizes l with floor((1/2 - beta) n) < l < ceil((1/2 + beta) n),
// as the half-open range [first, last).
struct LayerRange {
  int first = 0;
  int last = 0;
  int count() const { return last > first ? last - first : 0; }
};
LayerRange layer_range(int n, double beta);

struct WitnessHalve {
  Mask w = 0;
  std::vector<std::size_t> s1;
  std::vector<std::size_t> s2;
  int i = 0;
};

// Every distinct W in [(1/2 - beta) n, (1/2 + beta) n] split off by some
// partition of size s, with one realizing split each. Guard n, m <= 16.
std::vector<WitnessHalve> enumerate_witness_halves(const SetSystemInstance& inst, double beta);
// Direct check of the defining conditions.
bool is_witness_halve(const SetSystemInstance& inst, double beta, const WitnessHalve& wh);

struct AbundanceResult {
  bool holds = false;
  bool yes_instance = false;
  std::size_t halves = 0;
  double threshold = 0;
};
// With sigma0 = s/n: YES iff at least 2^(sigma0 n)/4 witness
// (sigma0^2/4)-halves. Requires no empty sets and
// |N(f)| <= max(1, floor(sigma0^4 n / 8)).
AbundanceResult check_abundance(const SetSystemInstance& inst);

// max(1, floor(x)), the integer form of the set-size thresholds.
int size_threshold(double x);

}  // namespace largecover
