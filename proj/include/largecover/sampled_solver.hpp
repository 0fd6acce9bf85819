#pragma once

#include <cstddef>
#include <vector>

#include "largecover/instances.hpp"
#include "largecover/lattice.hpp"
#include "largecover/rng.hpp"
#include "largecover/witness.hpp"

namespace largecover {

struct SampledFamily {
  int l = 0;
  std::vector<Mask> members;
  std::vector<Mask> complements;
};

// Each l-subset of {0..n-1} kept independently with probability `rate`.
// Guard: C(n, l) <= 2^28.
SampledFamily sample_layer(int n, int l, double rate, const RandomSeed& seed);

struct LayerStats {
  int pass = 0;
  int l = 0;
  std::size_t sampled = 0;
  std::size_t closure = 0;
  std::size_t complement_closure = 0;
};

struct SolverStats {
  std::vector<LayerStats> layers;
  int a1_calls = 0;
  int passes = 0;
  // Which branch produced a YES: "", "large-set", "sampled", "small-solution", "independent-set".
  const char* branch = "";
};

// Runs sched.repeats passes of the layer loop, stopping at the first YES.
// YES verdicts carry a partition certificate (set indices and blocks; empty
// sets fill the count up to s); it is re-checked before returning.
Verdict algorithm_a1(const SetSystemInstance& inst, const ParamSchedule& sched, const RandomSeed& seed,
                     SolverStats* stats = nullptr);

// Same over an oracle family; the certificate lists blocks only.
Verdict algorithm_a1_oracle(const SetOracle& oracle, int n, int s, const ParamSchedule& sched,
                            const RandomSeed& seed, SolverStats* stats = nullptr);

// Exactly s pairwise-disjoint blocks, each accepted by the oracle, covering U.
bool check_oracle_partition(const SetOracle& oracle, int n, int s, const Verdict& v);

struct SolveOptions {
  double delta = 0.25;
  // Overrides the schedule's pass count when positive.
  int repeats = 0;
};

// ceil(log_{4/3}(1/delta)).
int amplification_rounds(double delta);

// Set Cover at size inst.s with sigma = s/n. Certificates are covers by index.
Verdict solve_large_cover(const SetSystemInstance& inst, const RandomSeed& seed, const SolveOptions& opts = {},
                          SolverStats* stats = nullptr);

// Set Partition at size s over an oracle family whose sets must be nonempty
// and of size <= max(1, floor(sigma^4 n / 8)); a spot check enforces this.
Verdict solve_partition_oracle(const SetOracle& oracle, int n, int s, const RandomSeed& seed,
                               const SolveOptions& opts = {}, SolverStats* stats = nullptr);

SetOracle independent_set_oracle(const SimpleGraph& g);
SetOracle singleton_oracle(int n);

// YES with a coloring into at most s classes, or NO. Sound when chi > s.
Verdict chromatic_decision(const SimpleGraph& g, int s, const RandomSeed& seed, const SolveOptions& opts = {},
                           SolverStats* stats = nullptr);

}  // namespace largecover
