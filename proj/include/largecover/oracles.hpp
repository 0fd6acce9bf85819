#pragma once

#include <optional>

#include "largecover/instances.hpp"

namespace largecover {

// Exhaustive ground-truth solvers. They refuse (GuardError) beyond the given
// limits instead of running for hours.
struct EnumerationLimits {
  int max_n = 30;
  int max_m = 24;
};

// YES iff some subfamily of at most s sets covers U; the certificate is a
// minimum-cardinality cover (first in subfamily-mask order).
Verdict brute_force_set_cover(const SetSystemInstance& inst, EnumerationLimits limits = {});

// YES iff exactly s pairwise-disjoint sets union to U.
Verdict brute_force_set_partition(const SetSystemInstance& inst, EnumerationLimits limits = {});

// Smallest number of pairwise-disjoint sets partitioning U, if any.
std::optional<int> brute_force_min_partition_size(const SetSystemInstance& inst,
                                                  EnumerationLimits limits = {});

// Chromatic number by trying k = 1, 2, ... with exhaustive backtracking.
int brute_force_chromatic(const SimpleGraph& g, int max_n = 10);

// Minimum-cost x with A x = b; YES iff that cost is <= t.
LinSatVerdict brute_force_linsat(const LinSatInstance& inst, int max_m = 20);

}  // namespace largecover
