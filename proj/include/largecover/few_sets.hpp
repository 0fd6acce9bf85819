#pragma once

#include <cstddef>

#include "largecover/instances.hpp"
#include "largecover/reductions.hpp"

namespace largecover {

struct A3Stats {
  std::size_t nodes = 0;
  std::size_t leaves = 0;
  // Most commit branches taken on one root-to-leaf path.
  int max_commits = 0;
};

// Branch on the first set with |N(f) n U| >= r: drop it, or commit to it
// (s - 1, remove N(f) from U; partition mode also drops every set meeting
// N(f)). Leaves are solved exactly on the remaining universe. Cover mode
// decides covers of size <= s, partition mode partitions of size exactly s.
Verdict algorithm_a3(const SetSystemInstance& inst, int r, Problem mode, A3Stats* stats = nullptr);

// (2r - 2) / sqrt((2r - 1)^2 - 2 ln 2), for r >= 2.
double lambda_r(int r);
// 1/2 <= lambda_r <= (2r - 2) / (2r - 1.5), for r >= 3.
bool lambda_sandwich_holds(int r);

}  // namespace largecover
