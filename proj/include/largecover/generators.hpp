#pragma once

#include "largecover/instances.hpp"
#include "largecover/rng.hpp"

namespace largecover {

struct GeneratorParams {
  int n = 0;
  int m = 0;
  // Largest set size drawn (planted blocks and decoys alike).
  int max_set_size = 1;
  // Inject a random partition of U into s nonempty blocks.
  bool planted = false;
  int s = 0;
};

// Deterministic in (params, seed). With planting the instance is a YES
// instance of Set Partition at size s; remaining m - s sets are random decoys.
SetSystemInstance generate_random_instance(const GeneratorParams& params, const RandomSeed& seed);

// G(n, p) graph.
SimpleGraph generate_random_graph(int n, double edge_probability, const RandomSeed& seed);

// Random dense matrix with uniform weights in [1, max_weight]. b is either
// uniform or, with planted_weight >= 0, the image of a random vector of that
// Hamming weight.
LinSatInstance generate_random_linsat(int rows, int cols, int max_weight, std::int64_t t,
                                      int planted_weight, const RandomSeed& seed);

}  // namespace largecover
