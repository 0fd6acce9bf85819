#include "largecover/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "largecover/errors.hpp"

namespace largecover {
namespace {

Mask random_set(int n, int max_size, Rng& rng) {
  const int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(max_size, n))));
  std::vector<int> elems(static_cast<std::size_t>(n));
  std::iota(elems.begin(), elems.end(), 0);
  std::shuffle(elems.begin(), elems.end(), rng.engine());
  Mask f = 0;
  for (int k = 0; k < size; ++k) f |= Mask{1} << elems[k];
  return f;
}

}  // namespace

SetSystemInstance generate_random_instance(const GeneratorParams& params, const RandomSeed& seed) {
  if (params.n < 0 || params.n > kMaxUniverse) throw HypothesisError("generator: n outside 0..63");
  if (params.m < 0 || params.s < 0) throw HypothesisError("generator: negative m or s");
  if (params.max_set_size < 1) throw HypothesisError("generator: set-size cap must be >= 1");
  Rng rng(seed);
  SetSystemInstance inst;
  inst.n = params.n;
  inst.s = params.s;
  if (params.planted) {
    const long long capacity = static_cast<long long>(params.s) * params.max_set_size;
    if (capacity < params.n || params.s > params.n || params.s > params.m)
      throw HypothesisError("generator: cannot plant " + std::to_string(params.s) + " nonempty blocks of size <= " +
                            std::to_string(params.max_set_size) + " covering " + std::to_string(params.n) +
                            " elements within " + std::to_string(params.m) + " sets");
    std::vector<int> sizes(static_cast<std::size_t>(params.s), 1);
    for (int extra = params.n - params.s; extra > 0; --extra) {
      std::vector<int> open;
      for (int b = 0; b < params.s; ++b)
        if (sizes[b] < params.max_set_size) open.push_back(b);
      ++sizes[open[rng.below(open.size())]];
    }
    std::vector<int> elems(static_cast<std::size_t>(params.n));
    std::iota(elems.begin(), elems.end(), 0);
    std::shuffle(elems.begin(), elems.end(), rng.engine());
    std::size_t next = 0;
    for (int size : sizes) {
      Mask block = 0;
      for (int k = 0; k < size; ++k) block |= Mask{1} << elems[next++];
      inst.sets.push_back(block);
    }
  }
  if (params.n == 0) {
    // Only the empty set exists over an empty universe.
    if (static_cast<int>(inst.sets.size()) < params.m) {
      inst.sets.resize(static_cast<std::size_t>(params.m), 0);
      inst.allows_empty = params.m > 0;
    }
    return inst;
  }
  while (static_cast<int>(inst.sets.size()) < params.m) inst.sets.push_back(random_set(params.n, params.max_set_size, rng));
  std::shuffle(inst.sets.begin(), inst.sets.end(), rng.engine());
  return inst;
}

SimpleGraph generate_random_graph(int n, double edge_probability, const RandomSeed& seed) {
  if (n < 0 || n > kMaxUniverse) throw HypothesisError("generator: vertex count outside 0..63");
  Rng rng(seed);
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(edge_probability)) g.add_edge(u, v);
  return g;
}

LinSatInstance generate_random_linsat(int rows, int cols, int max_weight, std::int64_t t, int planted_weight,
                                      const RandomSeed& seed) {
  if (rows < 0 || rows > 64 || cols < 0 || cols > 61) throw HypothesisError("generator: linsat shape out of range");
  if (max_weight < 0) throw HypothesisError("generator: negative weight cap");
  Rng rng(seed);
  LinSatInstance inst;
  inst.n_rows = rows;
  inst.t = t;
  for (int j = 0; j < cols; ++j) inst.columns.push_back(rng.mask(rows));
  for (int j = 0; j < cols; ++j)
    inst.weights.push_back(max_weight == 0 ? 0 : 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_weight))));
  if (planted_weight >= 0) {
    if (planted_weight > cols) throw HypothesisError("generator: planted weight exceeds column count");
    std::vector<int> idx(static_cast<std::size_t>(cols));
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng.engine());
    Mask x = 0;
    for (int k = 0; k < planted_weight; ++k) x |= Mask{1} << idx[k];
    inst.b = inst.image(x);
  } else {
    inst.b = rng.mask(rows);
  }
  return inst;
}

}  // namespace largecover
