#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace largecover {

// A seed plus a derivation path. Child seeds are obtained by appending trial
// or layer indices, so every independent run owns a reproducible stream.
struct RandomSeed {
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> path;

  RandomSeed derive(std::uint64_t index) const;
  std::uint64_t mixed() const;
  std::string str() const;

  friend bool operator==(const RandomSeed&, const RandomSeed&) = default;
};

class Rng {
 public:
  explicit Rng(const RandomSeed& seed) : engine_(seed.mixed()) {}

  std::uint64_t bits() { return engine_(); }
  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }
  bool bernoulli(double p) { return std::bernoulli_distribution(p)(engine_); }
  // Uniform random mask over the low `width` bits.
  std::uint64_t mask(int width) {
    if (width <= 0) return 0;
    const std::uint64_t v = engine_();
    return width >= 64 ? v : v & ((std::uint64_t{1} << width) - 1);
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace largecover
