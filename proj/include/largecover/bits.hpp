#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace largecover {

// A subset of a universe of at most 63 elements, element k at bit k.
using Mask = std::uint64_t;

inline constexpr int kMaxUniverse = 63;

constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr Mask lowest_bit(Mask m) { return m & (~m + 1); }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Next mask with the same popcount (Gosper's hack). Undefined for m == 0.
constexpr Mask next_same_popcount(Mask m) {
  const Mask c = lowest_bit(m);
  const Mask r = m + c;
  return (((r ^ m) >> 2) / c) | r;
}

// Calls fn(mask) for every k-subset of {0..n-1} in increasing numeric order.
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(Mask{0});
    return;
  }
  const Mask limit = Mask{1} << n;
  for (Mask m = full_mask(k); m < limit; m = next_same_popcount(m)) {
    fn(m);
  }
}

// Calls fn(sub) for every submask of mask, including 0 and mask itself.
template <typename Fn>
void for_each_submask(Mask mask, Fn&& fn) {
  Mask sub = mask;
  while (true) {
    fn(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

inline std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

}  // namespace largecover
