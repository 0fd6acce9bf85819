#pragma once

#include <initializer_list>
#include <vector>

#include "largecover/bits.hpp"
#include "largecover/instances.hpp"

namespace test {

using largecover::Mask;

inline Mask bits(std::initializer_list<int> elements) {
  Mask m = 0;
  for (int e : elements) m |= Mask{1} << e;
  return m;
}

inline largecover::SetSystemInstance family(int n, std::vector<Mask> sets, int s, bool allows_empty = false) {
  largecover::SetSystemInstance inst;
  inst.n = n;
  inst.sets = std::move(sets);
  inst.s = s;
  inst.allows_empty = allows_empty;
  return inst;
}

inline std::vector<Mask> singletons(int n) {
  std::vector<Mask> out;
  for (int e = 0; e < n; ++e) out.push_back(Mask{1} << e);
  return out;
}

}  // namespace test
