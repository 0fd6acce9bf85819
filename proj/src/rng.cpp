#include "largecover/rng.hpp"

namespace largecover {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RandomSeed RandomSeed::derive(std::uint64_t index) const {
  RandomSeed child = *this;
  child.path.push_back(index);
  return child;
}

std::uint64_t RandomSeed::mixed() const {
  std::uint64_t h = splitmix64(seed);
  for (std::uint64_t p : path) h = splitmix64(h ^ splitmix64(p + 0x632be59bd9b4e019ULL));
  return h;
}

std::string RandomSeed::str() const {
  std::string out = std::to_string(seed);
  for (std::uint64_t p : path) out += "/" + std::to_string(p);
  return out;
}

}  // namespace largecover
