#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "largecover/instances.hpp"
#include "largecover/lattice.hpp"

namespace largecover {

inline constexpr int kCoverTableMaxN = 26;

// T[X] = minimum number of sets covering X, for every X subset of U.
class CoverTable {
 public:
  static constexpr std::uint8_t kInfinity = 255;

  explicit CoverTable(const SetSystemInstance& inst);

  int universe_size() const { return n_; }
  std::optional<int> min_cover(Mask x) const;
  // Indices of a minimum cover of x, or nullopt when x is uncoverable.
  std::optional<std::vector<std::size_t>> certificate(Mask x) const;

 private:
  int n_;
  std::vector<Mask> sets_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<std::uint8_t> table_;
};

Verdict folklore_cover_dp(const SetSystemInstance& inst);

// Minimum cover of X in the instance induced by the elements of X.
std::optional<int> min_cover_on_sub_universe(const SetSystemInstance& inst, Mask x);
// Indices of such a minimum cover.
std::optional<std::vector<std::size_t>> cover_on_sub_universe(const SetSystemInstance& inst, Mask x);

// c_i(X) for X in a closure, packed as one bitset over i per member.
class PartitionProfile {
 public:
  explicit PartitionProfile(const DownClosure& dc) : dc_(&dc), bits_(dc.size(), 0) {}

  const DownClosure& closure() const { return *dc_; }
  // False for masks outside the closure.
  bool operator()(Mask x, int i) const;
  std::uint64_t counts(Mask x) const;
  std::uint64_t& counts_at(std::size_t pos) { return bits_[pos]; }
  std::uint64_t counts_at(std::size_t pos) const { return bits_[pos]; }

  friend bool operator==(const PartitionProfile& a, const PartitionProfile& b) {
    return a.dc_ == b.dc_ && a.bits_ == b.bits_;
  }

 private:
  const DownClosure* dc_;
  std::vector<std::uint64_t> bits_;
};

// Restricted DP over the closure: c_i(X) iff X is the disjoint union of i
// sets of the family (distinct indices). With skip_empty, empty sets are
// ignored, so callers can account for them separately.
PartitionProfile partition_profile_on_closure(const SetSystemInstance& inst, const DownClosure& dc,
                                              bool skip_empty = false);

// Same profile from the oracle, through tuple counts: c_i(X) = [c'_{|X|,i}(X) > 0].
// An empty set reported by the oracle counts as a single set.
PartitionProfile partition_profile_oracle(const SetOracle& oracle, const DownClosure& dc,
                                          bool skip_empty = false);

// Pairwise-disjoint sets (by index) partitioning x into exactly i nonempty
// blocks, guided by a profile built with skip_empty. nullopt if c_i(x) fails.
std::optional<std::vector<std::size_t>> extract_partition(const SetSystemInstance& inst,
                                                          const PartitionProfile& profile, Mask x, int i);
// Oracle version: returns the blocks themselves.
std::optional<std::vector<Mask>> extract_partition_blocks(const SetOracle& oracle,
                                                          const PartitionProfile& profile, Mask x, int i);

inline constexpr int kColoringMaxN = 20;

// Minimum coloring by DP over vertex subsets. Guard n <= 20.
struct Coloring {
  int colors = 0;
  std::vector<Mask> classes;
};
Coloring exact_coloring(const SimpleGraph& g);

}  // namespace largecover
