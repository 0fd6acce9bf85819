#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "largecover/instances.hpp"

namespace largecover {

enum class Problem { cover, partition };

// Non-increasing positive parts.
using IntegerPartition = std::vector<int>;

// All partitions of n into exactly k parts, in decreasing lexicographic order.
std::vector<IntegerPartition> integer_partitions(int n, int k);
// Number of such partitions, by the recurrence p(n, k) = p(n-1, k-1) + p(n-k, k).
std::size_t count_integer_partitions(int n, int k);

inline constexpr std::size_t kNoOrigin = static_cast<std::size_t>(-1);
inline constexpr std::size_t kDefaultMaxSets = std::size_t{1} << 20;

// One set per ordered c-tuple of sets, target s/c. Cover mode allows
// repeated members; partition mode keeps only tuples of distinct, pairwise
// disjoint sets. `origin` lists the tuple behind each new set.
struct TupleInstance {
  SetSystemInstance inst;
  std::vector<std::vector<std::size_t>> origin;
};
TupleInstance reduce_solution_size(const SetSystemInstance& inst, int c, Problem mode,
                                   std::size_t max_sets = kDefaultMaxSets);

// A cover through one of the removed large sets was found.
struct ResolvedYes {
  std::vector<std::size_t> cover;
};
// The instance without its large sets; origin[k] is the original index of set k.
struct ReducedInstance {
  SetSystemInstance inst;
  std::vector<std::size_t> origin;
};
using LargeSetOutcome = std::variant<ResolvedYes, ReducedInstance>;

// Sets with |N(f)| >= eps n are large. Each is tried as part of a cover by
// solving U \ N(f) with budget s - 1; the remaining instance is equivalent
// for Set Cover at size s when every try fails.
LargeSetOutcome remove_large_sets(const SetSystemInstance& inst, double eps);
// Same, with large meaning |N(f)| > tau.
LargeSetOutcome remove_sets_larger_than(const SetSystemInstance& inst, int tau);

// Every subset of every set (deduplicated), plus max(1, s - n) copies of the
// empty set. Set Partition at s on the result is equivalent to Set Cover at
// size <= s on the input. origin[k] is a set containing the new set k, or
// kNoOrigin for the empty copies.
ReducedInstance cover_to_partition(const SetSystemInstance& inst, double eps,
                                   std::size_t max_sets = kDefaultMaxSets);

// The family of Set Cover instances, one per integer partition of the
// universe size into the reduced target; the input is a YES instance of Set
// Partition iff one of them is a YES instance of Set Cover.
struct CoverFamily {
  int c = 1;
  // Target after padding to a multiple of c.
  int padded_s = 0;
  // Target of every emitted instance.
  int s_reduced = 0;
  std::vector<IntegerPartition> partitions;
  std::vector<SetSystemInstance> instances;
};
CoverFamily partition_to_cover(const SetSystemInstance& inst, double eps,
                               std::size_t max_sets = kDefaultMaxSets,
                               std::size_t max_partitions = 1 << 16);

// Tags every set with one of s new elements, so all partitions have size s;
// then pads the family with empty sets up to target floor(eps1 (n + s)).
SetSystemInstance pad_partition_solution_size(const SetSystemInstance& inst, double eps1);

// Columns are incidence vectors, b is all ones, cost n|N(f)| + 1, t = n^2 + s.
LinSatInstance partition_to_linsat(const SetSystemInstance& inst);
// Minimum partition size encoded by the minimum cost of the image instance,
// or nullopt when that cost proves no partition exists.
std::optional<int> partition_size_from_linsat_cost(int n, std::optional<std::int64_t> min_cost);

}  // namespace largecover
