#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "largecover/bits.hpp"

namespace largecover {

// An (n, m, s)-instance of Set Cover / Set Partition: a universe {0..n-1},
// an ordered family of element sets (duplicates allowed) and a target size.
struct SetSystemInstance {
  int n = 0;
  std::vector<Mask> sets;
  int s = 0;
  // Empty sets are only legal when this is set.
  bool allows_empty = false;

  std::size_t m() const { return sets.size(); }
  Mask universe() const { return full_mask(n); }
  bool has_empty_sets() const;
  std::size_t empty_set_count() const;
  // Union of all sets.
  Mask covered() const;
  // Throws HypothesisError when an invariant is broken.
  void validate() const;

  friend bool operator==(const SetSystemInstance&, const SetSystemInstance&) = default;
};

struct SimpleGraph {
  int n = 0;
  // adjacency[v] = neighbours of v.
  std::vector<Mask> adjacency;

  explicit SimpleGraph(int vertices = 0);
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return (adjacency[u] >> v) & 1U; }
  bool is_independent(Mask vertices) const;
  std::size_t edge_count() const;
  // Graph induced on the vertices of `keep`, relabelled 0..|keep|-1 in
  // increasing order.
  SimpleGraph induced(Mask keep) const;
  void validate() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

// Linear Sat: find x in GF(2)^m with A x = b and weights . x <= t.
// Column j is a row-bitmask (row r at bit r).
struct LinSatInstance {
  int n_rows = 0;
  std::vector<Mask> columns;
  Mask b = 0;
  std::vector<std::int64_t> weights;
  std::int64_t t = 0;

  int m_cols() const { return static_cast<int>(columns.size()); }
  Mask image(Mask x) const;
  std::int64_t cost(Mask x) const;
  bool satisfies(Mask x) const { return image(x) == b && cost(x) <= t; }
  void validate() const;

  friend bool operator==(const LinSatInstance&, const LinSatInstance&) = default;
};

enum class Answer { no, yes };

// Outcome of a set-system or coloring decision. For YES answers the
// certificate is attached: `sets` indexes the instance family when one exists
// explicitly, `blocks` lists the chosen neighbourhoods (or color classes).
struct Verdict {
  Answer answer = Answer::no;
  std::vector<std::size_t> sets;
  std::vector<Mask> blocks;

  bool yes() const { return answer == Answer::yes; }
  static Verdict no() { return {}; }
};

struct LinSatVerdict {
  Answer answer = Answer::no;
  Mask x = 0;
  std::int64_t cost = 0;

  bool yes() const { return answer == Answer::yes; }
};

// Certificate checks. Each returns true iff the verdict is NO or its attached
// certificate proves the YES answer directly.
bool check_cover_certificate(const SetSystemInstance& inst, const Verdict& v);
bool check_partition_certificate(const SetSystemInstance& inst, const Verdict& v);
bool check_linsat_certificate(const LinSatInstance& inst, const LinSatVerdict& v);
// blocks must be independent, pairwise disjoint, cover V and number <= colors.
bool check_coloring_certificate(const SimpleGraph& g, int colors, const Verdict& v);

}  // namespace largecover
