#include "largecover/instances.hpp"

#include <algorithm>
#include <string>

#include "largecover/errors.hpp"

namespace largecover {

bool SetSystemInstance::has_empty_sets() const {
  return std::any_of(sets.begin(), sets.end(), [](Mask f) { return f == 0; });
}

std::size_t SetSystemInstance::empty_set_count() const {
  return static_cast<std::size_t>(std::count(sets.begin(), sets.end(), Mask{0}));
}

Mask SetSystemInstance::covered() const {
  Mask u = 0;
  for (Mask f : sets) u |= f;
  return u;
}

void SetSystemInstance::validate() const {
  if (n < 0 || n > kMaxUniverse)
    throw HypothesisError("universe size " + std::to_string(n) + " outside 0.." +
                          std::to_string(kMaxUniverse));
  if (s < 0) throw HypothesisError("negative target size");
  for (std::size_t j = 0; j < sets.size(); ++j) {
    if (!is_subset(sets[j], universe()))
      throw HypothesisError("set " + std::to_string(j) + " uses elements outside the universe");
    if (sets[j] == 0 && !allows_empty)
      throw HypothesisError("set " + std::to_string(j) + " is empty but empty sets are not allowed");
  }
}

SimpleGraph::SimpleGraph(int vertices) : n(vertices), adjacency(static_cast<std::size_t>(std::max(0, vertices)), 0) {}

void SimpleGraph::add_edge(int u, int v) {
  if (u == v) throw HypothesisError("self-loop on vertex " + std::to_string(u));
  if (u < 0 || v < 0 || u >= n || v >= n) throw HypothesisError("edge endpoint out of range");
  adjacency[u] |= Mask{1} << v;
  adjacency[v] |= Mask{1} << u;
}

bool SimpleGraph::is_independent(Mask vertices) const {
  for (Mask rest = vertices; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if (adjacency[v] & vertices) return false;
  }
  return true;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (Mask a : adjacency) twice += static_cast<std::size_t>(popcount(a));
  return twice / 2;
}

SimpleGraph SimpleGraph::induced(Mask keep) const {
  const std::vector<int> kept = elements_of(keep);
  SimpleGraph out(static_cast<int>(kept.size()));
  for (std::size_t a = 0; a < kept.size(); ++a)
    for (std::size_t b = a + 1; b < kept.size(); ++b)
      if (adjacent(kept[a], kept[b])) out.add_edge(static_cast<int>(a), static_cast<int>(b));
  return out;
}

void SimpleGraph::validate() const {
  if (n < 0 || n > kMaxUniverse) throw HypothesisError("vertex count outside 0..63");
  if (adjacency.size() != static_cast<std::size_t>(n))
    throw HypothesisError("adjacency size does not match vertex count");
  for (int v = 0; v < n; ++v) {
    if (!is_subset(adjacency[v], full_mask(n))) throw HypothesisError("neighbour out of range");
    if ((adjacency[v] >> v) & 1U) throw HypothesisError("self-loop on vertex " + std::to_string(v));
    for (Mask rest = adjacency[v]; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (!adjacent(u, v)) throw HypothesisError("adjacency is not symmetric");
    }
  }
}

Mask LinSatInstance::image(Mask x) const {
  Mask acc = 0;
  for (Mask rest = x; rest; rest &= rest - 1) acc ^= columns[std::countr_zero(rest)];
  return acc;
}

std::int64_t LinSatInstance::cost(Mask x) const {
  std::int64_t acc = 0;
  for (Mask rest = x; rest; rest &= rest - 1) acc += weights[std::countr_zero(rest)];
  return acc;
}

void LinSatInstance::validate() const {
  if (n_rows < 0 || n_rows > 64) throw HypothesisError("row count outside 0..64");
  if (columns.size() > 61) throw HypothesisError("at most 61 columns are supported");
  if (weights.size() != columns.size()) throw HypothesisError("weights length differs from column count");
  const Mask rows = full_mask(n_rows);
  for (Mask c : columns)
    if (!is_subset(c, rows)) throw HypothesisError("column has bits beyond the row count");
  if (!is_subset(b, rows)) throw HypothesisError("target has bits beyond the row count");
  for (std::int64_t w : weights)
    if (w < 0) throw HypothesisError("weights must be nonnegative");
}

bool check_cover_certificate(const SetSystemInstance& inst, const Verdict& v) {
  if (!v.yes()) return true;
  if (v.sets.size() > static_cast<std::size_t>(inst.s)) return false;
  std::vector<std::size_t> sorted = v.sets;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  Mask u = 0;
  for (std::size_t j : v.sets) {
    if (j >= inst.m()) return false;
    u |= inst.sets[j];
  }
  return u == inst.universe();
}

bool check_partition_certificate(const SetSystemInstance& inst, const Verdict& v) {
  if (!v.yes()) return true;
  if (v.sets.size() != static_cast<std::size_t>(inst.s)) return false;
  std::vector<std::size_t> sorted = v.sets;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  Mask u = 0;
  for (std::size_t j : v.sets) {
    if (j >= inst.m()) return false;
    if (u & inst.sets[j]) return false;
    u |= inst.sets[j];
  }
  return u == inst.universe();
}

bool check_linsat_certificate(const LinSatInstance& inst, const LinSatVerdict& v) {
  if (!v.yes()) return true;
  if (!is_subset(v.x, full_mask(inst.m_cols()))) return false;
  return inst.satisfies(v.x) && inst.cost(v.x) == v.cost;
}

bool check_coloring_certificate(const SimpleGraph& g, int colors, const Verdict& v) {
  if (!v.yes()) return true;
  if (v.blocks.size() > static_cast<std::size_t>(std::max(colors, 0))) return false;
  Mask seen = 0;
  for (Mask block : v.blocks) {
    if (seen & block) return false;
    if (!g.is_independent(block)) return false;
    seen |= block;
  }
  return seen == full_mask(g.n);
}

}  // namespace largecover
