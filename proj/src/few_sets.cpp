#include "largecover/few_sets.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "largecover/dp_core.hpp"
#include "largecover/errors.hpp"
#include "largecover/lattice.hpp"

namespace largecover {
namespace {

class A3Search {
 public:
  A3Search(const SetSystemInstance& inst, int r, Problem mode, A3Stats* stats)
      : inst_(inst), r_(r), mode_(mode), stats_(stats) {}

  std::optional<std::vector<std::size_t>> run(Mask universe, std::vector<std::size_t> active, int s, int commits) {
    if (stats_) {
      ++stats_->nodes;
      stats_->max_commits = std::max(stats_->max_commits, commits);
    }
    if (s < 0) return std::nullopt;
    for (std::size_t k = 0; k < active.size(); ++k) {
      const std::size_t j = active[k];
      const Mask f = inst_.sets[j] & universe;
      if (popcount(f) < r_) continue;

      std::vector<std::size_t> dropped = active;
      dropped.erase(dropped.begin() + static_cast<std::ptrdiff_t>(k));
      if (auto found = run(universe, dropped, s, commits)) return found;

      std::vector<std::size_t> rest;
      for (std::size_t i : dropped)
        if (mode_ == Problem::cover || !(inst_.sets[i] & inst_.sets[j])) rest.push_back(i);
      auto found = run(universe & ~f, std::move(rest), s - 1, commits + 1);
      if (found) found->push_back(j);
      return found;
    }
    if (stats_) ++stats_->leaves;
    return leaf(universe, active, s);
  }

 private:
  std::optional<std::vector<std::size_t>> leaf(Mask universe, const std::vector<std::size_t>& active, int s) {
    const std::vector<int> elems = elements_of(universe);
    SetSystemInstance sub;
    sub.n = static_cast<int>(elems.size());
    sub.allows_empty = true;
    std::vector<std::size_t> origin;
    for (std::size_t j : active) {
      Mask packed = 0;
      for (std::size_t k = 0; k < elems.size(); ++k)
        if ((inst_.sets[j] >> elems[k]) & 1U) packed |= Mask{1} << k;
      if (mode_ == Problem::cover && packed == 0) continue;
      sub.sets.push_back(packed);
      origin.push_back(j);
    }
    if (sub.n > kCoverTableMaxN) throw GuardError("A3 leaf: remaining universe exceeds 26 elements");

    std::optional<std::vector<std::size_t>> picked;
    if (mode_ == Problem::cover) {
      const CoverTable table(sub);
      const auto size = table.min_cover(sub.universe());
      if (size && *size <= s) picked = table.certificate(sub.universe());
    } else {
      std::vector<std::size_t> empties;
      for (std::size_t k = 0; k < sub.sets.size(); ++k)
        if (sub.sets[k] == 0) empties.push_back(k);
      const DownClosure dc = full_lattice(sub.n);
      const PartitionProfile prof = partition_profile_on_closure(sub, dc, true);
      for (int a = std::max(0, s - static_cast<int>(empties.size())); a <= std::min(s, 63); ++a) {
        if (!prof(sub.universe(), a)) continue;
        picked = extract_partition(sub, prof, sub.universe(), a);
        picked->insert(picked->end(), empties.begin(), empties.begin() + (s - a));
        break;
      }
    }
    if (picked)
      for (auto& k : *picked) k = origin[k];
    return picked;
  }

  const SetSystemInstance& inst_;
  int r_;
  Problem mode_;
  A3Stats* stats_;
};

}  // namespace

Verdict algorithm_a3(const SetSystemInstance& inst, int r, Problem mode, A3Stats* stats) {
  inst.validate();
  if (r < 1) throw HypothesisError("A3: r must be positive");
  std::vector<std::size_t> all(inst.m());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  auto found = A3Search(inst, r, mode, stats).run(inst.universe(), std::move(all), inst.s, 0);
  if (!found) return Verdict::no();
  Verdict v;
  v.answer = Answer::yes;
  v.sets = std::move(*found);
  std::sort(v.sets.begin(), v.sets.end());
  for (std::size_t j : v.sets) v.blocks.push_back(inst.sets[j]);
  const bool ok = mode == Problem::cover ? check_cover_certificate(inst, v) : check_partition_certificate(inst, v);
  if (!ok) throw SoundnessError("A3 certificate failed re-verification");
  return v;
}

double lambda_r(int r) {
  if (r < 2) throw HypothesisError("lambda_r: r must be at least 2");
  const double a = 2.0 * r - 1;
  return (2.0 * r - 2) / std::sqrt(a * a - 2 * std::log(2.0));
}

bool lambda_sandwich_holds(int r) {
  if (r < 3) throw HypothesisError("lambda sandwich: r must be at least 3");
  const double v = lambda_r(r);
  return v >= 0.5 && v <= (2.0 * r - 2) / (2.0 * r - 1.5);
}

}  // namespace largecover
