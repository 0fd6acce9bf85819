#include "largecover/dp_core.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "largecover/errors.hpp"

namespace largecover {
namespace {

int low_index(Mask x) { return std::countr_zero(x); }

}  // namespace

CoverTable::CoverTable(const SetSystemInstance& inst) : n_(inst.n), sets_(inst.sets) {
  if (n_ > kCoverTableMaxN)
    throw GuardError("cover DP: n=" + std::to_string(n_) + " exceeds " + std::to_string(kCoverTableMaxN));
  containing_.resize(static_cast<std::size_t>(n_));
  for (std::size_t j = 0; j < sets_.size(); ++j)
    for (int e : elements_of(sets_[j])) containing_[static_cast<std::size_t>(e)].push_back(j);

  const std::size_t total = std::size_t{1} << n_;
  table_.assign(total, kInfinity);
  table_[0] = 0;
  for (std::size_t x = 1; x < total; ++x) {
    int best = kInfinity;
    for (std::size_t j : containing_[static_cast<std::size_t>(low_index(x))]) {
      const int rest = table_[x & ~sets_[j]];
      if (rest + 1 < best) best = rest + 1;
    }
    table_[x] = static_cast<std::uint8_t>(std::min(best, static_cast<int>(kInfinity)));
  }
}

std::optional<int> CoverTable::min_cover(Mask x) const {
  const std::uint8_t v = table_.at(x);
  if (v == kInfinity) return std::nullopt;
  return v;
}

std::optional<std::vector<std::size_t>> CoverTable::certificate(Mask x) const {
  if (table_.at(x) == kInfinity) return std::nullopt;
  std::vector<std::size_t> out;
  while (x) {
    const int want = table_[x] - 1;
    bool found = false;
    for (std::size_t j : containing_[static_cast<std::size_t>(low_index(x))]) {
      if (table_[x & ~sets_[j]] == want) {
        out.push_back(j);
        x &= ~sets_[j];
        found = true;
        break;
      }
    }
    if (!found) throw SoundnessError("cover DP: backtracking found no consistent set");
  }
  return out;
}

Verdict folklore_cover_dp(const SetSystemInstance& inst) {
  inst.validate();
  const CoverTable table(inst);
  const auto size = table.min_cover(inst.universe());
  if (!size || *size > inst.s) return Verdict::no();
  Verdict v;
  v.answer = Answer::yes;
  v.sets = *table.certificate(inst.universe());
  for (std::size_t j : v.sets) v.blocks.push_back(inst.sets[j]);
  return v;
}

namespace {

struct InducedInstance {
  SetSystemInstance inst;
  std::vector<std::size_t> origin;
};

InducedInstance induce_on(const SetSystemInstance& inst, Mask x) {
  if (!is_subset(x, inst.universe())) throw HypothesisError("sub-universe cover: X outside U");
  const std::vector<int> elems = elements_of(x);
  InducedInstance out;
  out.inst.n = static_cast<int>(elems.size());
  for (std::size_t j = 0; j < inst.sets.size(); ++j) {
    Mask packed = 0;
    for (std::size_t k = 0; k < elems.size(); ++k)
      if ((inst.sets[j] >> elems[k]) & 1U) packed |= Mask{1} << k;
    if (packed) {
      out.inst.sets.push_back(packed);
      out.origin.push_back(j);
    }
  }
  return out;
}

}  // namespace

std::optional<int> min_cover_on_sub_universe(const SetSystemInstance& inst, Mask x) {
  const InducedInstance induced = induce_on(inst, x);
  return CoverTable(induced.inst).min_cover(induced.inst.universe());
}

std::optional<std::vector<std::size_t>> cover_on_sub_universe(const SetSystemInstance& inst, Mask x) {
  const InducedInstance induced = induce_on(inst, x);
  auto cert = CoverTable(induced.inst).certificate(induced.inst.universe());
  if (cert)
    for (auto& j : *cert) j = induced.origin[j];
  return cert;
}

bool PartitionProfile::operator()(Mask x, int i) const {
  if (i < 0 || i > 63) return false;
  const auto pos = dc_->find(x);
  return pos && ((bits_[*pos] >> i) & 1U);
}

std::uint64_t PartitionProfile::counts(Mask x) const {
  const auto pos = dc_->find(x);
  return pos ? bits_[*pos] : 0;
}

PartitionProfile partition_profile_on_closure(const SetSystemInstance& inst, const DownClosure& dc,
                                              bool skip_empty) {
  if (!dc.empty() && dc.universe_size() != inst.n)
    throw HypothesisError("partition profile: closure universe differs from instance universe");
  PartitionProfile prof(dc);
  if (dc.empty()) return prof;
  prof.counts_at(dc.index_of(0)) = 1;
  for (Mask f : inst.sets) {
    if (f == 0) {
      if (skip_empty) continue;
      for (std::size_t pos = 0; pos < dc.size(); ++pos) prof.counts_at(pos) |= prof.counts_at(pos) << 1;
      continue;
    }
    // Descending order: X \ N(f) is smaller, so it still holds the previous slice.
    for (std::size_t pos = dc.size(); pos-- > 0;) {
      const Mask x = dc[pos];
      if (!is_subset(f, x)) continue;
      prof.counts_at(pos) |= prof.counts_at(dc.index_of(x & ~f)) << 1;
    }
  }
  return prof;
}

PartitionProfile partition_profile_oracle(const SetOracle& oracle, const DownClosure& dc, bool skip_empty) {
  PartitionProfile prof(dc);
  if (dc.empty()) return prof;
  prof.counts_at(dc.index_of(0)) = 1;
  const int i_max = dc.max_popcount();
  if (i_max > 0) {
    const LayeredTable g = zeta_on_closure(dc, oracle_layer(dc, oracle, false));
    LayeredTable h = g;
    for (int i = 1; i <= i_max; ++i) {
      if (i > 1) h = multiply_profiles(h, g);
      const LayeredTable c = moebius_on_closure(dc, h);
      for (std::size_t pos = 1; pos < dc.size(); ++pos)
        if (c.at(pos, popcount(dc[pos])) > 0) prof.counts_at(pos) |= std::uint64_t{1} << i;
    }
  }
  if (!skip_empty && oracle(0))
    for (std::size_t pos = 0; pos < dc.size(); ++pos) prof.counts_at(pos) |= prof.counts_at(pos) << 1;
  return prof;
}

std::optional<std::vector<std::size_t>> extract_partition(const SetSystemInstance& inst,
                                                          const PartitionProfile& profile, Mask x, int i) {
  if (!profile(x, i)) return std::nullopt;
  std::vector<std::size_t> out;
  while (x) {
    const Mask u = lowest_bit(x);
    bool found = false;
    for (std::size_t j = 0; j < inst.sets.size(); ++j) {
      const Mask f = inst.sets[j];
      if ((f & u) && is_subset(f, x) && profile(x & ~f, i - 1)) {
        out.push_back(j);
        x &= ~f;
        --i;
        found = true;
        break;
      }
    }
    if (!found) throw SoundnessError("partition backtracking: profile inconsistent with family");
  }
  if (i != 0) throw SoundnessError("partition backtracking: profile admits empty sets");
  return out;
}

std::optional<std::vector<Mask>> extract_partition_blocks(const SetOracle& oracle,
                                                          const PartitionProfile& profile, Mask x, int i) {
  if (!profile(x, i)) return std::nullopt;
  std::vector<Mask> out;
  while (x) {
    const Mask u = lowest_bit(x);
    std::optional<Mask> pick;
    for_each_submask(x & ~u, [&](Mask rest) {
      const Mask y = rest | u;
      if (!pick && profile(x & ~y, i - 1) && oracle(y)) pick = y;
    });
    if (!pick) throw SoundnessError("partition backtracking: profile inconsistent with oracle");
    out.push_back(*pick);
    x &= ~*pick;
    --i;
  }
  if (i != 0) throw SoundnessError("partition backtracking: profile admits empty sets");
  return out;
}

Coloring exact_coloring(const SimpleGraph& g) {
  g.validate();
  if (g.n > kColoringMaxN) throw GuardError("exact coloring: n=" + std::to_string(g.n) + " exceeds 20");
  const std::size_t total = std::size_t{1} << g.n;
  std::vector<std::uint8_t> independent(total, 1);
  for (std::size_t x = 1; x < total; ++x) {
    const int v = low_index(x);
    independent[x] = independent[x & (x - 1)] && !(g.adjacency[static_cast<std::size_t>(v)] & x);
  }
  std::vector<std::uint8_t> best(total, 0);
  for (std::size_t x = 1; x < total; ++x) {
    const int v = low_index(x);
    const Mask free = x & ~g.adjacency[static_cast<std::size_t>(v)] & ~(Mask{1} << v);
    int b = 255;
    // Every class containing v lies in {v} plus non-neighbours of v inside x.
    for_each_submask(free, [&](Mask rest) {
      const Mask cls = rest | (Mask{1} << v);
      if (best[x & ~cls] + 1 < b && independent[cls]) b = best[x & ~cls] + 1;
    });
    best[x] = static_cast<std::uint8_t>(b);
  }
  Coloring out;
  Mask x = total - 1;
  out.colors = best[x];
  while (x) {
    const int v = low_index(x);
    const Mask free = x & ~g.adjacency[static_cast<std::size_t>(v)] & ~(Mask{1} << v);
    std::optional<Mask> pick;
    for_each_submask(free, [&](Mask rest) {
      const Mask cls = rest | (Mask{1} << v);
      if (!pick && best[x & ~cls] + 1 == best[x] && independent[cls]) pick = cls;
    });
    out.classes.push_back(*pick);
    x &= ~*pick;
  }
  return out;
}

}  // namespace largecover
