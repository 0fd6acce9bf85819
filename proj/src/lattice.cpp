#include "largecover/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "checked.hpp"
#include "largecover/errors.hpp"

namespace largecover {
namespace {

constexpr int kDenseAlways = 16;
constexpr int kDenseMax = 22;

bool by_rank(Mask a, Mask b) {
  const int pa = popcount(a), pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

void require_same_closure(const DownClosure& dc, const LayeredTable& t, const char* who) {
  if (&t.closure() != &dc || t.degree() < 0)
    throw HypothesisError(std::string(who) + ": table is not indexed by this closure");
}

}  // namespace

std::optional<std::size_t> DownClosure::find(Mask x) const {
  if (!dense_.empty()) {
    if (x >= dense_.size() || dense_[x] == kAbsent) return std::nullopt;
    return dense_[x];
  }
  auto it = sparse_.find(x);
  if (it == sparse_.end()) return std::nullopt;
  return it->second;
}

DownClosure down_closure(std::span<const Mask> family, int n) {
  if (n < 0 || n > kMaxUniverse) throw HypothesisError("down_closure: universe size outside 0..63");
  const Mask u = full_mask(n);
  for (Mask w : family)
    if (!is_subset(w, u)) throw HypothesisError("down_closure: member outside the universe");

  DownClosure dc;
  dc.n_ = n;
  if (family.empty()) return dc;

  double estimate = 0;
  for (Mask w : family) estimate += std::ldexp(1.0, popcount(w));
  const bool dense = n <= kDenseAlways || (n <= kDenseMax && estimate >= std::ldexp(1.0, n - 3));

  if (dense) {
    const std::size_t total = std::size_t{1} << n;
    std::vector<std::uint8_t> mark(total, 0);
    for (Mask w : family) mark[w] = 1;
    for (std::size_t x = total; x-- > 0;) {
      if (!mark[x]) continue;
      for (Mask rest = x; rest; rest &= rest - 1) mark[x & ~lowest_bit(rest)] = 1;
    }
    for (std::size_t x = 0; x < total; ++x)
      if (mark[x]) dc.members_.push_back(x);
    std::sort(dc.members_.begin(), dc.members_.end(), by_rank);
    dc.dense_.assign(total, DownClosure::kAbsent);
    for (std::size_t pos = 0; pos < dc.members_.size(); ++pos)
      dc.dense_[dc.members_[pos]] = static_cast<std::uint32_t>(pos);
    return dc;
  }

  std::unordered_set<Mask> seen;
  std::vector<Mask> stack;
  for (Mask w : family)
    if (seen.insert(w).second) stack.push_back(w);
  while (!stack.empty()) {
    const Mask x = stack.back();
    stack.pop_back();
    for (Mask rest = x; rest; rest &= rest - 1) {
      const Mask y = x & ~lowest_bit(rest);
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  if (seen.size() >= DownClosure::kAbsent) throw GuardError("down_closure: closure too large");
  dc.members_.assign(seen.begin(), seen.end());
  std::sort(dc.members_.begin(), dc.members_.end(), by_rank);
  dc.sparse_.reserve(dc.members_.size());
  for (std::size_t pos = 0; pos < dc.members_.size(); ++pos)
    dc.sparse_.emplace(dc.members_[pos], static_cast<std::uint32_t>(pos));
  return dc;
}

long double closure_size_bound(int n, double zeta) {
  const long double q = static_cast<long double>(zeta) / 2;
  return std::floor(static_cast<long double>(n) * std::exp2((1.0L - q * q * q * q) * n));
}

bool closure_size_bound_check(int n, double zeta, double beta, std::span<const Mask> family) {
  constexpr double kSlack = 1e-12;
  if (!(2 * std::sqrt(std::fabs(beta)) <= zeta + kSlack) || !(zeta <= 0.25) || !(zeta > 0))
    throw HypothesisError("closure_size_bound_check: requires 2 sqrt|beta| <= zeta <= 1/4");
  const double layer = (0.5 + beta) * n;
  const long double max_family = std::exp2((1.0L - zeta) * n);
  if (static_cast<long double>(family.size()) > max_family + 1e-9L)
    throw HypothesisError("closure_size_bound_check: family larger than 2^((1-zeta)n)");
  for (Mask w : family)
    if (std::fabs(popcount(w) - layer) > 1e-9)
      throw HypothesisError("closure_size_bound_check: member size differs from (1/2+beta)n");
  const DownClosure dc = down_closure(family, n);
  return static_cast<long double>(dc.size()) <= closure_size_bound(n, zeta);
}

LayeredTable::LayeredTable(const DownClosure& dc, int degree, Layer tag)
    : dc_(&dc), degree_(degree), tag_(tag), values_(dc.size() * (static_cast<std::size_t>(degree) + 1), 0) {
  if (degree < 0) throw HypothesisError("LayeredTable: negative degree");
}

LayeredTable zeta_on_closure(const DownClosure& dc, const LayeredTable& f_layer) {
  require_same_closure(dc, f_layer, "zeta_on_closure");
  LayeredTable g = f_layer;
  g.set_tag(Layer::g);
  const int width = g.degree() + 1;
  for (int j = 0; j < dc.universe_size(); ++j) {
    const Mask bit = Mask{1} << j;
    for (std::size_t pos = 0; pos < dc.size(); ++pos) {
      const Mask x = dc[pos];
      if (!(x & bit)) continue;
      auto dst = g.row(pos);
      auto src = g.row(dc.index_of(x & ~bit));
      for (int k = 0; k < width; ++k) dst[k] = detail::checked_add(dst[k], src[k]);
    }
  }
  return g;
}

LayeredTable multiply_profiles(const LayeredTable& h, const LayeredTable& g) {
  if (&h.closure() != &g.closure() || h.degree() != g.degree())
    throw HypothesisError("multiply_profiles: tables differ in closure or degree");
  LayeredTable out(h.closure(), h.degree(), Layer::h);
  const int d = h.degree();
  for (std::size_t pos = 0; pos < h.closure().size(); ++pos) {
    auto a = h.row(pos);
    auto b = g.row(pos);
    auto c = out.row(pos);
    for (int x = 0; x <= d; ++x) {
      if (a[x] == 0) continue;
      for (int y = 0; x + y <= d; ++y) {
        if (b[y] == 0) continue;
        c[x + y] = detail::checked_add(c[x + y], detail::checked_mul(a[x], b[y]));
      }
    }
  }
  return out;
}

LayeredTable compose_weight_profiles(const LayeredTable& g, int i) {
  if (i < 1) throw HypothesisError("compose_weight_profiles: i must be >= 1");
  LayeredTable h = g;
  h.set_tag(Layer::h);
  for (int k = 1; k < i; ++k) h = multiply_profiles(h, g);
  return h;
}

LayeredTable moebius_on_closure(const DownClosure& dc, const LayeredTable& h_layer) {
  require_same_closure(dc, h_layer, "moebius_on_closure");
  LayeredTable c = h_layer;
  c.set_tag(Layer::c);
  const int width = c.degree() + 1;
  for (int j = 0; j < dc.universe_size(); ++j) {
    const Mask bit = Mask{1} << j;
    for (std::size_t pos = 0; pos < dc.size(); ++pos) {
      const Mask x = dc[pos];
      if (!(x & bit)) continue;
      auto dst = c.row(pos);
      auto src = c.row(dc.index_of(x & ~bit));
      for (int k = 0; k < width; ++k) dst[k] = detail::checked_sub(dst[k], src[k]);
    }
  }
  return c;
}

LayeredTable oracle_layer(const DownClosure& dc, const SetOracle& oracle, bool include_empty) {
  LayeredTable f(dc, dc.universe_size(), Layer::f);
  for (std::size_t pos = 0; pos < dc.size(); ++pos) {
    const Mask x = dc[pos];
    if (x == 0 && !include_empty) continue;
    if (oracle(x)) f.at(pos, popcount(x)) = 1;
  }
  return f;
}

std::vector<LayeredTable> tuple_cover_counts(const DownClosure& dc, const SetOracle& oracle, int i_max) {
  if (i_max < 0) throw HypothesisError("tuple_cover_counts: negative i_max");
  std::vector<LayeredTable> counts;
  counts.reserve(static_cast<std::size_t>(i_max) + 1);

  LayeredTable empty_tuple(dc, dc.universe_size(), Layer::c);
  if (auto pos = dc.find(0)) empty_tuple.at(*pos, 0) = 1;
  counts.push_back(std::move(empty_tuple));
  if (i_max == 0) return counts;

  const LayeredTable g = zeta_on_closure(dc, oracle_layer(dc, oracle));
  LayeredTable h = g;
  h.set_tag(Layer::h);
  for (int i = 1; i <= i_max; ++i) {
    if (i > 1) h = multiply_profiles(h, g);
    counts.push_back(moebius_on_closure(dc, h));
  }
  return counts;
}

}  // namespace largecover
