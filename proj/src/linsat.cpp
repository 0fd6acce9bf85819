#include "largecover/linsat.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "largecover/errors.hpp"
#include "largecover/witness.hpp"

namespace largecover {
namespace {

int leading_bit(Mask v) { return 63 - std::countl_zero(v); }

}  // namespace

Gf2Matrix::Gf2Matrix(int rows, std::vector<Mask> columns) : rows_(rows), columns_(std::move(columns)) {
  if (rows < 0 || rows > 64) throw HypothesisError("Gf2Matrix: row count outside 0..64");
  if (columns_.size() > 64) throw HypothesisError("Gf2Matrix: more than 64 columns");
  for (Mask c : columns_)
    if (!is_subset(c, full_mask(rows))) throw HypothesisError("Gf2Matrix: column wider than the row count");
}

Gf2Matrix Gf2Matrix::random(int rows, int cols, Rng& rng) {
  std::vector<Mask> cs(static_cast<std::size_t>(cols));
  for (Mask& c : cs) c = rng.mask(rows);
  return Gf2Matrix(rows, std::move(cs));
}

Mask Gf2Matrix::apply(Mask x) const {
  Mask out = 0;
  for (Mask rest = x; rest; rest &= rest - 1) out ^= columns_[static_cast<std::size_t>(std::countr_zero(rest))];
  return out;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& other) const {
  if (other.rows() != cols()) throw HypothesisError("Gf2Matrix: dimension mismatch in product");
  std::vector<Mask> cs;
  cs.reserve(other.columns_.size());
  for (Mask c : other.columns_) cs.push_back(apply(c));
  return Gf2Matrix(rows_, std::move(cs));
}

int Gf2Matrix::rank() const { return static_cast<int>(column_basis().size()); }

std::vector<int> Gf2Matrix::column_basis() const {
  Gf2Basis basis;
  std::vector<int> out;
  for (int j = 0; j < cols(); ++j)
    if (basis.insert(columns_[static_cast<std::size_t>(j)], Mask{1} << j)) out.push_back(j);
  return out;
}

bool Gf2Basis::insert(Mask v, Mask origin) {
  while (v) {
    const int k = leading_bit(v);
    if (!((present_ >> k) & 1U)) {
      present_ |= Mask{1} << k;
      vecs_[k] = v;
      origins_[k] = origin;
      return true;
    }
    v ^= vecs_[k];
    origin ^= origins_[k];
  }
  return false;
}

std::optional<Mask> Gf2Basis::solve(Mask v) const {
  Mask origin = 0;
  while (v) {
    const int k = leading_bit(v);
    if (!((present_ >> k) & 1U)) return std::nullopt;
    v ^= vecs_[k];
    origin ^= origins_[k];
  }
  return origin;
}

std::vector<Mask> list2(const Gf2Matrix& a, Mask b, int s2) {
  const int m = a.cols();
  const int r = a.rows();
  if (s2 < 0 || s2 > m) return {};
  if (s2 > 63) throw GuardError("list2: weight above 63");
  if (r > 24 || (std::size_t{1} << r) * static_cast<std::size_t>(m + 1) > kList2MaxStates)
    throw GuardError("list2: 2^rows (m+1) exceeds the state guard");
  if (!is_subset(b, full_mask(r))) return {};

  // reach[i][y]: bit k set iff columns 0..i-1 reach 0 from y with exactly k takes.
  const std::size_t states = std::size_t{1} << r;
  std::vector<std::uint64_t> reach(states * static_cast<std::size_t>(m + 1), 0);
  auto at = [&](int i, Mask y) -> std::uint64_t& { return reach[static_cast<std::size_t>(i) * states + y]; };
  at(0, 0) = 1;
  const std::uint64_t keep = s2 >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (s2 + 1)) - 1;
  for (int i = 1; i <= m; ++i) {
    const Mask col = a.column(i - 1);
    for (Mask y = 0; y < states; ++y) at(i, y) = (at(i - 1, y) | (at(i - 1, y ^ col) << 1)) & keep;
  }

  std::vector<Mask> out;
  if (!((at(m, b) >> s2) & 1U)) return out;
  // Depth-first walk that only enters vertices still able to finish.
  struct Frame {
    int i;
    Mask y;
    int need;
    Mask x;
    int stage;
  };
  std::vector<Frame> stack{{m, b, s2, 0, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.i == 0) {
      out.push_back(f.x);
      stack.pop_back();
      continue;
    }
    if (f.stage == 0) {
      f.stage = 1;
      if ((at(f.i - 1, f.y) >> f.need) & 1U) {
        stack.push_back({f.i - 1, f.y, f.need, f.x, 0});
        continue;
      }
    }
    if (f.stage == 1) {
      f.stage = 2;
      const Mask ny = f.y ^ a.column(f.i - 1);
      if (f.need > 0 && ((at(f.i - 1, ny) >> (f.need - 1)) & 1U)) {
        const Frame next{f.i - 1, ny, f.need - 1, f.x | (Mask{1} << (f.i - 1)), 0};
        stack.push_back(next);
        continue;
      }
    }
    stack.pop_back();
  }
  return out;
}

std::vector<Mask> list1(const Gf2Matrix& a, Mask b, int s1, Rng& rng) {
  if (s1 < 0 || s1 % 2 != 0) throw HypothesisError("list1: s1 must be even and nonnegative");
  const Gf2Matrix h = Gf2Matrix::random(s1, a.rows(), rng);
  const Gf2Matrix ha = h * a;
  // Uniform over the reachable hash values; equals a uniform s1-bit mask when HA has full row rank.
  const Mask b_left = ha.apply(rng.mask(a.cols()));
  const std::vector<Mask> left = list2(ha, b_left, s1 / 2);
  const std::vector<Mask> right = list2(ha, h.apply(b) ^ b_left, s1 / 2);

  std::unordered_multimap<Mask, Mask> by_image;
  by_image.reserve(right.size());
  for (Mask y : right) by_image.emplace(a.apply(y), y);
  std::unordered_set<Mask> seen;
  std::vector<Mask> out;
  for (Mask x : left) {
    const auto [lo, hi] = by_image.equal_range(b ^ a.apply(x));
    for (auto it = lo; it != hi; ++it) {
      const Mask y = it->second;
      if ((x & y) == 0 && seen.insert(x | y).second) out.push_back(x | y);
    }
  }
  return out;
}

std::vector<WeightedVector> deduplicate_by_image(const LinSatInstance& inst, const std::vector<Mask>& xs) {
  std::unordered_map<Mask, std::size_t> slot;
  std::vector<WeightedVector> out;
  for (Mask x : xs) {
    const WeightedVector wv{x, inst.image(x), inst.cost(x)};
    auto [it, fresh] = slot.emplace(wv.image, out.size());
    if (fresh)
      out.push_back(wv);
    else if (wv.cost < out[it->second].cost)
      out[it->second] = wv;
  }
  return out;
}

LinSatVerdict algorithm_a4(const LinSatInstance& inst, const RandomSeed& seed, const A4Options& opts,
                           LinSatStats* stats) {
  inst.validate();
  const int m = inst.m_cols();
  if (inst.b == 0 && inst.t >= 0) {
    if (stats) stats->shortcut = true;
    return {Answer::yes, 0, 0};
  }

  // Three zero columns of cost 0 let any solution be padded to weight 0 mod 4.
  LinSatInstance padded = inst;
  padded.columns.insert(padded.columns.end(), 3, Mask{0});
  padded.weights.insert(padded.weights.end(), 3, std::int64_t{0});
  const Gf2Matrix a(inst.n_rows, padded.columns);
  const int s_max = 4 * (((2 * m) / 3 + 3) / 4);
  const int trials =
      opts.trials > 0 ? opts.trials : static_cast<int>(std::ceil(opts.trial_factor * std::pow(m, 1.5) - 1e-9));
  const Mask original = full_mask(m);

  for (int trial = 0; trial < trials; ++trial) {
    if (stats) ++stats->trials;
    const RandomSeed trial_seed = seed.derive(static_cast<std::uint64_t>(trial));
    for (int s = 4; s <= s_max; s += 4) {
      Rng rng(trial_seed.derive(static_cast<std::uint64_t>(s)));
      const Gf2Matrix h = Gf2Matrix::random(s, inst.n_rows, rng);
      const Gf2Matrix ha = h * a;
      const Mask b_left = ha.apply(rng.mask(a.cols()));
      const auto left = deduplicate_by_image(padded, list1(ha, b_left, s / 2, rng));
      const auto right = deduplicate_by_image(padded, list1(ha, h.apply(inst.b) ^ b_left, s / 2, rng));
      if (stats) stats->list_entries += left.size() + right.size();
      std::unordered_map<Mask, const WeightedVector*> index;
      for (const auto& wv : right) index.emplace(wv.image, &wv);
      for (const auto& wv : left) {
        auto it = index.find(inst.b ^ wv.image);
        if (it == index.end() || wv.cost + it->second->cost > inst.t) continue;
        const Mask x = (wv.x ^ it->second->x) & original;
        LinSatVerdict v{Answer::yes, x, inst.cost(x)};
        if (!check_linsat_certificate(inst, v)) throw SoundnessError("A4 certificate failed re-verification");
        return v;
      }
    }
  }

  if (3 * Gf2Matrix(inst.n_rows, inst.columns).rank() >= 2 * m) {
    if (stats) stats->used_isd = true;
    return isd_fallback(inst);
  }
  return {};
}

LinSatVerdict isd_fallback(const LinSatInstance& inst, bool force) {
  inst.validate();
  const int m = inst.m_cols();
  const Gf2Matrix a(inst.n_rows, inst.columns);
  Gf2Basis basis;
  Mask in_basis = 0;
  for (int j = 0; j < m; ++j)
    if (basis.insert(a.column(j), Mask{1} << j)) in_basis |= Mask{1} << j;
  const int rank = basis.size();
  if (!force && 3 * rank < 2 * m) throw HypothesisError("isd_fallback: rank(A) below 2m/3");
  if (m - rank > 26) throw GuardError("isd_fallback: 2^(m - rank) exceeds 2^26");

  const Mask free = full_mask(m) & ~in_basis;
  std::optional<LinSatVerdict> best;
  for_each_submask(free, [&](Mask chosen) {
    const auto completion = basis.solve(inst.b ^ a.apply(chosen));
    if (!completion) return;
    const Mask x = chosen | *completion;
    const std::int64_t cost = inst.cost(x);
    if (!best || cost < best->cost || (cost == best->cost && x < best->x)) best = LinSatVerdict{Answer::yes, x, cost};
  });
  if (!best || best->cost > inst.t) return {};
  return *best;
}

double linsat_objective(double sigma) {
  const double h = entropy(sigma / 4);
  return std::max({sigma / 4, h - sigma / 2, 2 * h - 1.5 * sigma});
}

LinSatExponent linsat_exponent() {
  constexpr double kHi = 2.0 / 3.0;
  constexpr int kGrid = 20000;
  LinSatExponent best{0, linsat_objective(0)};
  for (int k = 1; k <= kGrid; ++k) {
    const double sigma = kHi * k / kGrid;
    const double v = linsat_objective(sigma);
    if (v > best.exponent) best = {sigma, v};
  }
  // Golden-section refinement inside the neighbouring grid cells.
  double lo = std::max(0.0, best.sigma - kHi / kGrid), hi = std::min(kHi, best.sigma + kHi / kGrid);
  const double phi = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 100; ++it) {
    const double c = hi - phi * (hi - lo), d = lo + phi * (hi - lo);
    if (linsat_objective(c) > linsat_objective(d))
      hi = d;
    else
      lo = c;
  }
  const double sigma = (lo + hi) / 2;
  if (linsat_objective(sigma) > best.exponent) best = {sigma, linsat_objective(sigma)};
  return best;
}

}  // namespace largecover
