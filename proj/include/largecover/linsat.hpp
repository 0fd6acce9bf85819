#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "largecover/instances.hpp"
#include "largecover/rng.hpp"

namespace largecover {

// GF(2) matrix stored by columns; column j is a mask over the rows.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, std::vector<Mask> columns);
  static Gf2Matrix random(int rows, int cols, Rng& rng);

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(columns_.size()); }
  Mask column(int j) const { return columns_[static_cast<std::size_t>(j)]; }
  const std::vector<Mask>& columns() const { return columns_; }

  // A x for x a mask over the columns.
  Mask apply(Mask x) const;
  // this * other; other.rows() must equal cols().
  Gf2Matrix operator*(const Gf2Matrix& other) const;

  int rank() const;
  // Indices of a column basis, chosen greedily left to right.
  std::vector<int> column_basis() const;

 private:
  int rows_ = 0;
  std::vector<Mask> columns_;
};

// Incremental elimination over column masks, remembering which inserted
// columns make up each reduced vector.
class Gf2Basis {
 public:
  // Returns false when v is already in the span.
  bool insert(Mask v, Mask origin);
  // Combination of inserted origins summing to v, if v is in the span.
  std::optional<Mask> solve(Mask v) const;
  int size() const { return std::popcount(present_); }

 private:
  // Slot k holds the vector whose leading bit is k.
  Mask present_ = 0;
  Mask vecs_[64] = {};
  Mask origins_[64] = {};
};

inline constexpr std::size_t kList2MaxStates = std::size_t{1} << 26;

// Every x with A x = b and wt(x) = s2, by path enumeration in the layered
// reachability graph over states y in GF(2)^rows. Deterministic order.
std::vector<Mask> list2(const Gf2Matrix& a, Mask b, int s2);

// Weight-s1 solutions of A x = b, each kept with constant probability: an
// inner hash H' (s1 x rows) splits candidates into two weight-s1/2 lists
// that are joined on their A-images. s1 must be even.
std::vector<Mask> list1(const Gf2Matrix& a, Mask b, int s1, Rng& rng);

struct WeightedVector {
  Mask x = 0;
  Mask image = 0;
  std::int64_t cost = 0;
};
// One cheapest entry per distinct A-image (ties: first seen).
std::vector<WeightedVector> deduplicate_by_image(const LinSatInstance& inst, const std::vector<Mask>& xs);

struct LinSatStats {
  int trials = 0;
  std::size_t list_entries = 0;
  bool used_isd = false;
  bool shortcut = false;
};

struct A4Options {
  // Trial count is ceil(trial_factor * m^1.5) unless `trials` is positive.
  double trial_factor = 1.0;
  int trials = 0;
};

LinSatVerdict algorithm_a4(const LinSatInstance& inst, const RandomSeed& seed, const A4Options& opts = {},
                           LinSatStats* stats = nullptr);

// Exact: enumerate subsets of non-basis columns and complete each uniquely
// in the basis. Requires rank(A) >= 2m/3 unless `force`; guard 2^(m-rank) <= 2^26.
LinSatVerdict isd_fallback(const LinSatInstance& inst, bool force = false);

struct LinSatExponent {
  double sigma = 0;
  double exponent = 0;
};
// max over sigma in [0, 2/3] of max{sigma/4, h(sigma/4) - sigma/2, 2h(sigma/4) - 3sigma/2}.
LinSatExponent linsat_exponent();
double linsat_objective(double sigma);

}  // namespace largecover
