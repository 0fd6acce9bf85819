#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "largecover/bits.hpp"

namespace largecover {

// Answers "is there a set f in F with N(f) = X?". Must be deterministic and
// safe to call concurrently.
struct SetOracle {
  int n = 0;
  std::function<bool(Mask)> contains;

  bool operator()(Mask x) const { return contains(x); }
};

// The down-closure of a family: every subset of some member. Members are kept
// sorted by (popcount, mask), so each subset precedes all of its supersets.
class DownClosure {
 public:
  DownClosure() = default;

  int universe_size() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const Mask> members() const { return members_; }
  Mask operator[](std::size_t pos) const { return members_[pos]; }
  int max_popcount() const { return members_.empty() ? 0 : popcount(members_.back()); }

  std::optional<std::size_t> find(Mask x) const;
  bool contains(Mask x) const { return find(x).has_value(); }
  // Position of a member; precondition contains(x).
  std::size_t index_of(Mask x) const {
    return dense_.empty() ? sparse_.at(x) : static_cast<std::size_t>(dense_[x]);
  }

 private:
  friend DownClosure down_closure(std::span<const Mask> family, int n);

  static constexpr std::uint32_t kAbsent = 0xffffffffU;

  int n_ = 0;
  std::vector<Mask> members_;
  // Dense lookup for small universes, hash map otherwise.
  std::vector<std::uint32_t> dense_;
  std::unordered_map<Mask, std::uint32_t> sparse_;
};

DownClosure down_closure(std::span<const Mask> family, int n);
inline DownClosure full_lattice(int n) {
  const Mask u = full_mask(n);
  return down_closure(std::span<const Mask>(&u, 1), n);
}

// Whether |down_closure(family)| <= n * 2^((1 - (zeta/2)^4) n). Throws
// HypothesisError unless 2 sqrt|beta| <= zeta <= 1/4, every member has
// exactly (1/2 + beta) n elements and |family| <= 2^((1 - zeta) n).
bool closure_size_bound_check(int n, double zeta, double beta, std::span<const Mask> family);
// The right-hand side n * 2^((1 - (zeta/2)^4) n), rounded down.
long double closure_size_bound(int n, double zeta);

enum class Layer { f, g, h, c };

// One signed 64-bit value per (closure member, cardinality index x in
// 0..degree).
class LayeredTable {
 public:
  LayeredTable(const DownClosure& dc, int degree, Layer tag);

  const DownClosure& closure() const { return *dc_; }
  int degree() const { return degree_; }
  Layer tag() const { return tag_; }
  void set_tag(Layer tag) { tag_ = tag; }

  std::int64_t& at(std::size_t pos, int x) { return values_[pos * stride() + static_cast<std::size_t>(x)]; }
  std::int64_t at(std::size_t pos, int x) const { return values_[pos * stride() + static_cast<std::size_t>(x)]; }
  std::int64_t value(Mask set, int x) const { return at(dc_->index_of(set), x); }
  std::span<std::int64_t> row(std::size_t pos) { return {values_.data() + pos * stride(), stride()}; }
  std::span<const std::int64_t> row(std::size_t pos) const { return {values_.data() + pos * stride(), stride()}; }

  friend bool operator==(const LayeredTable& a, const LayeredTable& b) {
    return a.dc_ == b.dc_ && a.degree_ == b.degree_ && a.values_ == b.values_;
  }

 private:
  std::size_t stride() const { return static_cast<std::size_t>(degree_) + 1; }

  const DownClosure* dc_;
  int degree_;
  Layer tag_;
  std::vector<std::int64_t> values_;
};

// g_x(Y) = sum over X subset of Y of f_x(X), for every Y in the closure, by
// one sweep per universe element (ascending bit order).
LayeredTable zeta_on_closure(const DownClosure& dc, const LayeredTable& f_layer);

// h_{x,i}(X) = sum over x_1 + ... + x_i = x of g_{x_1}(X) ... g_{x_i}(X):
// the i-th power of the per-subset polynomial, truncated at the table degree.
LayeredTable compose_weight_profiles(const LayeredTable& g, int i);
// Same, building on an already composed power: result = h * g.
LayeredTable multiply_profiles(const LayeredTable& h, const LayeredTable& g);

// c(X) = sum over Z subset of X of (-1)^|Z| h(X \ Z).
LayeredTable moebius_on_closure(const DownClosure& dc, const LayeredTable& h_layer);

// counts[i].value(X, x) = number of ordered i-tuples (f_1..f_i) in F^i with
// union exactly X and total size x, for i = 0..i_max.
std::vector<LayeredTable> tuple_cover_counts(const DownClosure& dc, const SetOracle& oracle, int i_max);

// f_x(X) = [oracle(X) and |X| = x] on the closure.
LayeredTable oracle_layer(const DownClosure& dc, const SetOracle& oracle, bool include_empty = true);

}  // namespace largecover
