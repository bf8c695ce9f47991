#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "affgr/lattice.hpp"

namespace affgr {

/// Weakly decreasing integer vector a_1 >= ... >= a_n.
class DominantCoweight {
 public:
  DominantCoweight() = default;
  /// Throws std::invalid_argument unless the entries are weakly decreasing.
  explicit DominantCoweight(std::vector<std::int64_t> a);
  DominantCoweight(std::initializer_list<std::int64_t> a) : DominantCoweight(std::vector<std::int64_t>(a)) {}

  std::size_t size() const { return a_.size(); }
  std::int64_t operator[](std::size_t i) const { return a_[i]; }
  const std::vector<std::int64_t>& values() const { return a_; }
  std::int64_t total() const;
  /// Sum of the first j entries.
  std::int64_t partial_sum(std::size_t j) const;
  /// (-a_n, ..., -a_1): the image under -w_0.
  DominantCoweight reversed_negated() const;

  friend bool operator==(const DominantCoweight&, const DominantCoweight&) = default;
  /// Componentwise sum; dominant again.
  friend DominantCoweight operator+(const DominantCoweight& x, const DominantCoweight& y);

 private:
  std::vector<std::int64_t> a_;
};

std::ostream& operator<<(std::ostream& os, const DominantCoweight& a);

/// Integer functional on coweights.
class WeightVector {
 public:
  explicit WeightVector(std::vector<std::int64_t> w) : w_(std::move(w)) {}
  /// omega_i: i ones followed by n-i zeros.
  static WeightVector fundamental(std::size_t n, std::size_t i);

  std::size_t size() const { return w_.size(); }
  const std::vector<std::int64_t>& values() const { return w_; }

 private:
  std::vector<std::int64_t> w_;
};

/// The a_i with gL = E and gM = <t^{-a_1}e_1, ..., t^{-a_n}e_n>.
DominantCoweight relative_invariants(const Lattice& l, const Lattice& m);
/// d(L, M); the same as relative_invariants(L, M).
inline DominantCoweight distance(const Lattice& l, const Lattice& m) { return relative_invariants(l, m); }

/// True iff lambda - mu has nonnegative partial sums and zero total.
bool dominance_leq(const DominantCoweight& mu, const DominantCoweight& lambda);

std::int64_t pair(const WeightVector& w, const DominantCoweight& mu);

/// Maximum of -val det over i vectors from L and j vectors from M. Only
/// i + j = n is supported (IndexError otherwise).
std::int64_t binary_f(std::size_t i, std::size_t j, const Lattice& l, const Lattice& m);

/// Exact Smith form over the valuation ring: row_inverse * diag(t^{exps}) *
/// col_inverse = a, where row_inverse and col_inverse are invertible over
/// the valuation ring. exps is in pivot order (not sorted).
struct SmithForm {
  ScalarMatrix row_inverse;
  ScalarMatrix col_inverse;
  std::vector<std::int64_t> exps;
};

/// Throws RankError for singular input.
SmithForm smith_form(const ScalarMatrix& a);

}  // namespace affgr
