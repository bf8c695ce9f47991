#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "affgr/matrix.hpp"

namespace affgr {

/// A full-rank module over the valuation ring inside K^n, where K is the
/// field of rational functions over the base field with the t-adic valuation.
///
/// The basis is held in canonical column-echelon form: upper triangular, the
/// diagonal entry of column i is t^{e_i}, and every entry to the right of a
/// diagonal entry in its row is a Laurent polynomial with all exponents below
/// e_i. Two lattices are equal iff their canonical bases are identical. All
/// canonical entries are Laurent polynomials.
class Lattice {
 public:
  /// Lattice generated by the columns of a square matrix. Throws RankError
  /// when the columns are linearly dependent.
  static Lattice from_columns(const ScalarMatrix& columns);
  static Lattice from_columns(const PolyMatrix& columns);
  /// Lattice generated by an n x m generating set (m >= n) spanning K^n.
  static Lattice from_generators(const PolyMatrix& generators);
  /// Same, when t^{containment_exponent} E is already known to lie in the span.
  static Lattice from_generators(const PolyMatrix& generators, std::int64_t containment_exponent);
  /// The elementary lattice E spanned by e_1..e_n.
  static Lattice standard(const Field& f, std::size_t n);
  /// The lattice spanned by t^{exps[i]} e_i.
  static Lattice diagonal(const Field& f, std::span<const std::int64_t> exps);

  std::size_t rank() const { return basis_.rows(); }
  const Field& field() const { return basis_(0, 0).field(); }
  const PolyMatrix& canonical_basis() const { return basis_; }
  ScalarMatrix basis() const { return to_scalar(basis_); }
  std::vector<LaurentPoly> column(std::size_t j) const { return basis_.column(j); }
  /// Exponent e_i of the i-th diagonal entry.
  std::int64_t pivot_exponent(std::size_t i) const { return basis_(i, i).valuation().value(); }

  /// Coordinates of v in the canonical basis (exact back substitution).
  ScalarVector coordinates(const ScalarVector& v) const;
  /// True iff v lies in the lattice, i.e. all coordinates have valuation >= 0.
  bool contains(const ScalarVector& v) const;
  bool contains(std::span<const LaurentPoly> v) const;
  /// True iff other is a sublattice of this one.
  bool includes(const Lattice& other) const;
  bool is_diagonal() const;

  /// t^c L.
  Lattice scaled(std::int64_t c) const;
  /// Dual lattice under the standard bilinear form: { w : w^T v in O for all v in L }.
  Lattice dual() const;
  /// gL for a nonsingular g.
  Lattice transformed(const ScalarMatrix& g) const;
  Lattice transformed(const PolyMatrix& g) const;

  /// Smallest c with t^c E contained in the lattice.
  std::int64_t containment_exponent() const;

  /// -val det of any basis.
  std::int64_t unary_f() const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }
  std::size_t hash() const;

 private:
  explicit Lattice(PolyMatrix canonical) : basis_(std::move(canonical)) {}
  static Lattice canonicalize(const PolyMatrix& generators, std::int64_t containment_exponent);

  PolyMatrix basis_;
};

struct LatticeHash {
  std::size_t operator()(const Lattice& l) const { return l.hash(); }
};

Lattice sum(const Lattice& a, const Lattice& b);
Lattice sum(std::span<const Lattice> lattices);
Lattice intersect(const Lattice& a, const Lattice& b);
Lattice intersect(std::span<const Lattice> lattices);
/// t^c L.
inline Lattice scale(const Lattice& l, std::int64_t c) { return l.scaled(c); }
inline std::int64_t unary_f(const Lattice& l) { return l.unary_f(); }

std::ostream& operator<<(std::ostream& os, const Lattice& l);

}  // namespace affgr
