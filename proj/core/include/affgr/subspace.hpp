#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

#include "affgr/field.hpp"

namespace affgr {

using FieldVector = std::vector<FieldElem>;

/// Subspace of F^n held as the rows of its reduced row-echelon basis.
class Subspace {
 public:
  static Subspace zero(const Field& f, std::size_t n);
  static Subspace full(const Field& f, std::size_t n);
  /// Span of arbitrary vectors of length n.
  static Subspace span(const Field& f, std::size_t n, std::span<const FieldVector> vectors);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<FieldVector>& basis() const { return rows_; }
  bool contains(const FieldVector& v) const;
  bool includes(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  Subspace(Field f, std::size_t n) : field_(f), n_(n) {}
  Field field_;
  std::size_t n_ = 0;
  std::vector<FieldVector> rows_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Rank of a list of vectors of length n.
std::size_t rank_of(const Field& f, std::size_t n, std::span<const FieldVector> vectors);

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<FieldVector>& rows, std::size_t ncols);

std::ostream& operator<<(std::ostream& os, const Subspace& s);

}  // namespace affgr
