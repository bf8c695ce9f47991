#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "affgr/laurent.hpp"
#include "affgr/valued_scalar.hpp"

namespace affgr {

/// Dense row-major matrix with value semantics.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }
  void set_column(std::size_t c, const std::vector<T>& v) {
    assert(v.size() == rows_);
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }
  void swap_columns(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transposed() const {
    Matrix t;
    t.rows_ = cols_;
    t.cols_ = rows_;
    t.data_.reserve(data_.size());
    for (std::size_t c = 0; c < cols_; ++c) {
      for (std::size_t r = 0; r < rows_; ++r) t.data_.push_back((*this)(r, c));
    }
    return t;
  }

  /// Columns given as a list of equal-length vectors.
  static Matrix from_columns(const std::vector<std::vector<T>>& cols) {
    Matrix m;
    m.cols_ = cols.size();
    m.rows_ = cols.empty() ? 0 : cols.front().size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (std::size_t r = 0; r < m.rows_; ++r) {
      for (std::size_t c = 0; c < m.cols_; ++c) {
        assert(cols[c].size() == m.rows_);
        m.data_.push_back(cols[c][r]);
      }
    }
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<LaurentPoly>;
using ScalarMatrix = Matrix<ValuedScalar>;
using ScalarVector = std::vector<ValuedScalar>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  assert(a.cols() == b.rows());
  assert(a.rows() > 0 && b.cols() > 0);
  Matrix<T> r(a.rows(), b.cols(), a(0, 0) - a(0, 0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return r;
}

PolyMatrix identity_poly(const Field& f, std::size_t n);
ScalarMatrix identity_scalar(const Field& f, std::size_t n);
ScalarMatrix to_scalar(const PolyMatrix& m);

/// Exact determinant by Gaussian elimination over the rational-function field.
ValuedScalar determinant(const ScalarMatrix& m);
/// Exact inverse by Gauss-Jordan elimination; throws RankError when singular.
ScalarMatrix inverse(const ScalarMatrix& m);

/// Exact determinant of a Laurent-polynomial matrix by cofactor expansion.
/// Intended for n <= 4.
LaurentPoly cofactor_determinant(const PolyMatrix& m);

/// Valuation and leading coefficient of a determinant.
struct DetLeading {
  ExtInt valuation;           ///< +inf when the determinant vanishes
  std::optional<FieldElem> leading;  ///< empty when the determinant vanishes
};

/// Determinant valuation of a square Laurent-polynomial matrix, computed
/// without denominators by elimination modulo a power of t large enough to
/// certify zero.
DetLeading determinant_leading(const PolyMatrix& m);

/// Inverse of an upper-triangular matrix whose diagonal entries are monomials.
PolyMatrix inverse_upper_monomial(const PolyMatrix& m);

}  // namespace affgr
