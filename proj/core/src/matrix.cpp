#include "affgr/matrix.hpp"

#include <algorithm>

#include "affgr/errors.hpp"
#include "affgr/incremental_det.hpp"

namespace affgr {

PolyMatrix identity_poly(const Field& f, std::size_t n) {
  PolyMatrix m(n, n, LaurentPoly(f));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::constant(f.one());
  return m;
}

ScalarMatrix identity_scalar(const Field& f, std::size_t n) {
  ScalarMatrix m(n, n, ValuedScalar::zero(f));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ValuedScalar::one(f);
  return m;
}

ScalarMatrix to_scalar(const PolyMatrix& m) {
  if (m.rows() == 0) return {};
  ScalarMatrix s(m.rows(), m.cols(), ValuedScalar::zero(m(0, 0).field()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) s(r, c) = ValuedScalar(m(r, c));
  }
  return s;
}

ValuedScalar determinant(const ScalarMatrix& m) {
  const std::size_t n = m.rows();
  assert(n == m.cols() && n > 0);
  ScalarMatrix a = m;
  ValuedScalar det = ValuedScalar::one(m(0, 0).field());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return ValuedScalar::zero(det.field());
    if (p != k) {
      a.swap_rows(p, k);
      det = -det;
    }
    det *= a(k, k);
    const ValuedScalar inv = a(k, k).inverse();
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      const ValuedScalar factor = a(r, k) * inv;
      for (std::size_t c = k + 1; c < n; ++c) {
        if (!a(k, c).is_zero()) a(r, c) -= factor * a(k, c);
      }
    }
  }
  return det;
}

namespace {

LaurentPoly cofactor_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const Field f = m(0, 0).field();
  if (row == m.rows()) return LaurentPoly::constant(f.one());
  LaurentPoly acc(f);
  bool negate = false;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (!m(row, c).is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      LaurentPoly term = m(row, c) * cofactor_rec(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
      if (negate) acc -= term;
      else acc += term;
    }
    negate = !negate;
  }
  return acc;
}

}  // namespace

LaurentPoly cofactor_determinant(const PolyMatrix& m) {
  assert(m.rows() == m.cols() && m.rows() > 0);
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
  return cofactor_rec(m, cols, 0);
}

ScalarMatrix inverse(const ScalarMatrix& m) {
  const std::size_t n = m.rows();
  assert(n == m.cols() && n > 0);
  const Field f = m(0, 0).field();
  ScalarMatrix a = m;
  ScalarMatrix inv = identity_scalar(f, n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) throw RankError("singular matrix");
    a.swap_rows(p, k);
    inv.swap_rows(p, k);
    const ValuedScalar pinv = a(k, k).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      a(k, c) *= pinv;
      inv(k, c) *= pinv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || a(r, k).is_zero()) continue;
      const ValuedScalar factor = a(r, k);
      for (std::size_t c = 0; c < n; ++c) {
        if (!a(k, c).is_zero()) a(r, c) -= factor * a(k, c);
        if (!inv(k, c).is_zero()) inv(r, c) -= factor * inv(k, c);
      }
    }
  }
  return inv;
}

DetLeading determinant_leading(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  assert(n == m.cols() && n > 0);
  const Field f = m(0, 0).field();
  std::vector<std::vector<LaurentPoly>> cols;
  std::int64_t shift_total = 0;
  std::int64_t limit = 1;
  for (std::size_t c = 0; c < n; ++c) {
    ExtInt lo = ExtInt::infinity();
    for (std::size_t r = 0; r < n; ++r) lo = std::min(lo, m(r, c).valuation());
    if (lo.is_infinite()) return {ExtInt::infinity(), std::nullopt};
    std::int64_t deg = lo.value();
    for (std::size_t r = 0; r < n; ++r) {
      if (!m(r, c).is_zero()) deg = std::max(deg, m(r, c).degree());
    }
    std::vector<LaurentPoly> col;
    col.reserve(n);
    for (std::size_t r = 0; r < n; ++r) col.push_back(m(r, c).shifted(-lo.value()));
    cols.push_back(std::move(col));
    shift_total = checked_add(shift_total, lo.value());
    limit = checked_add(limit, deg - lo.value());
  }
  IncrementalDet engine(f, n, limit);
  for (const auto& col : cols) {
    if (!engine.push(col)) return {ExtInt::infinity(), std::nullopt};
  }
  if (engine.valuation() >= limit) return {ExtInt::infinity(), std::nullopt};
  return {ExtInt{checked_add(engine.valuation(), shift_total)}, engine.leading_coefficient()};
}

PolyMatrix inverse_upper_monomial(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  assert(n == m.cols() && n > 0);
  const Field f = m(0, 0).field();
  PolyMatrix inv(n, n, LaurentPoly(f));
  std::vector<LaurentPoly> diag_inv;
  diag_inv.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    assert(m(i, i).is_monomial());
    const auto& t = m(i, i).terms().front();
    diag_inv.push_back(LaurentPoly::monomial(t.coef.inverse(), -t.exp));
  }
  // Back substitution column by column: m * inv = I.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t ii = j + 1; ii-- > 0;) {
      LaurentPoly acc = ii == j ? LaurentPoly::constant(f.one()) : LaurentPoly(f);
      for (std::size_t k = ii + 1; k <= j; ++k) {
        if (!m(ii, k).is_zero() && !inv(k, j).is_zero()) acc -= m(ii, k) * inv(k, j);
      }
      inv(ii, j) = acc * diag_inv[ii];
    }
  }
  return inv;
}

}  // namespace affgr
