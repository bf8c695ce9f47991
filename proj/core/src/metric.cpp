#include "affgr/metric.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "affgr/errors.hpp"

namespace affgr {

DominantCoweight::DominantCoweight(std::vector<std::int64_t> a) : a_(std::move(a)) {
  if (!std::is_sorted(a_.begin(), a_.end(), std::greater<>())) {
    throw std::invalid_argument("coweight entries must be weakly decreasing");
  }
}

std::int64_t DominantCoweight::total() const { return partial_sum(a_.size()); }

std::int64_t DominantCoweight::partial_sum(std::size_t j) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < j && i < a_.size(); ++i) s = checked_add(s, a_[i]);
  return s;
}

DominantCoweight DominantCoweight::reversed_negated() const {
  std::vector<std::int64_t> r(a_.rbegin(), a_.rend());
  for (auto& x : r) x = checked_sub(0, x);
  return DominantCoweight(std::move(r));
}

DominantCoweight operator+(const DominantCoweight& x, const DominantCoweight& y) {
  if (x.size() != y.size()) throw std::invalid_argument("coweights of different length");
  std::vector<std::int64_t> r(x.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(x[i], y[i]);
  return DominantCoweight(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const DominantCoweight& a) {
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? ", " : "") << a[i];
  return os << ')';
}

WeightVector WeightVector::fundamental(std::size_t n, std::size_t i) {
  if (i > n) throw IndexError("fundamental weight index exceeds rank");
  std::vector<std::int64_t> w(n, 0);
  std::fill(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i), 1);
  return WeightVector(std::move(w));
}

DominantCoweight relative_invariants(const Lattice& l, const Lattice& m) {
  if (l.rank() != m.rank()) throw std::invalid_argument("lattices of different rank");
  const std::size_t n = l.rank();
  const Field f = l.field();
  // Columns of r express M's basis in L's basis; both factors are Laurent.
  PolyMatrix r = inverse_upper_monomial(l.canonical_basis()) * m.canonical_basis();
  ExtInt lo = ExtInt::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) lo = std::min(lo, r(i, j).valuation());
  }
  const std::int64_t s = -lo.value();
  const std::int64_t delta =
      checked_add(checked_sub(l.unary_f(), m.unary_f()), checked_mul(static_cast<std::int64_t>(n), s));
  const std::int64_t limit = checked_add(delta, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r(i, j) = r(i, j).shifted(s).truncated(limit);
  }

  std::vector<std::int64_t> a;
  a.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k, pc = k;
    ExtInt best = ExtInt::infinity();
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        const ExtInt v = r(i, j).valuation();
        if (v < best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    }
    if (best.is_infinite()) throw std::logic_error("relative invariants: precision bound violated");
    r.swap_rows(k, pr);
    r.swap_columns(k, pc);
    const std::int64_t v = best.value();
    const LaurentPoly unit = r(k, k).shifted(-v);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (r(i, k).is_zero()) continue;
      const LaurentPoly q = r(i, k).shifted(-v);
      for (std::size_t j = k + 1; j < n; ++j) r(i, j) = fma_trunc(unit, r(i, j), q, r(k, j), limit);
      r(i, k) = LaurentPoly(f);
    }
    // The pivot divides the rest of row k, so column operations clear it
    // without touching the trailing block.
    a.push_back(checked_sub(s, v));
  }
  std::sort(a.begin(), a.end(), std::greater<>());
  return DominantCoweight(std::move(a));
}

bool dominance_leq(const DominantCoweight& mu, const DominantCoweight& lambda) {
  if (mu.size() != lambda.size()) throw std::invalid_argument("coweights of different length");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    s = checked_add(s, checked_sub(lambda[i], mu[i]));
    if (s < 0) return false;
  }
  return s == 0;
}

std::int64_t pair(const WeightVector& w, const DominantCoweight& mu) {
  if (w.size() != mu.size()) throw std::invalid_argument("weight and coweight of different length");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s = checked_add(s, checked_mul(w.values()[i], mu[i]));
  return s;
}

std::int64_t binary_f(std::size_t i, std::size_t j, const Lattice& l, const Lattice& m) {
  if (i + j != l.rank()) throw IndexError("binary_f requires i + j = n");
  if (j == 0) return l.unary_f();
  if (i == 0) return m.unary_f();
  return checked_add(relative_invariants(l, m).partial_sum(j), l.unary_f());
}

SmithForm smith_form(const ScalarMatrix& input) {
  const std::size_t n = input.rows();
  if (n == 0 || input.cols() != n) throw RankError("expected a nonempty square matrix");
  const Field f = input(0, 0).field();
  ScalarMatrix a = input;
  ScalarMatrix row_inv = identity_scalar(f, n);
  ScalarMatrix col_inv = identity_scalar(f, n);
  std::vector<std::int64_t> exps;
  exps.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k, pc = k;
    ExtInt best = ExtInt::infinity();
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        const ExtInt v = a(i, j).valuation();
        if (v < best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    }
    if (best.is_infinite()) throw RankError("matrix is singular");
    // a = row_inv * a_work * col_inv is maintained throughout.
    a.swap_rows(k, pr);
    row_inv.swap_columns(k, pr);
    a.swap_columns(k, pc);
    col_inv.swap_rows(k, pc);
    const ValuedScalar pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const ValuedScalar q = a(i, k) / pivot;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= q * a(k, j);
      for (std::size_t r = 0; r < n; ++r) row_inv(r, k) += row_inv(r, i) * q;
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a(k, j).is_zero()) continue;
      const ValuedScalar q = a(k, j) / pivot;
      a(k, j) = ValuedScalar::zero(f);
      for (std::size_t c = 0; c < n; ++c) col_inv(k, c) += q * col_inv(j, c);
    }
    const std::int64_t v = best.value();
    const ValuedScalar unit = pivot * ValuedScalar::monomial(f.one(), -v);
    for (std::size_t c = 0; c < n; ++c) col_inv(k, c) *= unit;
    a(k, k) = ValuedScalar::monomial(f.one(), v);
    exps.push_back(v);
  }
  return SmithForm{std::move(row_inv), std::move(col_inv), std::move(exps)};
}

}  // namespace affgr
