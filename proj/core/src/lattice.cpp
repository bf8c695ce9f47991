#include "affgr/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

#include "affgr/errors.hpp"

namespace affgr {

namespace {

using Column = std::vector<LaurentPoly>;

ExtInt min_valuation(const PolyMatrix& m) {
  ExtInt lo = ExtInt::infinity();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) lo = std::min(lo, m(r, c).valuation());
  }
  return lo;
}

// Canonical form of the span of polynomial generators, given that the span
// contains t^delta E. Works modulo t^(delta+1): discrepancies of that order
// are absorbed by the lattice, and the canonical entries have degree < delta.
PolyMatrix hnf_in_valuation_ring(const PolyMatrix& gens, std::int64_t delta) {
  const std::size_t n = gens.rows();
  const Field f = gens(0, 0).field();
  const std::int64_t limit = checked_add(delta, 1);
  std::vector<Column> cols;
  cols.reserve(gens.cols());
  for (std::size_t c = 0; c < gens.cols(); ++c) {
    Column col;
    col.reserve(n);
    for (std::size_t r = 0; r < n; ++r) col.push_back(gens(r, c).truncated(limit));
    cols.push_back(std::move(col));
  }
  std::vector<std::size_t> active(gens.cols());
  for (std::size_t c = 0; c < active.size(); ++c) active[c] = c;

  PolyMatrix h(n, n, LaurentPoly(f));
  std::vector<std::int64_t> exps(n);
  for (std::size_t r = n; r-- > 0;) {
    auto best = active.end();
    ExtInt best_val = ExtInt::infinity();
    for (auto it = active.begin(); it != active.end(); ++it) {
      const ExtInt v = cols[*it][r].valuation();
      if (v < best_val) {
        best_val = v;
        best = it;
      }
    }
    if (best == active.end() || best_val >= ExtInt{limit}) {
      throw std::logic_error("lattice canonicalization: containment bound violated");
    }
    const std::size_t pc = *best;
    active.erase(best);
    const std::int64_t v = best_val.value();
    const LaurentPoly unit = cols[pc][r].shifted(-v);
    for (std::size_t a : active) {
      if (cols[a][r].is_zero()) continue;
      const LaurentPoly q = cols[a][r].shifted(-v);
      for (std::size_t i = 0; i < r; ++i) cols[a][i] = fma_trunc(unit, cols[a][i], q, cols[pc][i], limit);
      cols[a][r] = LaurentPoly(f);
    }
    const LaurentPoly unit_inv = series_inverse(unit, limit);
    for (std::size_t i = 0; i < r; ++i) h(i, r) = mul_trunc(cols[pc][i], unit_inv, limit);
    h(r, r) = LaurentPoly::monomial(f, v);
    exps[r] = v;
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const LaurentPoly c = h(i, j).upper_part(exps[i]);
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < i; ++k) {
        if (!h(k, i).is_zero()) h(k, j) -= mul_trunc(c, h(k, i), limit);
      }
      h(i, j) = h(i, j).truncated(exps[i]);
    }
  }
  return h;
}

PolyMatrix shifted(const PolyMatrix& m, std::int64_t s) {
  PolyMatrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).shifted(s);
  }
  return r;
}

PolyMatrix concat(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix m(a.rows(), a.cols() + b.cols(), LaurentPoly(a(0, 0).field()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

void require_same_rank(const Lattice& a, const Lattice& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("lattices of different rank");
  if (!(a.field() == b.field())) throw DomainError("lattices over different fields");
}

}  // namespace

Lattice Lattice::canonicalize(const PolyMatrix& generators, std::int64_t containment_exponent) {
  const std::int64_t shift = -min_valuation(generators).value();
  const std::int64_t delta = checked_add(containment_exponent, shift);
  PolyMatrix h = hnf_in_valuation_ring(shifted(generators, shift), delta);
  return Lattice(shifted(h, -shift));
}

Lattice Lattice::from_columns(const PolyMatrix& columns) {
  if (columns.rows() == 0 || columns.rows() != columns.cols()) {
    throw RankError("expected a nonempty square matrix of generators");
  }
  const DetLeading d = determinant_leading(columns);
  if (d.valuation.is_infinite()) throw RankError("generators are linearly dependent");
  // With B = t^{-s} B' and B' polynomial, the adjugate of B' gives
  // t^{val det B'} E inside B'O^n, so t^{val det B + (n-1)s} E lies in BO^n.
  const std::int64_t s = -min_valuation(columns).value();
  const auto n1 = static_cast<std::int64_t>(columns.rows()) - 1;
  return canonicalize(columns, checked_add(d.valuation.value(), checked_mul(n1, s)));
}

Lattice Lattice::from_columns(const ScalarMatrix& columns) {
  if (columns.rows() == 0 || columns.rows() != columns.cols()) {
    throw RankError("expected a nonempty square matrix of generators");
  }
  const Field f = columns(0, 0).field();
  PolyMatrix polys(columns.rows(), columns.cols(), LaurentPoly(f));
  for (std::size_t c = 0; c < columns.cols(); ++c) {
    // Denominators have constant term 1, so they are units of the valuation
    // ring; clearing them column by column leaves the span unchanged.
    LaurentPoly lcm = LaurentPoly::constant(f.one());
    for (std::size_t r = 0; r < columns.rows(); ++r) {
      const LaurentPoly& d = columns(r, c).den();
      if (d.is_one()) continue;
      const LaurentPoly g = poly_gcd(lcm, d);
      lcm = poly_divmod(lcm * d, g).first;
    }
    const ValuedScalar factor(lcm);
    for (std::size_t r = 0; r < columns.rows(); ++r) {
      const ValuedScalar e = columns(r, c) * factor;
      assert(e.is_laurent());
      polys(r, c) = e.num();
    }
  }
  return from_columns(polys);
}

Lattice Lattice::from_generators(const PolyMatrix& generators) {
  const std::size_t n = generators.rows();
  const std::size_t m = generators.cols();
  if (n == 0 || m < n) throw RankError("too few generators");
  if (m == n) return from_columns(generators);
  // Any nonsingular n-subset S gives t^{val det S} E inside the span.
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  ExtInt best = ExtInt::infinity();
  std::size_t tried = 0;
  while (true) {
    PolyMatrix sub(n, n, LaurentPoly(generators(0, 0).field()));
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t r = 0; r < n; ++r) sub(r, c) = generators(r, pick[c]);
    }
    best = std::min(best, determinant_leading(sub).valuation);
    if (++tried >= 64 && best.is_finite()) break;
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == m - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (best.is_infinite()) throw RankError("generators do not span");
  const std::int64_t s = -min_valuation(generators).value();
  const auto n1 = static_cast<std::int64_t>(n) - 1;
  return canonicalize(generators, checked_add(best.value(), checked_mul(n1, s)));
}

Lattice Lattice::from_generators(const PolyMatrix& generators, std::int64_t containment_exponent) {
  if (generators.rows() == 0 || generators.cols() < generators.rows()) throw RankError("too few generators");
  return canonicalize(generators, containment_exponent);
}

Lattice Lattice::standard(const Field& f, std::size_t n) {
  if (n == 0) throw RankError("rank must be positive");
  return Lattice(identity_poly(f, n));
}

Lattice Lattice::diagonal(const Field& f, std::span<const std::int64_t> exps) {
  if (exps.empty()) throw RankError("rank must be positive");
  PolyMatrix m(exps.size(), exps.size(), LaurentPoly(f));
  for (std::size_t i = 0; i < exps.size(); ++i) m(i, i) = LaurentPoly::monomial(f, exps[i]);
  return Lattice(std::move(m));
}

ScalarVector Lattice::coordinates(const ScalarVector& v) const {
  const std::size_t n = rank();
  if (v.size() != n) throw std::invalid_argument("vector length differs from lattice rank");
  ScalarVector x(n, ValuedScalar::zero(field()));
  for (std::size_t i = n; i-- > 0;) {
    ValuedScalar acc = v[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!basis_(i, j).is_zero() && !x[j].is_zero()) acc -= ValuedScalar(basis_(i, j)) * x[j];
    }
    const auto& d = basis_(i, i).terms().front();
    x[i] = acc * ValuedScalar::monomial(d.coef.inverse(), -d.exp);
  }
  return x;
}

bool Lattice::contains(const ScalarVector& v) const {
  for (const auto& x : coordinates(v)) {
    if (x.valuation() < ExtInt{0}) return false;
  }
  return true;
}

bool Lattice::contains(std::span<const LaurentPoly> v) const {
  ScalarVector s;
  s.reserve(v.size());
  for (const auto& p : v) s.emplace_back(p);
  return contains(s);
}

bool Lattice::includes(const Lattice& other) const {
  require_same_rank(*this, other);
  for (std::size_t j = 0; j < rank(); ++j) {
    if (!contains(other.column(j))) return false;
  }
  return true;
}

bool Lattice::is_diagonal() const {
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = i + 1; j < rank(); ++j) {
      if (!basis_(i, j).is_zero()) return false;
    }
  }
  return true;
}

Lattice Lattice::scaled(std::int64_t c) const { return Lattice(shifted(basis_, c)); }

Lattice Lattice::dual() const {
  const PolyMatrix inv_t = inverse_upper_monomial(basis_).transposed();
  // t^c E lies in the dual exactly when L lies in t^{-c} E.
  return canonicalize(inv_t, -min_valuation(basis_).value());
}

Lattice Lattice::transformed(const ScalarMatrix& g) const {
  if (g.rows() != rank() || g.cols() != rank()) throw std::invalid_argument("transform has wrong shape");
  return from_columns(g * basis());
}

Lattice Lattice::transformed(const PolyMatrix& g) const {
  if (g.rows() != rank() || g.cols() != rank()) throw std::invalid_argument("transform has wrong shape");
  return from_columns(g * basis_);
}

std::int64_t Lattice::containment_exponent() const {
  return -min_valuation(inverse_upper_monomial(basis_)).value();
}

std::int64_t Lattice::unary_f() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank(); ++i) s = checked_add(s, pivot_exponent(i));
  return -s;
}

std::size_t Lattice::hash() const {
  std::size_t h = rank();
  auto mix = [&h](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = i; j < rank(); ++j) {
      for (const auto& t : basis_(i, j).terms()) {
        mix(std::hash<std::int64_t>{}(t.exp));
        if (const auto* r = t.coef.residue()) {
          mix(r->value);
        } else {
          mix(std::hash<std::string>{}(t.coef.to_string()));
        }
      }
      mix(0x51);
    }
  }
  return h;
}

Lattice sum(const Lattice& a, const Lattice& b) {
  require_same_rank(a, b);
  return Lattice::from_generators(concat(a.canonical_basis(), b.canonical_basis()), a.containment_exponent());
}

Lattice sum(std::span<const Lattice> lattices) {
  if (lattices.empty()) throw std::invalid_argument("sum of no lattices");
  Lattice acc = lattices.front();
  for (std::size_t i = 1; i < lattices.size(); ++i) acc = sum(acc, lattices[i]);
  return acc;
}

Lattice intersect(const Lattice& a, const Lattice& b) {
  require_same_rank(a, b);
  return sum(a.dual(), b.dual()).dual();
}

Lattice intersect(std::span<const Lattice> lattices) {
  if (lattices.empty()) throw std::invalid_argument("intersection of no lattices");
  Lattice acc = lattices.front();
  for (std::size_t i = 1; i < lattices.size(); ++i) acc = intersect(acc, lattices[i]);
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Lattice& l) {
  os << "Lattice(n=" << l.rank() << ")[";
  for (std::size_t j = 0; j < l.rank(); ++j) {
    os << (j ? "; " : "") << '(';
    for (std::size_t i = 0; i < l.rank(); ++i) os << (i ? ", " : "") << l.canonical_basis()(i, j);
    os << ')';
  }
  return os << ']';
}

}  // namespace affgr
