#include "affgr/laurent.hpp"

#include <algorithm>
#include <ostream>

#include "affgr/errors.hpp"

namespace affgr {

namespace {

using Dense = std::vector<FieldElem>;

// Dense coefficients c[0..deg] of a polynomial with valuation >= 0.
Dense to_dense(const LaurentPoly& p) {
  Dense d(static_cast<std::size_t>(p.degree() + 1), p.field().zero());
  for (const auto& t : p.terms()) d[static_cast<std::size_t>(t.exp)] = t.coef;
  return d;
}

LaurentPoly from_dense(const Field& f, const Dense& d) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i].is_zero()) terms.push_back({static_cast<std::int64_t>(i), d[i]});
  }
  return LaurentPoly(f, std::move(terms));
}

void trim(Dense& d) {
  while (!d.empty() && d.back().is_zero()) d.pop_back();
}

void require_polynomial(const LaurentPoly& p) {
  if (!p.is_zero() && p.valuation() < ExtInt{0}) throw DomainError("expected a polynomial (no negative exponents)");
}

}  // namespace

LaurentPoly::LaurentPoly(Field f, std::vector<Term> terms) : field_(f), terms_(std::move(terms)) { normalize(); }

void LaurentPoly::normalize() {
  std::stable_sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

LaurentPoly LaurentPoly::monomial(const FieldElem& c, std::int64_t exp) {
  LaurentPoly p(c.field());
  if (!c.is_zero()) p.terms_.push_back({exp, c});
  return p;
}

bool LaurentPoly::is_one() const { return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coef.is_one(); }

ExtInt LaurentPoly::valuation() const {
  if (terms_.empty()) return ExtInt::infinity();
  return terms_.front().exp;
}

std::int64_t LaurentPoly::degree() const {
  if (terms_.empty()) throw DomainError("degree of zero");
  return terms_.back().exp;
}

const FieldElem& LaurentPoly::lowest_coeff() const {
  if (terms_.empty()) throw DomainError("leading coefficient of zero");
  return terms_.front().coef;
}

FieldElem LaurentPoly::coeff(std::int64_t exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp, [](const Term& t, std::int64_t e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coef;
  return field_.zero();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(field_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.exp, -t.coef});
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].exp < o.terms_[j].exp)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].exp < terms_[i].exp) {
      out.push_back(o.terms_[j++]);
    } else {
      FieldElem c = std::move(terms_[i].coef);
      c += o.terms_[j].coef;
      if (!c.is_zero()) out.push_back({terms_[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.field());
  return mul_trunc(a, b, checked_add(a.degree(), b.degree()) + 1);
}

LaurentPoly mul_trunc(const LaurentPoly& a, const LaurentPoly& b, std::int64_t limit) {
  LaurentPoly r(a.field());
  if (a.is_zero() || b.is_zero()) return r;
  auto ta = a.terms();
  auto tb = b.terms();
  const std::int64_t lo = checked_add(ta.front().exp, tb.front().exp);
  if (lo >= limit) return r;
  const std::int64_t hi = std::min(checked_add(ta.back().exp, tb.back().exp), limit - 1);
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  std::vector<LaurentPoly::Term> terms;
  if (span <= 4 * ta.size() * tb.size() + 64) {
    Dense acc(span, a.field().zero());
    for (const auto& x : ta) {
      for (const auto& y : tb) {
        const std::int64_t e = x.exp + y.exp;
        if (e > hi) break;
        acc[static_cast<std::size_t>(e - lo)] += x.coef * y.coef;
      }
    }
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (!acc[i].is_zero()) terms.push_back({lo + static_cast<std::int64_t>(i), std::move(acc[i])});
    }
    return LaurentPoly(a.field(), std::move(terms));
  }
  for (const auto& x : ta) {
    for (const auto& y : tb) {
      const std::int64_t e = checked_add(x.exp, y.exp);
      if (e >= limit) break;
      terms.push_back({e, x.coef * y.coef});
    }
  }
  return LaurentPoly(a.field(), std::move(terms));
}

LaurentPoly fma_trunc(const LaurentPoly& a, const LaurentPoly& x, const LaurentPoly& b, const LaurentPoly& y,
                      std::int64_t limit) {
  LaurentPoly r = mul_trunc(a, x, limit);
  r -= mul_trunc(b, y, limit);
  return r;
}

LaurentPoly LaurentPoly::scaled(const FieldElem& c) const {
  LaurentPoly r(field_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.exp, t.coef * c});
  return r;
}

LaurentPoly LaurentPoly::shifted(std::int64_t s) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exp = checked_add(t.exp, s);
  return r;
}

LaurentPoly LaurentPoly::truncated(std::int64_t limit) const {
  LaurentPoly r(field_);
  for (const auto& t : terms_) {
    if (t.exp >= limit) break;
    r.terms_.push_back(t);
  }
  return r;
}

LaurentPoly LaurentPoly::upper_part(std::int64_t limit) const {
  LaurentPoly r(field_);
  for (const auto& t : terms_) {
    if (t.exp >= limit) r.terms_.push_back({checked_sub(t.exp, limit), t.coef});
  }
  return r;
}

LaurentPoly series_inverse(const LaurentPoly& u, std::int64_t precision) {
  if (u.is_zero() || u.valuation() != ExtInt{0}) throw DomainError("series inverse needs a unit");
  const Field& f = u.field();
  if (precision <= 0) return LaurentPoly(f);
  const auto n = static_cast<std::size_t>(precision);
  const FieldElem c0inv = u.lowest_coeff().inverse();
  Dense w(n, f.zero());
  w[0] = c0inv;
  auto ut = u.terms();
  for (std::size_t k = 1; k < n; ++k) {
    FieldElem acc = f.zero();
    for (const auto& t : ut) {
      if (t.exp == 0) continue;
      if (static_cast<std::size_t>(t.exp) > k) break;
      acc += t.coef * w[k - static_cast<std::size_t>(t.exp)];
    }
    w[k] = -(acc * c0inv);
  }
  return from_dense(f, w);
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  require_polynomial(a);
  require_polynomial(b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const Field& f = a.field();
  if (a.is_zero() || a.degree() < b.degree()) return {LaurentPoly(f), a};
  Dense r = to_dense(a);
  const Dense d = to_dense(b);
  const FieldElem lead_inv = d.back().inverse();
  const std::size_t db = d.size() - 1;
  Dense q(r.size() - db, f.zero());
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k].is_zero()) continue;
    FieldElem c = r[k] * lead_inv;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] -= c * d[i];
    q[k - db] = std::move(c);
  }
  trim(r);
  return {from_dense(f, q), from_dense(f, r)};
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  require_polynomial(a);
  require_polynomial(b);
  while (!b.is_zero()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(a.terms().back().coef.inverse());
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& t : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << t.coef << ")t^" << t.exp;
  }
  return os;
}

}  // namespace affgr
