#include "affgr/valued_scalar.hpp"

#include <ostream>

#include "affgr/errors.hpp"

namespace affgr {

ValuedScalar::ValuedScalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("zero denominator");
  normalize();
}

void ValuedScalar::normalize() {
  const Field f = num_.field();
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(f.one());
    return;
  }
  const std::int64_t shift = checked_sub(num_.valuation().value(), den_.valuation().value());
  if (den_.is_monomial()) {
    num_ = num_.shifted(-den_.valuation().value()).scaled(den_.lowest_coeff().inverse());
    den_ = LaurentPoly::constant(f.one());
    return;
  }
  LaurentPoly p = num_.shifted(-num_.valuation().value());
  LaurentPoly q = den_.shifted(-den_.valuation().value());
  LaurentPoly g = poly_gcd(p, q);
  if (!g.is_one()) {
    p = poly_divmod(p, g).first;
    q = poly_divmod(q, g).first;
  }
  const FieldElem c = q.lowest_coeff().inverse();
  num_ = p.scaled(c).shifted(shift);
  den_ = q.scaled(c);
}

LaurentPoly ValuedScalar::expansion(std::int64_t limit) const {
  if (is_laurent()) return num_.truncated(limit);
  const std::int64_t v = num_.valuation().value();
  if (v >= limit) return LaurentPoly(field());
  const std::int64_t prec = limit - v;
  return mul_trunc(num_.shifted(-v), series_inverse(den_, prec), prec).shifted(v);
}

ValuedScalar ValuedScalar::operator-() const {
  ValuedScalar r = *this;
  r.num_ = -num_;
  return r;
}

ValuedScalar ValuedScalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return {den_, num_};
}

ValuedScalar& ValuedScalar::operator+=(const ValuedScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!is_laurent()) normalize();
    else if (num_.is_zero()) den_ = LaurentPoly::constant(field().one());
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

ValuedScalar& ValuedScalar::operator*=(const ValuedScalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = o;
  num_ = num_ * o.num_;
  if (is_laurent() && o.is_laurent()) return *this;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ValuedScalar& s) {
  if (s.is_laurent()) return os << s.num();
  return os << '[' << s.num() << "] / [" << s.den() << ']';
}

}  // namespace affgr
