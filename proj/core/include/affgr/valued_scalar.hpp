#pragma once

#include <iosfwd>

#include "affgr/extended_int.hpp"
#include "affgr/field.hpp"
#include "affgr/laurent.hpp"

namespace affgr {

/// An element of the field of rational functions in t, viewed inside the
/// Laurent series field. Stored as num/den with den a polynomial whose
/// constant term is 1 and gcd(num, den) = 1, so equality is structural and
/// valuation/leading coefficient are read off the numerator.
class ValuedScalar {
 public:
  explicit ValuedScalar(Field f) : num_(f), den_(LaurentPoly::constant(f.one())) {}
  ValuedScalar(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::constant(num_.field().one())) {}  // NOLINT
  /// Throws DomainError if den is zero.
  ValuedScalar(LaurentPoly num, LaurentPoly den);

  static ValuedScalar zero(Field f) { return ValuedScalar(f); }
  static ValuedScalar one(Field f) { return ValuedScalar(LaurentPoly::constant(f.one())); }
  static ValuedScalar monomial(const FieldElem& c, std::int64_t exp) { return {LaurentPoly::monomial(c, exp)}; }

  const Field& field() const { return num_.field(); }
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }

  /// val(num) - val(den); +inf for zero.
  ExtInt valuation() const { return num_.valuation(); }
  /// Coefficient of t^valuation in the expansion. Throws DomainError on zero.
  const FieldElem& leading_coefficient() const { return num_.lowest_coeff(); }
  /// Laurent expansion keeping exponents < limit.
  LaurentPoly expansion(std::int64_t limit) const;

  ValuedScalar operator-() const;
  ValuedScalar inverse() const;
  ValuedScalar& operator+=(const ValuedScalar& o);
  ValuedScalar& operator-=(const ValuedScalar& o) { return *this += -o; }
  ValuedScalar& operator*=(const ValuedScalar& o);
  ValuedScalar& operator/=(const ValuedScalar& o) { return *this *= o.inverse(); }
  friend ValuedScalar operator+(ValuedScalar a, const ValuedScalar& b) { return a += b; }
  friend ValuedScalar operator-(ValuedScalar a, const ValuedScalar& b) { return a -= b; }
  friend ValuedScalar operator*(ValuedScalar a, const ValuedScalar& b) { return a *= b; }
  friend ValuedScalar operator/(ValuedScalar a, const ValuedScalar& b) { return a /= b; }

  friend bool operator==(const ValuedScalar& a, const ValuedScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const ValuedScalar& s);

}  // namespace affgr
