#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "affgr/extended_int.hpp"
#include "affgr/field.hpp"

namespace affgr {

/// A finitely supported Laurent series sum_k c_k t^k over the base field.
/// Terms are kept sorted by exponent with no zero coefficients, so the zero
/// polynomial is the empty term list and equality is structural.
class LaurentPoly {
 public:
  struct Term {
    std::int64_t exp;
    FieldElem coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit LaurentPoly(Field f) : field_(f) {}
  /// Sorts and merges; zero coefficients are dropped.
  LaurentPoly(Field f, std::vector<Term> terms);

  static LaurentPoly monomial(const FieldElem& c, std::int64_t exp);
  static LaurentPoly monomial(Field f, std::int64_t exp) { return monomial(f.one(), exp); }
  static LaurentPoly constant(const FieldElem& c) { return monomial(c, 0); }

  const Field& field() const { return field_; }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  /// Lowest exponent; +inf for zero.
  ExtInt valuation() const;
  /// Highest exponent. Requires nonzero.
  std::int64_t degree() const;
  /// Coefficient of the lowest term. Throws DomainError on zero.
  const FieldElem& lowest_coeff() const;
  FieldElem coeff(std::int64_t exp) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly scaled(const FieldElem& c) const;
  /// Multiplies by t^s.
  LaurentPoly shifted(std::int64_t s) const;
  /// Keeps only the terms with exponent < limit.
  LaurentPoly truncated(std::int64_t limit) const;
  /// Terms with exponent >= limit, divided by t^limit.
  LaurentPoly upper_part(std::int64_t limit) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  void normalize();

  Field field_;
  std::vector<Term> terms_;
};

/// Product truncated to exponents < limit.
LaurentPoly mul_trunc(const LaurentPoly& a, const LaurentPoly& b, std::int64_t limit);
/// a*x - b*y truncated to exponents < limit.
LaurentPoly fma_trunc(const LaurentPoly& a, const LaurentPoly& x, const LaurentPoly& b, const LaurentPoly& y,
                      std::int64_t limit);
/// For u with valuation 0, the w with u*w = 1 mod t^precision.
LaurentPoly series_inverse(const LaurentPoly& u, std::int64_t precision);

// Polynomial operations; arguments must have valuation >= 0.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace affgr
