#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace affgr {

class FieldElem;

/// The base field: the rationals, or a prime field Z/p with p < 2^31.
class Field {
 public:
  enum class Kind { rational, prime };

  static Field rational() { return Field{Kind::rational, 0}; }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  /// Accepts "rational" or "prime:<p>".
  static Field parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rational; }
  bool is_prime() const { return kind_ == Kind::prime; }
  std::uint64_t modulus() const { return modulus_; }
  std::string name() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(std::int64_t v) const;
  /// "p/q" or "p" in rational mode, a decimal residue in prime mode.
  FieldElem parse_elem(std::string_view text) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class FieldElem;
  Field(Kind k, std::uint64_t p) : kind_(k), modulus_(p) {}

  Kind kind_ = Kind::rational;
  std::uint64_t modulus_ = 0;
};

/// An exact element of the base field. Binary operations require both
/// operands to come from the same field and throw DomainError otherwise.
class FieldElem {
 public:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  explicit FieldElem(Residue r) : v_(r) {}
  explicit FieldElem(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  /// Rational mode only; throws UnsupportedModeError for prime fields.
  int sign() const;

  FieldElem operator-() const;
  FieldElem inverse() const;

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

  friend bool operator==(const FieldElem& a, const FieldElem& b);

  /// Canonical text form, inverse of Field::parse_elem.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const FieldElem& e);

  const Residue* residue() const { return std::get_if<Residue>(&v_); }
  const mpq_class* rational() const { return std::get_if<mpq_class>(&v_); }

 private:
  std::variant<Residue, mpq_class> v_;
};

}  // namespace affgr
