#include "affgr/field.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

#include "affgr/errors.hpp"

namespace affgr {

namespace {

bool is_prime_number(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

[[noreturn]] void mismatch() { throw DomainError("field elements from different fields"); }

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime_number(p)) {
    throw std::invalid_argument("modulus must be a prime below 2^31: " + std::to_string(p));
  }
  return Field{Kind::prime, p};
}

Field Field::parse(std::string_view text) {
  if (text == "rational") return rational();
  constexpr std::string_view prefix = "prime:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      throw FormatError("bad field modulus: " + std::string(text));
    }
    return prime(p);
  }
  throw FormatError("unknown field: " + std::string(text));
}

std::string Field::name() const {
  return is_rational() ? std::string("rational") : "prime:" + std::to_string(modulus_);
}

FieldElem Field::zero() const { return from_int(0); }
FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(std::int64_t v) const {
  if (is_rational()) return FieldElem(mpq_class(static_cast<long>(v)));
  auto m = static_cast<std::int64_t>(modulus_);
  auto r = v % m;
  if (r < 0) r += m;
  return FieldElem(FieldElem::Residue{static_cast<std::uint64_t>(r), modulus_});
}

FieldElem Field::parse_elem(std::string_view text) const {
  if (text.empty()) throw FormatError("empty coefficient");
  if (is_rational()) {
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
      throw FormatError("bad rational coefficient: " + std::string(text));
    }
    return FieldElem(q);
  }
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || v >= modulus_) {
    throw FormatError("bad residue: " + std::string(text));
  }
  return FieldElem(FieldElem::Residue{v, modulus_});
}

Field FieldElem::field() const {
  if (auto* r = residue()) return Field{Field::Kind::prime, r->modulus};
  return Field::rational();
}

bool FieldElem::is_zero() const {
  if (auto* r = residue()) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool FieldElem::is_one() const {
  if (auto* r = residue()) return r->value == 1;
  return std::get<mpq_class>(v_) == 1;
}

int FieldElem::sign() const {
  if (residue() != nullptr) throw UnsupportedModeError("sign is undefined in a prime field");
  return sgn(std::get<mpq_class>(v_));
}

FieldElem FieldElem::operator-() const {
  if (auto* r = residue()) return FieldElem(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  return FieldElem(mpq_class(-std::get<mpq_class>(v_)));
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (auto* r = residue()) return FieldElem(Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus});
  return FieldElem(mpq_class(1 / std::get<mpq_class>(v_)));
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  if (auto* r = std::get_if<Residue>(&v_)) {
    auto* s = o.residue();
    if (s == nullptr || s->modulus != r->modulus) mismatch();
    r->value += s->value;
    if (r->value >= r->modulus) r->value -= r->modulus;
    return *this;
  }
  auto* q = o.rational();
  if (q == nullptr) mismatch();
  std::get<mpq_class>(v_) += *q;
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  if (auto* r = std::get_if<Residue>(&v_)) {
    auto* s = o.residue();
    if (s == nullptr || s->modulus != r->modulus) mismatch();
    r->value = r->value * s->value % r->modulus;
    return *this;
  }
  auto* q = o.rational();
  if (q == nullptr) mismatch();
  std::get<mpq_class>(v_) *= *q;
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inverse(); }

bool operator==(const FieldElem& a, const FieldElem& b) { return a.v_ == b.v_; }

std::string FieldElem::to_string() const {
  if (auto* r = residue()) return std::to_string(r->value);
  return std::get<mpq_class>(v_).get_str();
}

std::ostream& operator<<(std::ostream& os, const FieldElem& e) { return os << e.to_string(); }

}  // namespace affgr
