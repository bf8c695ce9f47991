#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>

namespace affgr {

/// An integer or +infinity. Valuations of zero are infinite.
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : value_(v), finite_(true) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtInt infinity() { return ExtInt{}; }

  constexpr bool is_infinite() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }
  /// Only meaningful when finite.
  constexpr std::int64_t value() const { return value_; }

  friend constexpr bool operator==(const ExtInt& a, const ExtInt& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (!a.finite_ || !b.finite_) return b.finite_ <=> a.finite_;
    return a.value_ <=> b.value_;
  }
  friend ExtInt operator+(const ExtInt& a, const ExtInt& b);
  friend ExtInt operator-(const ExtInt& a, std::int64_t b);

  friend std::ostream& operator<<(std::ostream& os, const ExtInt& v) {
    if (v.is_infinite()) return os << "+inf";
    return os << v.value_;
  }

 private:
  std::int64_t value_ = 0;
  bool finite_ = false;
};

/// Checked exponent arithmetic; throws std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace affgr
