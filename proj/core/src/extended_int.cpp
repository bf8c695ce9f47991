#include "affgr/extended_int.hpp"

#include <stdexcept>

namespace affgr {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

ExtInt operator+(const ExtInt& a, const ExtInt& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtInt::infinity();
  return ExtInt{checked_add(a.value_, b.value_)};
}

ExtInt operator-(const ExtInt& a, std::int64_t b) {
  if (a.is_infinite()) return a;
  return ExtInt{checked_sub(a.value_, b)};
}

}  // namespace affgr
