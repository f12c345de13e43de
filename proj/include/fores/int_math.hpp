#pragma once

// Overflow-checked 64-bit integer helpers and a small exact rational type.
// Every quantity in this library is an integer or a ratio of integers; any
// intermediate that leaves the int64 range raises std::overflow_error instead
// of wrapping.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fores {

using Int = std::int64_t;
__extension__ using Wide = __int128;

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in addition");
  return out;
}

inline Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer overflow in subtraction");
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in multiplication");
  return out;
}

inline Wide wide_mul(Wide a, Wide b) {
  Wide out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("128-bit overflow in multiplication");
  return out;
}

inline Wide wide_add(Wide a, Wide b) {
  Wide out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("128-bit overflow in addition");
  return out;
}

inline Int narrow(Wide v) {
  if (v > static_cast<Wide>(INT64_MAX) || v < static_cast<Wide>(INT64_MIN))
    throw std::overflow_error("value does not fit in 64 bits");
  return static_cast<Int>(v);
}

// Mathematical modulus: result in [0, m) for m > 0, also for negative a.
inline Int floor_mod(Int a, Int m) {
  if (m <= 0) throw std::invalid_argument("floor_mod: modulus must be positive");
  Int r = a % m;
  return r < 0 ? r + m : r;
}

/// Reduced fraction p/q with q > 0.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Int num, Int den = 1) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = checked_sub(0, num);
      den = checked_sub(0, den);
    }
    Int g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  Int num() const { return num_; }
  Int den() const { return den_; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<Wide>(a.num_) * b.den_ < static_cast<Wide>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

  Rational operator-(const Rational& o) const {
    return Rational(narrow(static_cast<Wide>(num_) * o.den_ - static_cast<Wide>(o.num_) * den_),
                    checked_mul(den_, o.den_));
  }

  /// Always "p/q", also for integers ("0/1", "-1/6").
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

 private:
  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace fores
