#pragma once

#include <cstdint>
#include <string>

#include "spinz/types.hpp"

namespace spinz {

/// Complex value stored as mantissa * 2^exponent with |mantissa| in [1, 2)
/// (or exactly 0). Keeps partition functions representable when they over-
/// or underflow double precision.
class ScaledValue {
 public:
  ScaledValue() = default;

  static ScaledValue from(Complex v);
  static ScaledValue from(double v) { return from(Complex(v, 0.0)); }
  static ScaledValue from_scaled(Complex mantissa, std::int64_t exponent2);
  /// base^exponent for base > 0, without intermediate overflow.
  static ScaledValue pow(double base, double exponent);

  Complex mantissa() const { return m_; }
  std::int64_t exponent2() const { return e_; }
  bool is_zero() const { return m_ == Complex(0.0, 0.0); }

  ScaledValue& operator*=(const ScaledValue& o);
  ScaledValue& operator*=(Complex c);
  ScaledValue& operator+=(const ScaledValue& o);

  friend ScaledValue operator*(ScaledValue a, const ScaledValue& b) { return a *= b; }
  friend ScaledValue operator*(ScaledValue a, Complex c) { return a *= c; }
  friend ScaledValue operator+(ScaledValue a, const ScaledValue& b) { return a += b; }

  /// log2 of the magnitude; -infinity for zero.
  double log2_magnitude() const;
  /// Phase of the mantissa in (-pi, pi]; 0 for zero.
  double phase() const;
  /// Collapses to a plain complex; overflows to inf / underflows to 0
  /// outside double range.
  Complex to_complex() const;

  /// Decimal rendering with the given number of significant digits.
  /// Real values render as a single number, complex ones as "re+imi".
  std::string decimal_string(int significant_digits = 17) const;

 private:
  void normalize();

  Complex m_{0.0, 0.0};
  std::int64_t e_ = 0;
};

/// |a - b| / max(|a|, |b|); 0 when both are zero. Phase differences count
/// because the subtraction is complex.
double relative_difference(const ScaledValue& a, const ScaledValue& b);

}  // namespace spinz
