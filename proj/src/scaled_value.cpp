#include "spinz/scaled_value.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace spinz {

namespace {

constexpr int kMaxShift = 2100;  // beyond double's subnormal range either way

Complex ldexp_cplx(Complex v, int k) {
  return Complex(std::ldexp(v.real(), k), std::ldexp(v.imag(), k));
}

}  // namespace

void ScaledValue::normalize() {
  const double a = std::abs(m_);
  if (a == 0.0) {
    m_ = Complex(0.0, 0.0);
    e_ = 0;
    return;
  }
  int k = 0;
  std::frexp(a, &k);  // a = f * 2^k, f in [0.5, 1)
  m_ = ldexp_cplx(m_, -(k - 1));
  e_ += k - 1;
}

ScaledValue ScaledValue::from(Complex v) {
  ScaledValue s;
  s.m_ = v;
  s.normalize();
  return s;
}

ScaledValue ScaledValue::from_scaled(Complex mantissa, std::int64_t exponent2) {
  ScaledValue s;
  s.m_ = mantissa;
  s.e_ = exponent2;
  s.normalize();
  return s;
}

ScaledValue ScaledValue::pow(double base, double exponent) {
  const double t = exponent * std::log2(base);
  const double k = std::floor(t);
  ScaledValue s;
  s.m_ = Complex(std::exp2(t - k), 0.0);
  s.e_ = static_cast<std::int64_t>(k);
  s.normalize();
  return s;
}

ScaledValue& ScaledValue::operator*=(const ScaledValue& o) {
  m_ *= o.m_;
  e_ += o.e_;
  normalize();
  return *this;
}

ScaledValue& ScaledValue::operator*=(Complex c) {
  m_ *= c;
  normalize();
  return *this;
}

ScaledValue& ScaledValue::operator+=(const ScaledValue& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  const ScaledValue* hi = this;
  const ScaledValue* lo = &o;
  if (o.e_ > e_) std::swap(hi, lo);
  const std::int64_t d = hi->e_ - lo->e_;
  Complex m = hi->m_;
  if (d <= kMaxShift) m += ldexp_cplx(lo->m_, -static_cast<int>(d));
  e_ = hi->e_;
  m_ = m;
  normalize();
  return *this;
}

double ScaledValue::log2_magnitude() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  return std::log2(std::abs(m_)) + static_cast<double>(e_);
}

double ScaledValue::phase() const {
  if (is_zero()) return 0.0;
  return std::arg(m_);
}

Complex ScaledValue::to_complex() const {
  if (is_zero()) return Complex(0.0, 0.0);
  const int k = static_cast<int>(std::clamp<std::int64_t>(e_, -kMaxShift, kMaxShift));
  return ldexp_cplx(m_, k);
}

namespace {

// One real component of mantissa * 2^e in scientific decimal notation.
std::string part_string(double mant, std::int64_t e2, int digits) {
  if (mant == 0.0) return "0";
  char buf[64];
  // Within double range, let the runtime do the conversion exactly.
  const double log2v = std::log2(std::abs(mant)) + static_cast<double>(e2);
  if (std::abs(log2v) < 1000.0) {
    const double v = std::ldexp(mant, static_cast<int>(e2));
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
  }
  const long double log10v =
      std::log10(std::abs(static_cast<long double>(mant))) +
      static_cast<long double>(e2) * 0.30102999566398119521L;
  const long double d10 = std::floor(log10v);
  long double lead = std::pow(10.0L, log10v - d10);
  std::snprintf(buf, sizeof buf, "%s%.*Lfe%+lld", mant < 0 ? "-" : "", digits - 1, lead,
                static_cast<long long>(d10));
  return buf;
}

}  // namespace

std::string ScaledValue::decimal_string(int significant_digits) const {
  if (is_zero()) return "0";
  const std::string re = part_string(m_.real(), e_, significant_digits);
  if (m_.imag() == 0.0) return re;
  const std::string im = part_string(m_.imag(), e_, significant_digits);
  if (m_.real() == 0.0) return im + "i";
  return re + (m_.imag() < 0 ? "" : "+") + im + "i";
}

double relative_difference(const ScaledValue& a, const ScaledValue& b) {
  if (a.is_zero() && b.is_zero()) return 0.0;
  ScaledValue diff = a;
  diff += b * Complex(-1.0, 0.0);
  if (diff.is_zero()) return 0.0;
  const double den = std::max(a.log2_magnitude(), b.log2_magnitude());
  const double ratio_log2 = diff.log2_magnitude() - den;
  if (ratio_log2 > 60.0) return std::numeric_limits<double>::infinity();
  return std::exp2(ratio_log2);
}

}  // namespace spinz
