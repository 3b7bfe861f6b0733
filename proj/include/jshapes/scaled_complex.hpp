#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "jshapes/curve.hpp"

namespace jshapes {

/// Complex number stored as mantissa * 2^exponent with the larger mantissa
/// component in [0.5, 1), so products of thousands of factors neither
/// overflow nor underflow. Zero has a zero mantissa and exponent 0.
class ScaledComplex {
 public:
  ScaledComplex() = default;
  ScaledComplex(Complex value) : mantissa_(value) { normalize(); }  // NOLINT: implicit by design
  ScaledComplex(Complex mantissa, std::int64_t exponent) : mantissa_(mantissa), exponent_(exponent) {
    normalize();
  }

  Complex mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }
  bool is_zero() const { return mantissa_ == Complex(0.0, 0.0); }
  bool is_finite() const { return std::isfinite(mantissa_.real()) && std::isfinite(mantissa_.imag()); }

  // Value as an ordinary complex number; saturates to infinity or zero.
  Complex to_complex() const {
    const int e = static_cast<int>(std::clamp<std::int64_t>(exponent_, -4000, 4000));
    return {std::ldexp(mantissa_.real(), e), std::ldexp(mantissa_.imag(), e)};
  }
  // log2 |value|; -infinity for zero.
  double log2_abs() const {
    return is_zero() ? -INFINITY : std::log2(std::abs(mantissa_)) + static_cast<double>(exponent_);
  }
  // |value| < r for r > 0, without leaving scaled arithmetic.
  bool abs_less(double r) const { return log2_abs() < std::log2(r); }

  ScaledComplex reciprocal() const {
    ScaledComplex out;
    out.mantissa_ = 1.0 / mantissa_;
    out.exponent_ = -exponent_;
    out.normalize();
    return out;
  }
  ScaledComplex operator-() const {
    ScaledComplex out(*this);
    out.mantissa_ = -mantissa_;
    return out;
  }

  ScaledComplex& operator*=(const ScaledComplex& other) {
    mantissa_ *= other.mantissa_;
    exponent_ += other.exponent_;
    normalize();
    return *this;
  }
  ScaledComplex& operator*=(Complex factor) {
    mantissa_ *= factor;
    normalize();
    return *this;
  }
  friend ScaledComplex operator*(ScaledComplex a, const ScaledComplex& b) { return a *= b; }
  friend ScaledComplex operator*(ScaledComplex a, Complex b) { return a *= b; }
  friend ScaledComplex operator/(const ScaledComplex& a, const ScaledComplex& b) {
    return a * b.reciprocal();
  }

  friend ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const ScaledComplex& big = a.exponent_ >= b.exponent_ ? a : b;
    const ScaledComplex& small = a.exponent_ >= b.exponent_ ? b : a;
    const std::int64_t gap = big.exponent_ - small.exponent_;
    if (gap > 1100) return big;
    const int shift = -static_cast<int>(gap);
    const Complex aligned(std::ldexp(small.mantissa_.real(), shift),
                          std::ldexp(small.mantissa_.imag(), shift));
    return ScaledComplex(big.mantissa_ + aligned, big.exponent_);
  }
  friend ScaledComplex operator-(const ScaledComplex& a, const ScaledComplex& b) { return a + (-b); }

 private:
  void normalize() {
    const double m = std::max(std::abs(mantissa_.real()), std::abs(mantissa_.imag()));
    if (m == 0.0) {
      mantissa_ = 0.0;
      exponent_ = 0;
      return;
    }
    if (!std::isfinite(m)) return;
    int e = 0;
    std::frexp(m, &e);
    mantissa_ = {std::ldexp(mantissa_.real(), -e), std::ldexp(mantissa_.imag(), -e)};
    exponent_ += e;
  }

  Complex mantissa_{0.0, 0.0};
  std::int64_t exponent_ = 0;
};

}  // namespace jshapes
