#pragma once

#include <cmath>
#include <complex>

#include "valent/rational.hpp"

namespace valent {

using Complex = std::complex<double>;

inline Complex conjugate(const Complex& z) { return std::conj(z); }

/// Tolerant field policy for trajectory inputs with irrational entries.
/// Two values match when |x - y| <= eps * max(1, |x|, |y|); elimination uses
/// partial pivoting on the modulus.
struct FloatField {
  double eps = 1e-9;

  using Value = Complex;
  using Real = double;
  static constexpr bool exact = false;

  bool eq(const Value& a, const Value& b) const {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= eps * scale;
  }
  bool isZero(const Value& v) const { return std::abs(v) <= eps; }
  double pivotMagnitude(const Value& v) const {
    return isZero(v) ? 0.0 : std::abs(v);
  }
  Value fromRational(const Rational& q) const { return {q.get_d(), 0.0}; }
  Real squaredModulus(const Value& v) const { return std::norm(v); }
};

}  // namespace valent
