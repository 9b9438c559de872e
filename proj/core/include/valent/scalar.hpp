#pragma once

#include <string>
#include <utility>

#include "valent/rational.hpp"

namespace valent {

/// Element of the field Q(i): a complex number with exact rational parts.
/// Arithmetic is closed and exact; equality is structural.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() : re(0), im(0) {}
  Scalar(long value) : re(value), im(0) {}  // NOLINT: field embedding
  Scalar(Rational real) : re(std::move(real)), im(0) {}
  Scalar(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  bool isZero() const { return re == 0 && im == 0; }
  bool isReal() const { return im == 0; }

  /// |z|^2 = re^2 + im^2, an exact rational.
  Rational squaredModulus() const { return re * re + im * im; }

  /// Multiplicative inverse. Throws DomainError on zero.
  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Scalar operator-(const Scalar& a) { return {-a.re, -a.im}; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
};

inline Scalar conjugate(const Scalar& z) { return {z.re, -z.im}; }

/// Parses the canonical serialization: "p/q" for rationals and
/// "p/q+r/si" (or "p/q-r/si", "r/si", "i", "-i") for complex values.
/// Throws ParseError with the offending offset.
Scalar parseScalar(const std::string& text);

/// Canonical text form: real values as "p" / "p/q"; complex values as
/// "<re>+<im>i" / "<re>-<im>i" with the real part always present.
std::string formatScalar(const Scalar& value);

/// Field policy for the exact pipeline. Zero tests are structural, pivots are
/// chosen first-nonzero (deterministic), elimination is fraction-free.
struct ExactField {
  using Value = Scalar;
  using Real = Rational;
  static constexpr bool exact = true;

  bool isZero(const Value& v) const { return v.isZero(); }
  bool eq(const Value& a, const Value& b) const { return a == b; }
  double pivotMagnitude(const Value& v) const { return v.isZero() ? 0.0 : 1.0; }
  Value fromRational(const Rational& q) const { return Scalar(q); }
  Real squaredModulus(const Value& v) const { return v.squaredModulus(); }
};

}  // namespace valent
