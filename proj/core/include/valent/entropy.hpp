#pragma once

#include <string>

#include "valent/errors.hpp"
#include "valent/rational.hpp"

namespace valent {

/// Logarithm base used for entropy units. Either a rational beta > 1
/// (beta = 2 gives bits) or the token "e" (nats).
class LogBase {
 public:
  static LogBase bits() { return LogBase(false, Rational(2)); }
  static LogBase naturalLog() { return LogBase(true, Rational(0)); }

  /// Throws DomainError unless beta > 1.
  static LogBase ofRational(const Rational& beta);

  /// Accepts "e" or a rational literal ("2", "10", "3/2").
  static LogBase parse(const std::string& token);

  bool isNatural() const { return natural_; }
  const Rational& value() const { return beta_; }

  /// ln(beta); the divisor converting natural logs into this base.
  double lnBase() const;

  /// "e" or the canonical rational literal.
  std::string describe() const;

  friend bool operator==(const LogBase& a, const LogBase& b) {
    return a.natural_ == b.natural_ && a.beta_ == b.beta_;
  }

 private:
  LogBase(bool natural, Rational beta) : natural_(natural), beta_(std::move(beta)) {}
  bool natural_;
  Rational beta_;
};

/// Lossless value of the predicate entropy H = log_b N - (m/N) log_b m for a
/// known ambient dimension N and match maximum m = max(|M|, |M_perp|).
/// The pair is base-independent; the float value is derived on demand.
struct EntropyValue {
  int dimension = 0;  // N
  int matchMax = 0;   // m, with 0 * log 0 := 0

  double value(const LogBase& base) const;

  bool isZero() const { return matchMax == dimension; }

  /// H(0) == H(1) == log_b N, so entropy comparisons normalize m to >= 1.
  int normalizedMax() const { return matchMax < 1 ? 1 : matchMax; }
};

/// Exact equality of two entropies over the same ambient dimension.
/// Throws DimensionError when dimensions differ.
bool sameEntropy(const EntropyValue& a, const EntropyValue& b);

/// Sign of (b - a) as an exact comparison: -1, 0, +1.
int compareEntropy(const EntropyValue& a, const EntropyValue& b);

/// log_base(N), the supremum of the predicate entropy in dimension N.
double maxEntropy(int dimension, const LogBase& base);

/// -p log p - (1-p) log(1-p) in the given base, with 0 log 0 := 0.
/// Throws DomainError when p is outside [0, 1].
double shannonBinaryEntropy(const Rational& p, const LogBase& base);
double shannonBinaryEntropy(double p, const LogBase& base);

}  // namespace valent
