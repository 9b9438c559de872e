#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "valent/errors.hpp"
#include "valent/rational.hpp"

namespace valent {

/// One entry of a pattern: a linear expression over parameter letters with
/// rational coefficients. The constant term must be zero for the pattern to
/// describe a subspace; the parser enforces that.
struct LinearExpr {
  Rational constant = Rational(0);
  std::map<char, Rational> coefficients;  // letter -> coefficient, zeros kept out

  bool isZero() const { return constant == 0 && coefficients.empty(); }
};

/// Parametric vector in the bracketed notation "[a,-b-c,2*c,0]": the set of
/// all parameter assignments, which is a linear subspace when every entry is
/// homogeneous.
struct PatternVector {
  std::vector<LinearExpr> entries;
  std::set<char> parameters;  // every letter seen, sorted

  int length() const { return static_cast<int>(entries.size()); }
};

/// Grammar: '[' expr (',' expr)* ']' where expr is a sum of signed terms and
/// a term is a rational coefficient, a parameter letter a-z, or coeff '*'
/// letter. Whitespace is allowed between tokens. Throws ParseError with the
/// offending offset on bad syntax and on a nonzero constant term
/// ("non-homogeneous entry").
PatternVector parsePattern(const std::string& text);

}  // namespace valent
