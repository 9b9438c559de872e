#pragma once

#include <vector>

#include "valent/linalg.hpp"
#include "valent/pattern.hpp"
#include "valent/state.hpp"

namespace valent {

/// Closed linear subspace of an N-dimensional space, i.e. an atomic
/// proposition about the system. `basis` keeps an independent subset of the
/// spanning vectors as presented; `canonical` is the reduced-echelon
/// fingerprint used for equality, identical for every presentation of the
/// same span. Dimension 0 (constant-false) and N (constant-true) are legal.
template <class V>
struct SubspaceT {
  int ambientDim = 0;
  Mat<V> basis;
  Mat<V> canonical;

  int dim() const { return basis.cols(); }
  bool isZeroSubspace() const { return dim() == 0; }
  bool isFullSpace() const { return dim() == ambientDim; }
};

using Subspace = SubspaceT<Scalar>;

/// Subspace spanned by the columns of `spanning`; dependent spanning sets are
/// thinned to their column rank profile, so the stored basis is a subset of
/// the presented vectors.
template <class F>
SubspaceT<typename F::Value> makeSubspace(const F& field, int ambientDim,
                                          const Mat<typename F::Value>& spanning) {
  if (ambientDim < 1) throw DimensionError("ambient dimension must be >= 1");
  if (spanning.cols() > 0 && spanning.rows() != ambientDim)
    throw DimensionError("spanning vectors do not match the ambient dimension");
  Mat<typename F::Value> cleaned = spanning;
  if (spanning.cols() == 0) cleaned = Mat<typename F::Value>(ambientDim, 0);
  const auto keep = columnRankProfile(field, cleaned);
  SubspaceT<typename F::Value> s;
  s.ambientDim = ambientDim;
  if (static_cast<int>(keep.size()) != cleaned.cols()) {
    Mat<typename F::Value> thinned(ambientDim, static_cast<int>(keep.size()));
    for (int j = 0; j < thinned.cols(); ++j)
      for (int i = 0; i < ambientDim; ++i) thinned.at(i, j) = cleaned.at(i, keep[j]);
    s.basis = std::move(thinned);
  } else {
    s.basis = std::move(cleaned);
  }
  s.canonical = canonicalColumnSpan(field, s.basis);
  return s;
}

template <class F>
SubspaceT<typename F::Value> makeSubspace(
    const F& field, int ambientDim,
    const std::vector<std::vector<typename F::Value>>& spanningVectors) {
  return makeSubspace(field, ambientDim,
                      Mat<typename F::Value>::fromColumns(ambientDim, spanningVectors));
}

template <class F>
SubspaceT<typename F::Value> zeroSubspace(const F& field, int ambientDim) {
  return makeSubspace(field, ambientDim, Mat<typename F::Value>(ambientDim, 0));
}

template <class F>
SubspaceT<typename F::Value> fullSubspace(const F& field, int ambientDim) {
  return makeSubspace(field, ambientDim, Mat<typename F::Value>::identity(ambientDim));
}

/// Subspace induced by a pattern: one basis column per parameter letter
/// (its coefficient vector), thinned to an independent set. The span equals
/// the set of all parameter assignments of the pattern.
template <class F>
SubspaceT<typename F::Value> subspaceFromPattern(const F& field,
                                                 const PatternVector& pattern,
                                                 int ambientDim) {
  using V = typename F::Value;
  if (pattern.length() != ambientDim)
    throw DimensionError("pattern length does not match the ambient dimension");
  const std::vector<char> params(pattern.parameters.begin(), pattern.parameters.end());
  Mat<V> coeffs(ambientDim, static_cast<int>(params.size()));
  for (int i = 0; i < ambientDim; ++i) {
    const auto& entry = pattern.entries[i];
    for (int j = 0; j < static_cast<int>(params.size()); ++j) {
      const auto it = entry.coefficients.find(params[j]);
      if (it != entry.coefficients.end()) coeffs.at(i, j) = field.fromRational(it->second);
    }
  }
  return makeSubspace(field, ambientDim, coeffs);
}

/// The set of vectors orthogonal to everything in P: the nullspace of the
/// conjugate transpose of P's basis. dim P + dim P^perp = N.
template <class F>
SubspaceT<typename F::Value> orthocomplement(const F& field,
                                             const SubspaceT<typename F::Value>& p) {
  Mat<typename F::Value> adjoint = p.basis.conjugateTransposed();
  if (p.dim() == 0) adjoint = Mat<typename F::Value>(0, p.ambientDim);
  return makeSubspace(field, p.ambientDim, nullspaceBasis(field, adjoint));
}

/// Membership of the ray of u in the span (a rank test, scale-invariant).
template <class F>
bool containsVector(const F& field, const SubspaceT<typename F::Value>& p,
                    const StateVectorT<typename F::Value>& u) {
  if (p.ambientDim != u.dim())
    throw DimensionError("containsVector: ambient dimensions differ");
  if (p.isZeroSubspace()) return false;  // states are nonzero
  return rank(field, p.basis.withColumn(u.components)) == p.dim();
}

/// Equality of spans via the canonical fingerprints.
template <class F>
bool sameSubspace(const F& field, const SubspaceT<typename F::Value>& a,
                  const SubspaceT<typename F::Value>& b) {
  if (a.ambientDim != b.ambientDim || a.dim() != b.dim()) return false;
  if (a.canonical.rows() != b.canonical.rows() ||
      a.canonical.cols() != b.canonical.cols())
    return false;
  for (int i = 0; i < a.canonical.rows(); ++i)
    for (int j = 0; j < a.canonical.cols(); ++j)
      if (!field.eq(a.canonical.at(i, j), b.canonical.at(i, j))) return false;
  return true;
}

// Exact-field conveniences.
inline Subspace makeSubspace(int ambientDim, const Matrix& spanning) {
  return makeSubspace(ExactField{}, ambientDim, spanning);
}
inline Subspace makeSubspace(int ambientDim,
                             const std::vector<std::vector<Scalar>>& vectors) {
  return makeSubspace(ExactField{}, ambientDim, vectors);
}
inline Subspace subspaceFromPattern(const PatternVector& pattern, int ambientDim) {
  return subspaceFromPattern(ExactField{}, pattern, ambientDim);
}
inline Subspace orthocomplement(const Subspace& p) {
  return orthocomplement(ExactField{}, p);
}
inline bool containsVector(const Subspace& p, const StateVector& u) {
  return containsVector(ExactField{}, p, u);
}
inline bool sameSubspace(const Subspace& a, const Subspace& b) {
  return sameSubspace(ExactField{}, a, b);
}

}  // namespace valent
