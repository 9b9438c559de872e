#pragma once

#include <optional>
#include <vector>

#include "valent/matrix.hpp"

namespace valent {

template <class V>
struct Echelon {
  Mat<V> mat;
  std::vector<int> pivotCols;
  int rank = 0;
};

/// Row echelon form. The exact field uses fraction-free (Bareiss) two-term
/// updates with deterministic first-nonzero pivoting; the float field uses
/// plain elimination with partial pivoting. With `reduced` the pivots are
/// normalized to 1 and cleared above (RREF).
template <class F>
Echelon<typename F::Value> rowEchelon(const F& field, Mat<typename F::Value> a,
                                      bool reduced) {
  using V = typename F::Value;
  Echelon<V> out;
  int pivotRow = 0;
  V previousPivot(1);
  for (int c = 0; c < a.cols() && pivotRow < a.rows(); ++c) {
    int best = -1;
    double bestMag = 0.0;
    for (int r = pivotRow; r < a.rows(); ++r) {
      const double mag = field.pivotMagnitude(a.at(r, c));
      if (mag > bestMag) {
        bestMag = mag;
        best = r;
      }
    }
    if (best < 0) continue;
    a.swapRows(pivotRow, best);
    const V pivot = a.at(pivotRow, c);
    for (int i = pivotRow + 1; i < a.rows(); ++i) {
      if (field.isZero(a.at(i, c))) {
        if constexpr (F::exact) {
          // Fraction-free update still rescales untouched rows.
          for (int j = c + 1; j < a.cols(); ++j)
            a.at(i, j) = pivot * a.at(i, j) / previousPivot;
        }
        continue;
      }
      if constexpr (F::exact) {
        for (int j = c + 1; j < a.cols(); ++j)
          a.at(i, j) = (pivot * a.at(i, j) - a.at(i, c) * a.at(pivotRow, j)) /
                       previousPivot;
      } else {
        const V factor = a.at(i, c) / pivot;
        for (int j = c + 1; j < a.cols(); ++j)
          a.at(i, j) = a.at(i, j) - factor * a.at(pivotRow, j);
      }
      a.at(i, c) = V(0);
    }
    previousPivot = pivot;
    out.pivotCols.push_back(c);
    ++pivotRow;
  }
  out.rank = static_cast<int>(out.pivotCols.size());
  if (reduced) {
    for (int k = out.rank - 1; k >= 0; --k) {
      const int p = out.pivotCols[k];
      const V pivot = a.at(k, p);
      for (int j = p; j < a.cols(); ++j) a.at(k, j) = a.at(k, j) / pivot;
      for (int i = 0; i < k; ++i) {
        const V factor = a.at(i, p);
        if (field.isZero(factor)) continue;
        for (int j = p; j < a.cols(); ++j)
          a.at(i, j) = a.at(i, j) - factor * a.at(k, j);
      }
    }
  }
  out.mat = std::move(a);
  return out;
}

template <class F>
int rank(const F& field, const Mat<typename F::Value>& a) {
  return rowEchelon(field, a, false).rank;
}

/// Some x with Ax = b when the system is consistent (free variables zero),
/// absent otherwise.
template <class F>
std::optional<std::vector<typename F::Value>> solveConsistent(
    const F& field, const Mat<typename F::Value>& a,
    const std::vector<typename F::Value>& b) {
  using V = typename F::Value;
  if (a.rows() != static_cast<int>(b.size()))
    throw DimensionError("solveConsistent: right-hand side length mismatch");
  const auto ech = rowEchelon(field, a.withColumn(b), true);
  for (int p : ech.pivotCols)
    if (p == a.cols()) return std::nullopt;
  std::vector<V> x(a.cols(), V(0));
  for (int k = 0; k < ech.rank; ++k) x[ech.pivotCols[k]] = ech.mat.at(k, a.cols());
  return x;
}

/// Columns spanning ker A; exactly cols - rank of them, in free-column order.
template <class F>
Mat<typename F::Value> nullspaceBasis(const F& field,
                                      const Mat<typename F::Value>& a) {
  using V = typename F::Value;
  const auto ech = rowEchelon(field, a, true);
  std::vector<bool> isPivot(a.cols(), false);
  for (int p : ech.pivotCols) isPivot[p] = true;
  Mat<V> basis(a.cols(), a.cols() - ech.rank);
  int col = 0;
  for (int f = 0; f < a.cols(); ++f) {
    if (isPivot[f]) continue;
    basis.at(f, col) = V(1);
    for (int k = 0; k < ech.rank; ++k)
      basis.at(ech.pivotCols[k], col) = -ech.mat.at(k, f);
    ++col;
  }
  return basis;
}

/// Orthogonal projection of u onto the column span of B, via B (B*B)^-1 B* u.
/// Throws SingularMatrixError when B has dependent columns. A zero-column B
/// projects everything to zero.
template <class F>
std::vector<typename F::Value> gramProjection(
    const F& field, const Mat<typename F::Value>& basis,
    const std::vector<typename F::Value>& u) {
  using V = typename F::Value;
  if (basis.rows() != static_cast<int>(u.size()))
    throw DimensionError("gramProjection: vector length mismatch");
  if (basis.cols() == 0) return std::vector<V>(u.size(), V(0));
  const Mat<V> adjoint = basis.conjugateTransposed();
  const Mat<V> gram = adjoint * basis;
  if (rank(field, gram) != basis.cols())
    throw SingularMatrixError("gramProjection: dependent basis columns");
  const auto coeffs = solveConsistent(field, gram, matVec(adjoint, u));
  return matVec(basis, *coeffs);
}

/// Indices of a maximal independent subset of columns (the rank profile).
template <class F>
std::vector<int> columnRankProfile(const F& field,
                                   const Mat<typename F::Value>& a) {
  return rowEchelon(field, a, false).pivotCols;
}

/// Canonical basis of the column span: reduced row echelon form of the
/// transpose, nonzero rows returned as columns. Identical spans yield
/// identical canonical matrices.
template <class F>
Mat<typename F::Value> canonicalColumnSpan(const F& field,
                                           const Mat<typename F::Value>& a) {
  using V = typename F::Value;
  const auto ech = rowEchelon(field, a.transposed(), true);
  Mat<V> canon(a.rows(), ech.rank);
  for (int k = 0; k < ech.rank; ++k)
    for (int i = 0; i < a.rows(); ++i) canon.at(i, k) = ech.mat.at(k, i);
  return canon;
}

// Exact-field conveniences; these are the spec surface of the kernel.
inline int rank(const Matrix& a) { return rank(ExactField{}, a); }
inline std::optional<std::vector<Scalar>> solveConsistent(
    const Matrix& a, const std::vector<Scalar>& b) {
  return solveConsistent(ExactField{}, a, b);
}
inline Matrix nullspaceBasis(const Matrix& a) {
  return nullspaceBasis(ExactField{}, a);
}
inline std::vector<Scalar> gramProjection(const Matrix& basis,
                                          const std::vector<Scalar>& u) {
  return gramProjection(ExactField{}, basis, u);
}

}  // namespace valent
