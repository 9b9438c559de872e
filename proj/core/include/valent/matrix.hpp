#pragma once

#include <initializer_list>
#include <vector>

#include "valent/errors.hpp"
#include "valent/scalar.hpp"

namespace valent {

/// Dense matrix over an arbitrary scalar type, row-major storage.
/// Zero rows or columns are legal: empty bases and row selections on the
/// empty index set both occur in normal operation.
template <class V>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), entries_(checkedSize(rows, cols)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = V(1);
    return m;
  }

  /// Builds from a list of column vectors, each of length `rows`.
  static Mat fromColumns(int rows, const std::vector<std::vector<V>>& columns) {
    Mat m(rows, static_cast<int>(columns.size()));
    for (int j = 0; j < m.cols_; ++j) {
      if (static_cast<int>(columns[j].size()) != rows)
        throw DimensionError("column length does not match row count");
      for (int i = 0; i < rows; ++i) m.at(i, j) = columns[j][i];
    }
    return m;
  }

  static Mat fromRows(const std::vector<std::vector<V>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c)
        throw DimensionError("ragged row in matrix literal");
      for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  V& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  const V& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<V> row(int i) const {
    std::vector<V> out(cols_);
    for (int j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
  }
  std::vector<V> column(int j) const {
    std::vector<V> out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Mat conjugateTransposed() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = conjugate(at(i, j));
    return t;
  }

  /// Rows picked by ascending 0-based indices; `indices` may be empty.
  Mat selectRows(const std::vector<int>& indices) const {
    Mat m(static_cast<int>(indices.size()), cols_);
    for (int i = 0; i < m.rows_; ++i) {
      if (indices[i] < 0 || indices[i] >= rows_)
        throw DimensionError("row index out of range");
      for (int j = 0; j < cols_; ++j) m.at(i, j) = at(indices[i], j);
    }
    return m;
  }

  /// Copy of this matrix with one extra column appended on the right.
  Mat withColumn(const std::vector<V>& col) const {
    if (static_cast<int>(col.size()) != rows_)
      throw DimensionError("appended column has wrong length");
    Mat m(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
      m.at(i, cols_) = col[i];
    }
    return m;
  }

  void swapRows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  static size_t checkedSize(int rows, int cols) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    return static_cast<size_t>(rows) * static_cast<size_t>(cols);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<V> entries_;
};

using Matrix = Mat<Scalar>;

template <class V>
Mat<V> operator*(const Mat<V>& a, const Mat<V>& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  Mat<V> out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const V& aik = a.at(i, k);
      for (int j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

template <class V>
std::vector<V> matVec(const Mat<V>& a, const std::vector<V>& x) {
  if (a.cols() != static_cast<int>(x.size()))
    throw DimensionError("matrix-vector shape mismatch");
  std::vector<V> out(a.rows(), V(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out[i] += a.at(i, j) * x[j];
  return out;
}

/// <a, b> with the conjugation on the first argument.
template <class V>
V innerProduct(const std::vector<V>& a, const std::vector<V>& b) {
  if (a.size() != b.size()) throw DimensionError("inner product shape mismatch");
  V sum(0);
  for (size_t i = 0; i < a.size(); ++i) sum += conjugate(a[i]) * b[i];
  return sum;
}

template <class F>
bool isZeroVector(const F& field, const std::vector<typename F::Value>& v) {
  for (const auto& x : v)
    if (!field.isZero(x)) return false;
  return true;
}

}  // namespace valent
