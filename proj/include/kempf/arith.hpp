#pragma once

// Exact arithmetic primitives: GMP integers and rationals, dense vectors and
// matrices over them, and the handful of linear-algebra routines the rest of
// the library needs (rank, RREF, nullspace, inverse, determinant).

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kempf/errors.hpp"

namespace kempf {

using Integer = mpz_class;
using Rational = mpq_class;
using QVec = std::vector<Rational>;
using ZVec = std::vector<Integer>;

/// Parses "p/q", "p" or "-p/q". Throws InputError on anything else or q = 0.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const QVec& v);

bool is_zero(const QVec& v);
bool is_zero(const ZVec& v);
bool is_integral(const QVec& v);
Rational dot(const QVec& a, const QVec& b);
QVec to_rational(const ZVec& v);
/// Requires every entry to be an integer.
ZVec to_integral(const QVec& v);

Integer lcm_of_denominators(const QVec& v);
/// Positive rational multiple of v with coprime integer entries. v must be
/// nonzero.
ZVec primitive_integral(const QVec& v);
ZVec primitive_integral(const ZVec& v);

/// Integer floor of sqrt(q) for q >= 0.
Integer floor_sqrt(const Rational& q);

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw InputError("matrix: data size does not match shape");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds a matrix whose rows are the given vectors.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw InputError("matrix: ragged rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product: shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  template <class V>
  std::vector<V> apply(const std::vector<V>& v) const {
    if (v.size() != cols_) throw InputError("matrix-vector product: dimension mismatch");
    std::vector<V> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      V acc = 0;
      for (std::size_t j = 0; j < cols_; ++j) acc += V((*this)(i, j)) * v[j];
      out[i] = acc;
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                        b.data_.end());
  }

  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Integer>;

QMatrix to_rational(const ZMatrix& m);

/// Reduced row echelon form; pivot columns are written to `pivots` if given.
QMatrix rref(QMatrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const QMatrix& m);
std::size_t rank_of_rows(const std::vector<QVec>& rows, std::size_t cols);
/// Basis of {x : m x = 0}, one vector per free column of the RREF.
std::vector<QVec> nullspace(const QMatrix& m);
std::optional<QMatrix> inverse(const QMatrix& m);
Rational determinant(QMatrix m);
/// Unique solution of a x = b for square nonsingular a.
std::optional<QVec> solve(const QMatrix& a, const QVec& b);

}  // namespace kempf
