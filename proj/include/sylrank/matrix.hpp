#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sylrank/ring.hpp"

namespace sylrank {

/// Dense rectangular matrix over a Ring, row-major. Row-vector convention:
/// the matrix A acts on the right, x -> xA.
class Matrix {
 public:
  /// rows x cols zero matrix.
  Matrix(Ring ring, std::size_t rows, std::size_t cols);
  Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(const Ring& ring, std::size_t n);
  static Matrix from_ints(const Ring& ring, const std::vector<std::vector<long>>& rows);
  /// Rows separated by ';', entries by ','. An empty string is a 0 x expected_cols matrix.
  static Matrix parse(const Ring& ring, std::string_view text, std::optional<std::size_t> expected_cols = {},
                      std::size_t line = 1, std::size_t column = 1);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const std::vector<Scalar>& entries() const { return entries_; }

  Matrix row(std::size_t i) const;
  Matrix select_rows(std::span<const std::size_t> indices) const;
  Matrix select_cols(std::size_t first, std::size_t count) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Matrix& other) const;
  Matrix negated() const;
  /// Left multiplication of every entry by a scalar.
  Matrix scaled(const Scalar& s) const;
  bool operator==(const Matrix& other) const;

  std::string to_text() const;

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// [top; bottom]; column counts must agree.
Matrix vstack(const Matrix& top, const Matrix& bottom);
/// [left, right]; row counts must agree.
Matrix hstack(const Matrix& left, const Matrix& right);
/// [a 0; 0 b].
Matrix block_diag(const Matrix& a, const Matrix& b);
/// [a c; 0 b] with c of shape a.rows x b.cols.
Matrix block_upper(const Matrix& a, const Matrix& c, const Matrix& b);

void require_same_ring(const Ring& a, const Ring& b, const char* what);

}  // namespace sylrank
