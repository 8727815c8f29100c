#include "sylrank/matrix.hpp"

#include "cursor.hpp"
#include "sylrank/error.hpp"

namespace sylrank {

void require_same_ring(const Ring& a, const Ring& b, const char* what) {
  if (!(a == b)) throw RingMismatch(std::string(what) + ": ring mismatch " + a.name() + " vs " + b.name());
}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, ring_.zero()) {}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw Error("matrix entry count does not match shape");
}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

Matrix Matrix::from_ints(const Ring& ring, const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(ring, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("ragged integer matrix literal");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = ring.from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::parse(const Ring& ring, std::string_view text, std::optional<std::size_t> expected_cols,
                     std::size_t line, std::size_t column) {
  detail::Cursor cur(text, line, column);
  std::vector<Scalar> entries;
  std::size_t rows = 0;
  std::optional<std::size_t> cols = expected_cols;
  while (!cur.done()) {
    std::size_t in_row = 0;
    while (true) {
      std::size_t at = cur.column();
      std::string_view piece = cur.balanced_until(",;");
      if (piece.find_first_not_of(" \t\r\n") == std::string_view::npos) cur.fail("empty matrix entry");
      entries.push_back(ring.parse(piece, line, at));
      ++in_row;
      if (!cur.accept(',')) break;
    }
    if (cols && *cols != in_row) cur.fail("row has " + std::to_string(in_row) + " entries, expected " + std::to_string(*cols));
    cols = in_row;
    ++rows;
    if (!cur.accept(';')) break;
  }
  cur.expect_end();
  return Matrix(ring, rows, cols.value_or(0), std::move(entries));
}

Matrix Matrix::row(std::size_t i) const {
  std::vector<Scalar> out(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  return Matrix(ring_, 1, cols_, std::move(out));
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
  Matrix out(ring_, indices.size(), cols_);
  for (std::size_t r = 0; r < indices.size(); ++r) {
    for (std::size_t j = 0; j < cols_; ++j) out(r, j) = (*this)(indices[r], j);
  }
  return out;
}

Matrix Matrix::select_cols(std::size_t first, std::size_t count) const {
  Matrix out(ring_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!ring_.is_zero(e)) return false;
  }
  return true;
}

Matrix Matrix::operator+(const Matrix& other) const {
  require_same_ring(ring_, other.ring_, "matrix addition");
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("matrix addition: shape mismatch");
  Matrix out(ring_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = ring_.add(entries_[k], other.entries_[k]);
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const { return *this + other.negated(); }

Matrix Matrix::negated() const {
  Matrix out(ring_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = ring_.neg(entries_[k]);
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out(ring_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = ring_.mul(s, entries_[k]);
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  require_same_ring(ring_, other.ring_, "matrix product");
  if (cols_ != other.rows_) throw Error("matrix product: inner dimensions differ");
  Matrix out(ring_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t l = 0; l < cols_; ++l) {
      const Scalar& a = (*this)(i, l);
      if (ring_.is_zero(a)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Scalar& b = other(l, j);
        if (ring_.is_zero(b)) continue;
        out(i, j) = ring_.add(out(i, j), ring_.mul(a, b));
      }
    }
  }
  return out;
}

bool Matrix::operator==(const Matrix& other) const {
  return ring_ == other.ring_ && rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::string Matrix::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ',';
      out += ring_.format((*this)(i, j));
    }
  }
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  require_same_ring(top.ring(), bottom.ring(), "vstack");
  if (top.cols() != bottom.cols()) throw Error("vstack: column counts differ");
  std::vector<Scalar> entries = top.entries();
  entries.insert(entries.end(), bottom.entries().begin(), bottom.entries().end());
  return Matrix(top.ring(), top.rows() + bottom.rows(), top.cols(), std::move(entries));
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  require_same_ring(left.ring(), right.ring(), "hstack");
  if (left.rows() != right.rows()) throw Error("hstack: row counts differ");
  Matrix out(left.ring(), left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) out(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) out(i, left.cols() + j) = right(i, j);
  }
  return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  return block_upper(a, Matrix(a.ring(), a.rows(), b.cols()), b);
}

Matrix block_upper(const Matrix& a, const Matrix& c, const Matrix& b) {
  require_same_ring(a.ring(), b.ring(), "block matrix");
  require_same_ring(a.ring(), c.ring(), "block matrix");
  if (c.rows() != a.rows() || c.cols() != b.cols()) throw Error("block matrix: corner block has wrong shape");
  return vstack(hstack(a, c), hstack(Matrix(a.ring(), b.rows(), a.cols()), b));
}

}  // namespace sylrank
