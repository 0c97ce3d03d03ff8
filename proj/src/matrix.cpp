#include "hinv/matrix.hpp"

#include <string>

namespace hinv {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (a(i, k) != 0 && v[k] != 0) out[i] += a(i, k) * v[k];
  return out;
}

namespace {

// In-place Gauss-Jordan on the first `pivot_cols` columns; returns pivot columns.
std::vector<std::size_t> gauss_jordan(Matrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (m(row, c) != 0) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Echelon rref(const Matrix& m) {
  Matrix work = m;
  auto pivots = gauss_jordan(work, work.cols());
  Matrix reduced(pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) reduced(r, c) = work(r, c);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> raw;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    raw.push_back(std::move(v));
  }
  if (raw.empty()) return raw;
  return rref(Matrix::from_rows(raw, n)).reduced.row_vectors();
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length differs from row count");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto pivots = gauss_jordan(aug, m.cols());
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (aug(r, m.cols()) != 0) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("invert: matrix is not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = gauss_jordan(aug, n);
  if (pivots.size() != n) throw SingularMatrix("invert: matrix is singular (rank " + std::to_string(pivots.size()) + ")");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

}  // namespace hinv
