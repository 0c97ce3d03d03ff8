#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hinv/rational.hpp"

namespace hinv {

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  /// Stacks the given vectors as rows; every vector must have length `cols`.
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  std::vector<Vector> row_vectors() const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form. Pivots are chosen leftmost column first and, within a
/// column, at the lowest row index holding a nonzero entry. Zero rows are dropped.
struct Echelon {
  Matrix reduced;                    ///< rank x cols, RREF
  std::vector<std::size_t> pivots;   ///< pivot column of each row
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}, returned in reduced row echelon form (one vector per row).
std::vector<Vector> kernel_basis(const Matrix& m);

/// One solution of m x = b (free variables set to zero), or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Exact inverse; throws SingularMatrix, or DimensionMismatch for non-square input.
Matrix invert(const Matrix& m);

}  // namespace hinv
