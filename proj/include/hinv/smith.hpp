#pragma once

#include <cstddef>
#include <vector>

#include "hinv/rational.hpp"

namespace hinv {

/// Dense integer matrix; used for presentation matrices of finitely generated abelian groups.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithForm {
  IntMatrix u;  ///< unimodular, rows x rows
  IntMatrix d;  ///< diagonal, d_i | d_{i+1}, nonnegative
  IntMatrix v;  ///< unimodular, cols x cols

  /// Diagonal entries d_0, d_1, ... (length min(rows, cols)).
  std::vector<Integer> diagonal() const;
};

/// Computes U, D, V with U * m * V = D.
SmithForm smith_normal_form(const IntMatrix& m);

/// Generators of the integer lattice {x : m x = 0}.
std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m);

}  // namespace hinv
