#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "hinv/matrix.hpp"

namespace hinv {

/// Element r = sum_{i<j} r^{ij} x_i ^ x_j of the exterior square, with
/// x ^ y := x (x) y - y (x) x. Stored as the skew tensor coefficient matrix R,
/// so that r = sum_{a,b} R_ab x_a (x) x_b and R_ij = r^{ij} for i < j.
class WedgeElement {
 public:
  WedgeElement() = default;
  explicit WedgeElement(std::size_t dim) : coeffs_(dim, dim) {}

  /// Throws PreconditionError unless m is square and skew-symmetric.
  static WedgeElement from_matrix(Matrix m);
  static WedgeElement from_pairs(std::size_t dim, const std::map<std::pair<std::size_t, std::size_t>, Rational>& terms);
  /// x_i ^ x_j
  static WedgeElement single(std::size_t dim, std::size_t i, std::size_t j);
  /// Inverse of pair_coordinates().
  static WedgeElement from_pair_coordinates(std::size_t dim, const Vector& coords);
  /// u ^ v for arbitrary vectors.
  static WedgeElement wedge(const Vector& u, const Vector& v);

  std::size_t dim() const { return coeffs_.rows(); }
  const Matrix& coeffs() const { return coeffs_; }
  /// r^{ij} for i < j.
  Rational coefficient(std::size_t i, std::size_t j) const { return coeffs_(i, j); }
  bool is_zero() const { return coeffs_.is_zero(); }

  /// Coordinates over the pairs (0,1), (0,2), ..., (n-2,n-1).
  Vector pair_coordinates() const;
  std::map<std::pair<std::size_t, std::size_t>, Rational> pairs() const;

  WedgeElement& operator+=(const WedgeElement& o);
  WedgeElement& operator-=(const WedgeElement& o);
  WedgeElement& operator*=(const Rational& s);
  friend WedgeElement operator+(WedgeElement a, const WedgeElement& b) { return a += b; }
  friend WedgeElement operator-(WedgeElement a, const WedgeElement& b) { return a -= b; }
  friend WedgeElement operator*(WedgeElement a, const Rational& s) { return a *= s; }
  friend bool operator==(const WedgeElement&, const WedgeElement&) = default;

 private:
  Matrix coeffs_;
};

/// Index of pair (i, j), i < j, in the lexicographic pair order for dimension n.
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);
std::size_t pair_count(std::size_t n);

}  // namespace hinv
