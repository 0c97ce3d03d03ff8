#include "hinv/wedge.hpp"

namespace hinv {

std::size_t pair_count(std::size_t n) { return n * (n - (n ? 1 : 0)) / 2; }

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  // pairs (0,1..n-1), then (1,2..n-1), ...
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

WedgeElement WedgeElement::from_matrix(Matrix m) {
  if (m.rows() != m.cols()) throw PreconditionError("wedge coefficient matrix must be square");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) throw PreconditionError("wedge coefficient matrix must be skew-symmetric");
  WedgeElement w;
  w.coeffs_ = std::move(m);
  return w;
}

WedgeElement WedgeElement::from_pairs(std::size_t dim,
                                      const std::map<std::pair<std::size_t, std::size_t>, Rational>& terms) {
  WedgeElement w(dim);
  for (const auto& [ij, c] : terms) {
    auto [i, j] = ij;
    if (i >= dim || j >= dim) throw DimensionMismatch("wedge term index out of range");
    if (i == j) throw PreconditionError("wedge term x_i ^ x_i is not allowed");
    // x_j ^ x_i = -x_i ^ x_j
    w.coeffs_(i, j) += c;
    w.coeffs_(j, i) -= c;
  }
  return w;
}

WedgeElement WedgeElement::single(std::size_t dim, std::size_t i, std::size_t j) {
  return from_pairs(dim, {{{i, j}, Rational(1)}});
}

WedgeElement WedgeElement::from_pair_coordinates(std::size_t dim, const Vector& coords) {
  if (coords.size() != pair_count(dim)) throw DimensionMismatch("pair coordinate vector has wrong length");
  WedgeElement w(dim);
  std::size_t p = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j, ++p) {
      w.coeffs_(i, j) = coords[p];
      w.coeffs_(j, i) = -coords[p];
    }
  return w;
}

WedgeElement WedgeElement::wedge(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw DimensionMismatch("wedge of vectors of different length");
  WedgeElement w(u.size());
  for (std::size_t a = 0; a < u.size(); ++a)
    for (std::size_t b = 0; b < v.size(); ++b) w.coeffs_(a, b) = u[a] * v[b] - v[a] * u[b];
  return w;
}

Vector WedgeElement::pair_coordinates() const {
  Vector out;
  out.reserve(pair_count(dim()));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j) out.push_back(coeffs_(i, j));
  return out;
}

std::map<std::pair<std::size_t, std::size_t>, Rational> WedgeElement::pairs() const {
  std::map<std::pair<std::size_t, std::size_t>, Rational> out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (coeffs_(i, j) != 0) out[{i, j}] = coeffs_(i, j);
  return out;
}

WedgeElement& WedgeElement::operator+=(const WedgeElement& o) {
  coeffs_ += o.coeffs_;
  return *this;
}
WedgeElement& WedgeElement::operator-=(const WedgeElement& o) {
  coeffs_ -= o.coeffs_;
  return *this;
}
WedgeElement& WedgeElement::operator*=(const Rational& s) {
  coeffs_ *= s;
  return *this;
}

}  // namespace hinv
