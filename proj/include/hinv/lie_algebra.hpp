#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hinv/matrix.hpp"

namespace hinv {

/// Sparse structure-constant entry: coefficient of basis element `index`.
struct Term {
  std::size_t index;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};
using SparseVector = std::vector<Term>;

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [x_i, x_j] = sum_k c^k_ij x_k. Immutable after construction.
///
/// Constants are stored as given; antisymmetry and the Jacobi identity are only
/// checked by validate(), so that a single call can report every violation.
class LieAlgebra {
 public:
  /// Zero brackets, basis labels x0..x{n-1} unless names are given.
  explicit LieAlgebra(std::size_t dim, std::vector<std::string> names = {});

  /// `brackets` lists ((i, j), [x_i, x_j]). When antisymmetric_fill is set, the
  /// entry for (j, i) is derived from (i, j) unless it was also given explicitly.
  static LieAlgebra from_brackets(std::size_t dim, std::vector<std::string> names,
                                  const std::vector<std::pair<std::pair<std::size_t, std::size_t>, SparseVector>>& brackets,
                                  bool antisymmetric_fill = true);

  LieAlgebra with_unipotent_ideal(std::vector<std::size_t> indices) const;

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  /// [x_i, x_j] as a sparse vector.
  const SparseVector& structure(std::size_t i, std::size_t j) const { return constants_[i * dim_ + j]; }
  Rational constant(std::size_t i, std::size_t j, std::size_t k) const;

  const std::optional<std::vector<std::size_t>>& unipotent_indices() const { return unipotent_; }

  /// Matrix of ad(x_i): column a holds [x_i, x_a].
  Matrix ad(std::size_t i) const;
  Matrix ad(const Vector& x) const;

  bool is_abelian() const;

  /// Same basis names, structure constants and unipotent ideal.
  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<SparseVector> constants_;
  std::optional<std::vector<std::size_t>> unipotent_;
};

/// Linear subspace of the algebra's coordinate space, stored by its RREF basis,
/// so two subspaces are equal exactly when their stored bases are equal.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning);

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }
  static Subspace whole(std::size_t ambient_dim);
  static Subspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  Subspace operator+(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

struct Violation {
  enum class Kind { antisymmetry, jacobi, ideal } kind;
  std::vector<std::size_t> indices;  ///< (i, j, k) or (i, j, k, l) or (i, u) for ideal failures
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

ValidationReport validate(const LieAlgebra& g);

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y);
Vector basis_vector(std::size_t dim, std::size_t i);

Subspace center(const LieAlgebra& g);

/// span{[x, s] : x in g, s in s}
Subspace bracket_with_algebra(const LieAlgebra& g, const Subspace& s);
/// span{[a, b] : a in s, b in t}
Subspace bracket_span(const LieAlgebra& g, const Subspace& s, const Subspace& t);

struct LowerCentralSeries {
  std::vector<Subspace> terms;     ///< g = terms[0] > [g,g] > ... ending with 0 or a repeat
  std::optional<std::size_t> nilpotency_class;  ///< nullopt: not nilpotent
};

LowerCentralSeries lower_central_series(const LieAlgebra& g);
/// Lower central series of the subalgebra spanned by `s` (assumed closed under bracket).
LowerCentralSeries lower_central_series(const LieAlgebra& g, const Subspace& s);

/// nullopt when `s` is an abelian ideal, otherwise the first failing condition.
std::optional<std::string> abelian_ideal_failure(const LieAlgebra& g, const Subspace& s);
bool is_abelian_ideal(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);
bool is_subalgebra(const LieAlgebra& g, const Subspace& s);

/// Unipotent ideal g_u as a subspace; zero when the algebra carries none.
Subspace unipotent_ideal(const LieAlgebra& g);

/// Fixture algebras used throughout tests and examples.
namespace algebras {
LieAlgebra abelian(std::size_t n);
LieAlgebra heisenberg3();   ///< a, b, c with [a, b] = c
LieAlgebra sl2();           ///< e, h, f with [h, e] = 2e, [h, f] = -2f, [e, f] = h
}  // namespace algebras

}  // namespace hinv
