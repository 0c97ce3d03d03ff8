#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hinv/smith.hpp"

namespace hinv {

/// Z^free_rank (+) Z/d_0 (+) Z/d_1 (+) ... with d_0 | d_1 | ..., every d_i >= 2.
/// Generators are ordered free ones first, then one per invariant factor.
struct FgAbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> invariant_factors;

  /// Normalizes arbitrary cyclic orders (0 meaning Z, 1 meaning trivial) into canonical form.
  static FgAbelianGroup from_orders(const std::vector<Integer>& orders);
  /// Z^generators modulo the row span of `relations`.
  static FgAbelianGroup from_presentation(const IntMatrix& relations, std::size_t generators);

  std::size_t generator_count() const { return free_rank + invariant_factors.size(); }
  /// Order of generator i, 0 for free generators.
  Integer order(std::size_t i) const;
  bool is_trivial() const { return generator_count() == 0; }
  /// Rows d_i e_i for the torsion generators.
  IntMatrix relations() const;

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;
};

/// "Z^2 x Z/2 x Z/6", "0" for the trivial group.
std::string to_string(const FgAbelianGroup& a);

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);
FgAbelianGroup tensor_product(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Exterior square, computed from the presentation with generators e_i ^ e_j (i < j).
FgAbelianGroup wedge_square(const FgAbelianGroup& a);

/// Isomorphism type of Hom(A, k^x) for k algebraically closed of characteristic 0.
struct KxDescription {
  std::size_t kx_rank = 0;
  std::vector<Integer> finite_factors;
  friend bool operator==(const KxDescription&, const KxDescription&) = default;
};
KxDescription hom_to_kx(const FgAbelianGroup& a);

/// Element of k^x written additively: a root of unity exp(2 pi i torsion) times
/// q_1^free[0] ... q_t^free[t-1] for formal, multiplicatively independent q's.
class Value {
 public:
  Value() = default;
  Value(Rational torsion, std::vector<Integer> free = {});

  static Value root_of_unity(const Rational& t) { return Value(t); }
  static Value q_power(std::size_t index, const Integer& exponent);

  const Rational& torsion() const { return torsion_; }
  /// Exponent of q_index; zero beyond the stored length.
  Integer free(std::size_t index) const;
  std::size_t free_length() const { return free_.size(); }
  bool is_zero() const;

  friend Value operator+(const Value& a, const Value& b);
  friend Value operator-(const Value& a);
  friend Value operator-(const Value& a, const Value& b) { return a + (-b); }
  friend Value operator*(const Integer& k, const Value& a);
  friend bool operator==(const Value& a, const Value& b);

 private:
  void normalize();
  Rational torsion_;  ///< in [0, 1)
  std::vector<Integer> free_;  ///< trailing zeros stripped
};

std::string to_string(const Value& v);

/// Alternating bicharacter on a canonical FgAbelianGroup, given on generators.
class AlternatingBicharacter {
 public:
  /// Throws PreconditionError unless the matrix is square of the right size, has
  /// zero diagonal, is skew and kills d_i e_i in both arguments.
  AlternatingBicharacter(FgAbelianGroup domain, std::vector<std::vector<Value>> values);

  static AlternatingBicharacter zero(const FgAbelianGroup& domain);

  const FgAbelianGroup& domain() const { return domain_; }
  const Value& operator()(std::size_t i, std::size_t j) const { return values_[i][j]; }
  const std::vector<std::vector<Value>>& values() const { return values_; }

  /// B'(e_i, e_j) = B(P e_i, P e_j) where column j of p holds the image of e_j.
  /// Throws PreconditionError unless p maps every relation into the relation lattice.
  AlternatingBicharacter pullback(const IntMatrix& p) const;

 private:
  FgAbelianGroup domain_;
  std::vector<std::vector<Value>> values_;
};

/// True iff a -> B(a, -) is injective.
bool is_nondegenerate(const AlternatingBicharacter& b);

}  // namespace hinv
