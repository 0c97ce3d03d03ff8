#pragma once

#include <string>
#include <vector>

#include "hinv/abelian.hpp"
#include "hinv/invariants.hpp"

namespace hinv {

/// Connected affine algebraic group described by its Lie algebra (with the unipotent
/// ideal marked) and the character lattice of the reductive part of its center.
struct GroupInput {
  LieAlgebra lie;
  FgAbelianGroup z_r_lattice;
  bool connected = true;
};

struct BsetEntry {
  SupportData data;
  bool minimal = false;  ///< support is the whole Lie algebra
};

struct BsetSummaryEntry {
  std::size_t support_dim = 0;
  bool minimal = false;
  friend bool operator==(const BsetSummaryEntry&, const BsetSummaryEntry&) = default;
};

struct ClassificationReport {
  std::size_t kx_rank = 0;
  std::vector<Integer> finite_factors;
  std::size_t additive_dim = 0;
  std::size_t z_r_dim = 0;
  std::size_t z_u_dim = 0;
  std::vector<WedgeElement> mixed_basis;      ///< z_r wedge z_u
  std::vector<WedgeElement> invariant_basis;  ///< (wedge^2 g_u)^G
  std::vector<BsetSummaryEntry> bset_summary;

  bool is_trivial() const { return kx_rank == 0 && finite_factors.empty() && additive_dim == 0; }
  /// "(k^x)^1 x Z/2 x k^3"
  std::string isomorphism_type() const;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Thrown for inputs violating the GroupInput contract.
class ClassificationError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Checks connectedness, the Lie data, that g_u is a nilpotent ideal and that the
/// lattice rank equals dim z_r. Throws ClassificationError.
void check_group_input(const GroupInput& input);

/// Commutative group A = A_r x A_u with character lattice `a_r_lattice`.
ClassificationReport classify_commutative(const FgAbelianGroup& a_r_lattice, std::size_t a_r_dim,
                                          std::size_t a_u_dim);

ClassificationReport classify_connected(const GroupInput& input);

/// Theta of each basis invariant (mixed part first), with its minimality flag.
std::vector<BsetEntry> bset_elements(const GroupInput& input);

}  // namespace hinv
