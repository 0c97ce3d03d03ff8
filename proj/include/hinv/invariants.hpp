#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hinv/lie_algebra.hpp"
#include "hinv/pbw.hpp"
#include "hinv/wedge.hpp"

namespace hinv {

/// Sparse element of g (x) g (x) g.
using Tensor3 = std::map<std::array<std::size_t, 3>, Rational>;

/// Support h of an invariant r together with omega = (r restricted to h)^{-1}.
/// omega is expressed in the RREF basis of `support`.
struct SupportData {
  Subspace support;
  Matrix omega;
};

/// Basis of the ad-invariant elements of the exterior square of the ideal m:
/// { r in wedge^2 m : [x (x) 1 + 1 (x) x, r] = 0 for all x in g }.
/// Returned in reduced row echelon form over the lexicographic pair order.
/// Throws PreconditionError if m is not an ideal.
std::vector<WedgeElement> invariant_wedge2(const LieAlgebra& g, const Subspace& m);
inline std::vector<WedgeElement> invariant_wedge2(const LieAlgebra& g) {
  return invariant_wedge2(g, Subspace::whole(g.dim()));
}

/// [x (x) 1 + 1 (x) x, r] as a coefficient matrix (ad_x R + R ad_x^T).
Matrix invariance_action(const LieAlgebra& g, std::size_t x, const WedgeElement& r);
bool is_invariant(const LieAlgebra& g, const WedgeElement& r);

/// [r12, r13] + [r12, r23] + [r13, r23]
Tensor3 cyb_residual(const LieAlgebra& g, const WedgeElement& r);

/// Span of the components of r (row space of its coefficient matrix).
Subspace support(const WedgeElement& r);
bool components_commute(const LieAlgebra& g, const WedgeElement& r);

/// Lie-level Theta: r -> (support, omega). Requires r invariant.
SupportData theta_lie(const LieAlgebra& g, const WedgeElement& r);
/// Inverse direction (h, omega) -> omega^{-1} re-embedded in wedge^2 g.
WedgeElement theta_lie_inverse(const SupportData& data);

/// omega([x,y],z) + omega([z,x],y) + omega([y,z],x) = 0 on every basis triple of h.
/// Throws PreconditionError if omega has the wrong shape, is not skew or is degenerate,
/// or if h is not a subalgebra.
bool check_symplectic_cocycle(const LieAlgebra& g, const Matrix& omega, const Subspace& h);

bool is_minimal(const WedgeElement& r, const Subspace& ambient);

/// Degree-3 central element for a pair of invariants.
struct CentralElement {
  pbw::Tensor bracket_rs;      ///< [r, s] in U(g) (x) U(g)
  pbw::Tensor z;               ///< mult([r, s]) / 6
  pbw::Tensor z_symmetric;     ///< (1/3) sum c_ijk x_i x_j x_k, symmetrized
  Tensor3 c_tensor;            ///< c_kij with [r,s] = sum c_kij (x_k (x) x_i x_j + x_i x_j (x) x_k), symmetrized
  bool c_symmetric = false;
  bool identity_holds = false;  ///< Delta(z) - z (x) 1 - 1 (x) z == [r, s]
  bool z_central = false;
  bool nested_commute = false;  ///< [r,[r,s]] = [s,[r,s]] = 0
  bool z_routes_agree = false;  ///< z == z_symmetric
};

/// Throws PreconditionError if r or s is not invariant and Error if the extracted
/// c tensor is not totally symmetric.
CentralElement central_element_z(std::shared_ptr<const pbw::Engine> engine, const WedgeElement& r,
                                 const WedgeElement& s);

/// r = r' + r'' for g = g_r (+) g_u with g_r the coordinates outside the unipotent ideal.
struct MixedSplit {
  WedgeElement r_prime;        ///< in g_r (x) z_u
  WedgeElement r_doubleprime;  ///< in (wedge^2 g_u)^{g_u}
};

MixedSplit split_mixed_invariant(const LieAlgebra& g, const WedgeElement& r);

}  // namespace hinv
