#pragma once

#include <vector>

#include "hinv/lie_algebra.hpp"
#include "hinv/wedge.hpp"

namespace hinv {

/// Reference computation of the ad-invariant part of wedge^2 g: expands
/// [x (x) 1 + 1 (x) x, r] in the full tensor basis x_p (x) x_q, giving an
/// (n * n^2) x C(n, 2) system, and returns its kernel in RREF over pair coordinates.
/// Intended for dim g <= 6.
std::vector<WedgeElement> oracle_invariants(const LieAlgebra& g);

}  // namespace hinv
