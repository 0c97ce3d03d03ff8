#pragma once

#include <memory>
#include <vector>

#include "hinv/invariants.hpp"
#include "hinv/pbw.hpp"

namespace hinv::pbw {

/// J_r = exp(r / 2), exact modulo total weight > bound.
Tensor twist_from_wedge(std::shared_ptr<const Engine> engine, const WedgeElement& r, int bound);
/// J_r modulo `bounds`. degree_window(e, n, 2, 2) is the cheapest input to twist_defect at degree n.
Tensor twist_from_wedge(std::shared_ptr<const Engine> engine, const WedgeElement& r, const Bounds& bounds);

/// (Delta (x) id)(J) (J (x) 1) - (id (x) Delta)(J) (1 (x) J), reported up to per-factor
/// degree n. J must have constant term 1 and stay exact to degree n after a coproduct
/// (total weight 3 n w_max, or 2 n w_max per factor).
Tensor twist_defect(const Tensor& j, int n);

/// [Delta(x_i), J] for each generator, up to per-factor degree n.
std::vector<Tensor> invariance_defect(const Tensor& j, int n);

/// Delta(x) (x^{-1} (x) x^{-1}) up to per-factor degree n. x must have constant term 1.
Tensor coboundary(const Tensor& x, int n);

struct ProductRelation {
  Tensor product_residual;  ///< J_r J_s - J_{r+s} exp([r,s]/8)
  Tensor gauge_residual;    ///< exp([r,s]/8) - coboundary(exp(z/8))
  Tensor z;
  bool holds() const { return product_residual.is_zero() && gauge_residual.is_zero(); }
};

ProductRelation verify_product_relation(std::shared_ptr<const Engine> engine, const WedgeElement& r,
                                        const WedgeElement& s, int n);

}  // namespace hinv::pbw
