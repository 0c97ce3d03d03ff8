#include "hinv/twist.hpp"

#include <string>

namespace hinv::pbw {

namespace {

void require_exact(const Tensor& t, int n, const char* what) {
  if (!t.exact_to_degree(n))
    throw PreconditionError(std::string(what) + ": input is not known precisely enough for degree " +
                            std::to_string(n));
}

void require_unit(const Tensor& t, const char* what) {
  if (t.constant_term() != 1) throw PreconditionError(std::string(what) + ": constant term must be 1");
}

}  // namespace

Tensor twist_from_wedge(std::shared_ptr<const Engine> engine, const WedgeElement& r, int bound) {
  return exp_series(Tensor::from_wedge(engine, r) * Rational(1, 2), bound);
}

Tensor twist_from_wedge(std::shared_ptr<const Engine> engine, const WedgeElement& r, const Bounds& bounds) {
  return exp_series(Tensor::from_wedge(engine, r) * Rational(1, 2), bounds);
}

Tensor twist_defect(const Tensor& j, int n) {
  if (j.arity() != 2) throw DimensionMismatch("twist_defect: J must be a 2-tensor");
  require_unit(j, "twist_defect");
  Tensor d0 = coproduct(j, 0), d1 = coproduct(j, 1);
  require_exact(d0, n, "twist_defect");
  require_exact(d1, n, "twist_defect");
  // Only per-factor degree <= n is reported, so every factor can be cut at weight n w_max.
  const Bounds window = degree_window(*j.engine(), n, 3);
  Tensor lhs = d0.restricted(window) * pad(j, 2).restricted(window);
  Tensor rhs = d1.restricted(window) * pad(j, 0).restricted(window);
  return (lhs - rhs).truncated_degree(n);
}

std::vector<Tensor> invariance_defect(const Tensor& j, int n) {
  if (j.arity() != 2) throw DimensionMismatch("invariance_defect: J must be a 2-tensor");
  require_exact(j, n, "invariance_defect");
  const auto& engine = j.engine();
  Tensor jb = j.restricted(degree_window(*engine, n, 2));
  std::vector<Tensor> out;
  for (std::size_t i = 0; i < engine->dim(); ++i)
    out.push_back(commutator(coproduct(Tensor::generator(engine, i)), jb).truncated_degree(n));
  return out;
}

Tensor coboundary(const Tensor& x, int n) {
  if (x.arity() != 1) throw DimensionMismatch("coboundary: x must be an element of U(g)");
  require_unit(x, "coboundary");
  Tensor dx = coproduct(x);
  require_exact(dx, n, "coboundary");
  const Bounds window = degree_window(*x.engine(), n, 2);
  Tensor xi = inverse(x, degree_window(*x.engine(), n, 1));
  return (dx.restricted(window) * outer(xi, xi)).truncated_degree(n);
}

ProductRelation verify_product_relation(std::shared_ptr<const Engine> engine, const WedgeElement& r,
                                        const WedgeElement& s, int n) {
  const LieAlgebra& g = engine->algebra();
  if (!is_invariant(g, r) || !is_invariant(g, s))
    throw PreconditionError("verify_product_relation: r and s must be ad-invariant");
  CentralElement ce = central_element_z(engine, r, s);
  const Bounds bound = degree_window(*engine, n, 2);

  Tensor jr = twist_from_wedge(engine, r, bound);
  Tensor js = twist_from_wedge(engine, s, bound);
  Tensor jrs = twist_from_wedge(engine, r + s, bound);
  Tensor gauge = exp_series(ce.bracket_rs * Rational(1, 8), bound);
  Tensor product_residual = (jr * js - jrs * gauge).truncated_degree(n);

  Tensor x = exp_series(ce.z * Rational(1, 8), degree_window(*engine, n, 1, 2));
  Tensor gauge_residual = (gauge.truncated_degree(n) - coboundary(x, n)).truncated_degree(n);
  return {std::move(product_residual), std::move(gauge_residual), std::move(ce.z)};
}

}  // namespace hinv::pbw
