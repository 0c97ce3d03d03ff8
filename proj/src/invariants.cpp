#include "hinv/invariants.hpp"

#include <algorithm>

namespace hinv {

namespace {

struct Entry {
  std::size_t a, b;
  Rational value;
};

std::vector<Entry> nonzero_entries(const Matrix& m) {
  std::vector<Entry> out;
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = 0; b < m.cols(); ++b)
      if (m(a, b) != 0) out.push_back({a, b, m(a, b)});
  return out;
}

void require_dim(const LieAlgebra& g, const WedgeElement& r) {
  if (r.dim() != g.dim()) throw DimensionMismatch("wedge element dimension differs from the algebra");
}

void accumulate(Tensor3& t, std::array<std::size_t, 3> idx, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

}  // namespace

Matrix invariance_action(const LieAlgebra& g, std::size_t x, const WedgeElement& r) {
  require_dim(g, r);
  Matrix a = g.ad(x);
  return a * r.coeffs() + r.coeffs() * a.transpose();
}

bool is_invariant(const LieAlgebra& g, const WedgeElement& r) {
  for (std::size_t x = 0; x < g.dim(); ++x)
    if (!invariance_action(g, x, r).is_zero()) return false;
  return true;
}

std::vector<WedgeElement> invariant_wedge2(const LieAlgebra& g, const Subspace& m) {
  const std::size_t n = g.dim();
  if (m.ambient_dim() != n) throw DimensionMismatch("subspace lives in a different ambient dimension");
  if (!is_ideal(g, m)) throw PreconditionError("invariant_wedge2: the subspace is not an ideal");
  const auto& v = m.basis();
  const std::size_t d = v.size();

  // One unknown per pair p < q of ideal basis vectors: r = sum rho_pq v_p ^ v_q.
  std::vector<WedgeElement> unknowns;
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = p + 1; q < d; ++q) unknowns.push_back(WedgeElement::wedge(v[p], v[q]));
  if (unknowns.empty()) return {};

  // Invariance rows: entries (k, l), k < l, of ad_x R + R ad_x^T for every basis x.
  std::vector<Vector> rows;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Matrix> images;
    for (const auto& u : unknowns) images.push_back(invariance_action(g, x, u));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = k + 1; l < n; ++l) {
        Vector row(unknowns.size());
        bool any = false;
        for (std::size_t c = 0; c < unknowns.size(); ++c) {
          row[c] = images[c](k, l);
          any |= row[c] != 0;
        }
        if (any) rows.push_back(std::move(row));
      }
  }
  std::vector<Vector> solutions;
  if (rows.empty()) {
    for (std::size_t c = 0; c < unknowns.size(); ++c) solutions.push_back(basis_vector(unknowns.size(), c));
  } else {
    solutions = kernel_basis(Matrix::from_rows(rows, unknowns.size()));
  }
  if (solutions.empty()) return {};

  std::vector<Vector> coords;
  for (const auto& sol : solutions) {
    WedgeElement r(n);
    for (std::size_t c = 0; c < unknowns.size(); ++c)
      if (sol[c] != 0) r += unknowns[c] * sol[c];
    coords.push_back(r.pair_coordinates());
  }
  std::vector<WedgeElement> out;
  for (const auto& row : rref(Matrix::from_rows(coords, pair_count(n))).reduced.row_vectors())
    out.push_back(WedgeElement::from_pair_coordinates(n, row));
  return out;
}

Tensor3 cyb_residual(const LieAlgebra& g, const WedgeElement& r) {
  require_dim(g, r);
  Tensor3 out;
  auto entries = nonzero_entries(r.coeffs());
  for (const auto& ab : entries)
    for (const auto& cd : entries) {
      Rational w = ab.value * cd.value;
      // [r12, r13] = sum [x_a, x_c] (x) x_b (x) x_d
      for (const auto& t : g.structure(ab.a, cd.a)) accumulate(out, {t.index, ab.b, cd.b}, w * t.coeff);
      // [r12, r23] = sum x_a (x) [x_b, x_c] (x) x_d
      for (const auto& t : g.structure(ab.b, cd.a)) accumulate(out, {ab.a, t.index, cd.b}, w * t.coeff);
      // [r13, r23] = sum x_a (x) x_c (x) [x_b, x_d]
      for (const auto& t : g.structure(ab.b, cd.b)) accumulate(out, {ab.a, cd.a, t.index}, w * t.coeff);
    }
  return out;
}

Subspace support(const WedgeElement& r) { return Subspace(r.dim(), r.coeffs().row_vectors()); }

bool components_commute(const LieAlgebra& g, const WedgeElement& r) {
  require_dim(g, r);
  Subspace h = support(r);
  for (std::size_t a = 0; a < h.dim(); ++a)
    for (std::size_t b = a + 1; b < h.dim(); ++b)
      if (!is_zero(bracket(g, h.basis()[a], h.basis()[b]))) return false;
  return true;
}

SupportData theta_lie(const LieAlgebra& g, const WedgeElement& r) {
  require_dim(g, r);
  if (!is_invariant(g, r)) throw PreconditionError("theta_lie: r is not ad-invariant");
  Subspace h = support(r);
  if (auto failure = abelian_ideal_failure(g, h))
    throw Error("theta_lie: support of an invariant element is not an abelian ideal (" + *failure + ")");
  // With V in RREF, R = V^T P V and P is R restricted to the pivot columns.
  const auto& piv = h.pivots();
  Matrix p(piv.size(), piv.size());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < piv.size(); ++j) p(i, j) = r.coeffs()(piv[i], piv[j]);
  return {std::move(h), invert(p)};
}

WedgeElement theta_lie_inverse(const SupportData& data) {
  const std::size_t n = data.support.ambient_dim();
  if (data.support.dim() == 0) return WedgeElement(n);
  Matrix p = invert(data.omega);
  Matrix v = Matrix::from_rows(data.support.basis(), n);
  return WedgeElement::from_matrix(v.transpose() * p * v);
}

bool check_symplectic_cocycle(const LieAlgebra& g, const Matrix& omega, const Subspace& h) {
  const std::size_t d = h.dim();
  if (h.ambient_dim() != g.dim()) throw DimensionMismatch("subspace lives in a different ambient dimension");
  if (omega.rows() != d || omega.cols() != d)
    throw PreconditionError("symplectic form has the wrong shape for the subspace");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (omega(i, j) != -omega(j, i)) throw PreconditionError("symplectic form is not skew-symmetric");
  if (rank(omega) != d) throw PreconditionError("symplectic form is degenerate");
  if (!is_subalgebra(g, h)) throw PreconditionError("support is not a subalgebra");

  const auto& basis = h.basis();
  const auto& piv = h.pivots();
  auto coords = [&](const Vector& v) {
    Vector c(d);
    for (std::size_t i = 0; i < d; ++i) c[i] = v[piv[i]];
    return c;
  };
  auto form = [&](const Vector& u, std::size_t w) {
    Rational s = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (u[i] != 0) s += u[i] * omega(i, w);
    return s;
  };
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        Rational total = form(coords(bracket(g, basis[x], basis[y])), z) +
                         form(coords(bracket(g, basis[z], basis[x])), y) +
                         form(coords(bracket(g, basis[y], basis[z])), x);
        if (total != 0) return false;
      }
  return true;
}

bool is_minimal(const WedgeElement& r, const Subspace& ambient) { return support(r) == ambient; }

CentralElement central_element_z(std::shared_ptr<const pbw::Engine> engine, const WedgeElement& r,
                                 const WedgeElement& s) {
  using pbw::Tensor;
  const LieAlgebra& g = engine->algebra();
  require_dim(g, r);
  require_dim(g, s);
  if (!is_invariant(g, r)) throw PreconditionError("central_element_z: r is not ad-invariant");
  if (!is_invariant(g, s)) throw PreconditionError("central_element_z: s is not ad-invariant");
  const std::size_t n = g.dim();

  Tensor rt = Tensor::from_wedge(engine, r), st = Tensor::from_wedge(engine, s);
  Tensor brs = pbw::commutator(rt, st);
  Tensor z = pbw::multiply_components(brs) * Rational(1, 6);

  // Lie-level extraction: [r,s] = sum R_ab S_cd ([x_a,x_c] (x) x_b x_d + x_c x_a (x) [x_b,x_d]),
  // read through the symmetrization map.
  Tensor3 first, second;
  auto re = nonzero_entries(r.coeffs()), se = nonzero_entries(s.coeffs());
  for (const auto& ab : re)
    for (const auto& cd : se) {
      Rational w = ab.value * cd.value / 2;
      for (const auto& t : g.structure(ab.a, cd.a)) {
        accumulate(first, {t.index, ab.b, cd.b}, w * t.coeff);
        accumulate(first, {t.index, cd.b, ab.b}, w * t.coeff);
      }
      for (const auto& t : g.structure(ab.b, cd.b)) {
        accumulate(second, {cd.a, ab.a, t.index}, w * t.coeff);
        accumulate(second, {ab.a, cd.a, t.index}, w * t.coeff);
      }
    }
  auto at = [](const Tensor3& t, std::size_t i, std::size_t j, std::size_t k) {
    auto it = t.find({i, j, k});
    return it == t.end() ? Rational(0) : it->second;
  };
  bool symmetric = true;
  for (const auto& [idx, c] : first) {
    auto [k, i, j] = idx;
    symmetric = symmetric && at(first, i, k, j) == c && at(first, j, i, k) == c && at(second, i, j, k) == c;
  }
  for (const auto& [idx, c] : second) symmetric = symmetric && at(first, idx[2], idx[0], idx[1]) == c;
  if (!symmetric)
    throw Error("central_element_z: extracted c tensor is not totally symmetric (inputs are invariant, so this is an internal inconsistency)");

  Tensor z_sym(engine, 1);
  for (const auto& [idx, c] : first) {
    std::array<std::size_t, 3> word = idx;
    for (const auto& [m, d] : engine->normal_order(word)) z_sym.add_term(m, c * d / 3);
  }

  Tensor one = Tensor::one(engine, 1);
  Tensor defect = pbw::coproduct(z) - pbw::outer(z, one) - pbw::outer(one, z) - brs;

  bool central = true;
  for (std::size_t i = 0; i < n && central; ++i) central = pbw::commutator(Tensor::generator(engine, i), z).is_zero();

  CentralElement out{brs, z, z_sym, first};
  out.c_symmetric = symmetric;
  out.identity_holds = defect.is_zero();
  out.z_central = central;
  out.nested_commute = pbw::commutator(rt, brs).is_zero() && pbw::commutator(st, brs).is_zero();
  out.z_routes_agree = z == z_sym;
  return out;
}

MixedSplit split_mixed_invariant(const LieAlgebra& g, const WedgeElement& r) {
  require_dim(g, r);
  if (!g.unipotent_indices()) throw PreconditionError("split_mixed_invariant: algebra has no unipotent ideal marked");
  const std::size_t n = g.dim();
  std::vector<bool> unip(n, false);
  for (auto i : *g.unipotent_indices()) unip[i] = true;

  Subspace z = center(g);
  for (std::size_t i = 0; i < n; ++i)
    if (!unip[i] && !z.contains(basis_vector(n, i)))
      throw PreconditionError("split_mixed_invariant: reductive summand is not central");
  if (!is_ideal(g, unipotent_ideal(g))) throw PreconditionError("split_mixed_invariant: unipotent part is not an ideal");
  if (!is_invariant(g, r)) throw PreconditionError("split_mixed_invariant: r is not ad-invariant");

  MixedSplit out{WedgeElement(n), WedgeElement(n)};
  std::map<std::pair<std::size_t, std::size_t>, Rational> mixed, pure;
  for (const auto& [ij, c] : r.pairs()) {
    auto [i, j] = ij;
    if (!unip[i] && !unip[j]) throw PreconditionError("split_mixed_invariant: r has a component in wedge^2 g_r");
    (unip[i] && unip[j] ? pure : mixed)[ij] = c;
  }
  out.r_prime = WedgeElement::from_pairs(n, mixed);
  out.r_doubleprime = WedgeElement::from_pairs(n, pure);

  Subspace z_u = z.intersect(unipotent_ideal(g));
  for (std::size_t a = 0; a < n; ++a)
    if (!unip[a] && !z_u.contains(out.r_prime.coeffs().row(a)))
      throw Error("split_mixed_invariant: r' leaves g_r (x) z_u");
  if (!is_invariant(g, out.r_doubleprime)) throw Error("split_mixed_invariant: r'' is not invariant");
  return out;
}

}  // namespace hinv
