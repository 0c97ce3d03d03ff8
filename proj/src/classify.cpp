#include "hinv/classify.hpp"

namespace hinv {

namespace {

struct CenterSplit {
  Subspace z_u;
  std::vector<Vector> z_r;  // complement of z_u inside the center
};

CenterSplit split_center(const LieAlgebra& g) {
  Subspace z = center(g);
  CenterSplit out{z.intersect(unipotent_ideal(g)), {}};
  Subspace acc = out.z_u;
  for (const auto& v : z.basis()) {
    if (acc.contains(v)) continue;
    out.z_r.push_back(v);
    acc = acc + Subspace(g.dim(), {v});
  }
  return out;
}

void fill_torus_part(ClassificationReport& report, const FgAbelianGroup& lattice) {
  KxDescription kx = hom_to_kx(wedge_square(lattice));
  report.kx_rank = kx.kx_rank;
  report.finite_factors = std::move(kx.finite_factors);
}

}  // namespace

std::string ClassificationReport::isomorphism_type() const {
  std::string out = "(k^x)^" + std::to_string(kx_rank);
  for (const auto& d : finite_factors) out += " x Z/" + d.get_str();
  if (additive_dim > 0) out += " x k^" + std::to_string(additive_dim);
  return out;
}

void check_group_input(const GroupInput& input) {
  if (!input.connected) throw ClassificationError("only connected groups are supported");
  const LieAlgebra& g = input.lie;
  ValidationReport v = validate(g);
  if (!v.valid()) throw ClassificationError("invalid Lie algebra: " + v.violations.front().message);
  Subspace gu = unipotent_ideal(g);
  if (!is_ideal(g, gu)) throw ClassificationError("unipotent part is not an ideal");
  if (!lower_central_series(g, gu).nilpotency_class) throw ClassificationError("unipotent part is not nilpotent");
  std::size_t z_r_dim = split_center(g).z_r.size();
  if (input.z_r_lattice.free_rank != z_r_dim)
    throw ClassificationError("lattice rank " + std::to_string(input.z_r_lattice.free_rank) +
                              " does not match dim z_r = " + std::to_string(z_r_dim));
}

ClassificationReport classify_commutative(const FgAbelianGroup& a_r_lattice, std::size_t a_r_dim,
                                          std::size_t a_u_dim) {
  if (a_r_lattice.free_rank != a_r_dim)
    throw ClassificationError("lattice rank " + std::to_string(a_r_lattice.free_rank) + " does not match dim a_r = " +
                              std::to_string(a_r_dim));
  ClassificationReport report;
  fill_torus_part(report, a_r_lattice);
  report.z_r_dim = a_r_dim;
  report.z_u_dim = a_u_dim;
  report.additive_dim = a_r_dim * a_u_dim + a_u_dim * (a_u_dim - (a_u_dim ? 1 : 0)) / 2;

  // Coordinates: a_r first, then a_u.
  const std::size_t n = a_r_dim + a_u_dim;
  for (std::size_t i = 0; i < a_r_dim; ++i)
    for (std::size_t j = a_r_dim; j < n; ++j) report.mixed_basis.push_back(WedgeElement::single(n, i, j));
  for (std::size_t i = a_r_dim; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) report.invariant_basis.push_back(WedgeElement::single(n, i, j));
  for (std::size_t k = 0; k < report.mixed_basis.size() + report.invariant_basis.size(); ++k)
    report.bset_summary.push_back({2, n == 2});
  return report;
}

std::vector<BsetEntry> bset_elements(const GroupInput& input) {
  check_group_input(input);
  const LieAlgebra& g = input.lie;
  CenterSplit split = split_center(g);
  std::vector<BsetEntry> out;
  auto add = [&](const WedgeElement& r) {
    out.push_back({theta_lie(g, r), is_minimal(r, Subspace::whole(g.dim()))});
  };
  for (const auto& t : split.z_r)
    for (const auto& c : split.z_u.basis()) add(WedgeElement::wedge(t, c));
  for (const auto& r : invariant_wedge2(g, unipotent_ideal(g))) add(r);
  return out;
}

ClassificationReport classify_connected(const GroupInput& input) {
  check_group_input(input);
  const LieAlgebra& g = input.lie;
  CenterSplit split = split_center(g);

  ClassificationReport report;
  fill_torus_part(report, input.z_r_lattice);
  report.z_r_dim = split.z_r.size();
  report.z_u_dim = split.z_u.dim();
  for (const auto& t : split.z_r)
    for (const auto& c : split.z_u.basis()) report.mixed_basis.push_back(WedgeElement::wedge(t, c));
  report.invariant_basis = invariant_wedge2(g, unipotent_ideal(g));
  report.additive_dim = report.mixed_basis.size() + report.invariant_basis.size();
  if (report.additive_dim != report.z_r_dim * report.z_u_dim + report.invariant_basis.size())
    throw Error("classify_connected: mixed basis has the wrong size");

  const Subspace whole = Subspace::whole(g.dim());
  for (const auto* part : {&report.mixed_basis, &report.invariant_basis})
    for (const auto& r : *part) report.bset_summary.push_back({theta_lie(g, r).support.dim(), is_minimal(r, whole)});
  return report;
}

}  // namespace hinv
