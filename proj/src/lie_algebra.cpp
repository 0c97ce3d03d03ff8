#include "hinv/lie_algebra.hpp"

#include <algorithm>
#include <set>

namespace hinv {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> names)
    : dim_(dim), names_(std::move(names)), constants_(dim * dim) {
  if (names_.empty())
    for (std::size_t i = 0; i < dim; ++i) names_.push_back("x" + std::to_string(i));
  if (names_.size() != dim) throw DimensionMismatch("basis name count differs from dimension");
}

LieAlgebra LieAlgebra::from_brackets(
    std::size_t dim, std::vector<std::string> names,
    const std::vector<std::pair<std::pair<std::size_t, std::size_t>, SparseVector>>& brackets,
    bool antisymmetric_fill) {
  LieAlgebra g(dim, std::move(names));
  std::set<std::pair<std::size_t, std::size_t>> given;
  auto normalize = [&](SparseVector v) {
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    SparseVector out;
    for (auto& t : v) {
      if (t.index >= dim) throw DimensionMismatch("structure constant index out of range");
      if (!out.empty() && out.back().index == t.index)
        out.back().coeff += t.coeff;
      else
        out.push_back(t);
    }
    std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
    return out;
  };
  for (const auto& [ij, v] : brackets) {
    auto [i, j] = ij;
    if (i >= dim || j >= dim) throw DimensionMismatch("bracket index out of range");
    g.constants_[i * dim + j] = normalize(v);
    given.insert(ij);
  }
  if (antisymmetric_fill)
    for (const auto& [ij, v] : brackets) {
      auto [i, j] = ij;
      if (given.count({j, i})) continue;
      SparseVector neg = g.constants_[i * dim + j];
      for (auto& t : neg) t.coeff = -t.coeff;
      g.constants_[j * dim + i] = std::move(neg);
    }
  return g;
}

LieAlgebra LieAlgebra::with_unipotent_ideal(std::vector<std::size_t> indices) const {
  for (auto i : indices)
    if (i >= dim_) throw DimensionMismatch("unipotent ideal index out of range");
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  LieAlgebra g = *this;
  g.unipotent_ = std::move(indices);
  return g;
}

Rational LieAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& t : structure(i, j))
    if (t.index == k) return t.coeff;
  return 0;
}

Matrix LieAlgebra::ad(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t a = 0; a < dim_; ++a)
    for (const auto& t : structure(i, a)) m(t.index, a) = t.coeff;
  return m;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  if (x.size() != dim_) throw DimensionMismatch("ad: vector length differs from dimension");
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (x[i] != 0) m += ad(i) * x[i];
  return m;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(constants_.begin(), constants_.end(), [](const SparseVector& v) { return v.empty(); });
}

// ---------------------------------------------------------------------------

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning) : ambient_(ambient_dim) {
  if (spanning.empty()) return;
  Echelon e = rref(Matrix::from_rows(spanning, ambient_dim));
  basis_ = e.reduced.row_vectors();
  pivots_ = std::move(e.pivots);
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < ambient_dim; ++i) rows.push_back(basis_vector(ambient_dim, i));
  return Subspace(ambient_dim, rows);
}

Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices) {
  std::vector<Vector> rows;
  for (auto i : indices) rows.push_back(basis_vector(ambient_dim, i));
  return Subspace(ambient_dim, rows);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("subspace membership: vector length mismatch");
  // Reduce against the RREF basis; v is inside iff the remainder vanishes.
  Vector r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    Rational f = r[pivots_[k]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (basis_[k][c] != 0) r[c] -= f * basis_[k][c];
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& v) { return contains(v); });
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspace intersection: ambient mismatch");
  if (basis_.empty() || other.basis_.empty()) return zero(ambient_);
  // Solve sum a_i u_i = sum b_j w_j; the a-part of each kernel vector gives an element.
  const std::size_t p = basis_.size(), q = other.basis_.size();
  Matrix m(ambient_, p + q);
  for (std::size_t c = 0; c < ambient_; ++c) {
    for (std::size_t i = 0; i < p; ++i) m(c, i) = basis_[i][c];
    for (std::size_t j = 0; j < q; ++j) m(c, p + j) = -other.basis_[j][c];
  }
  std::vector<Vector> out;
  for (const auto& k : kernel_basis(m)) {
    Vector v(ambient_);
    for (std::size_t i = 0; i < p; ++i)
      if (k[i] != 0)
        for (std::size_t c = 0; c < ambient_; ++c) v[c] += k[i] * basis_[i][c];
    out.push_back(std::move(v));
  }
  return Subspace(ambient_, out);
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspace sum: ambient mismatch");
  std::vector<Vector> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return Subspace(ambient_, rows);
}

// ---------------------------------------------------------------------------

Vector basis_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v.at(i) = 1;
  return v;
}

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y) {
  const std::size_t n = g.dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket: vector length differs from dimension");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      for (const auto& t : g.structure(i, j)) out[t.index] += x[i] * y[j] * t.coeff;
    }
  }
  return out;
}

ValidationReport validate(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  ValidationReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational s = g.constant(i, j, k) + g.constant(j, i, k);
        if (s != 0)
          report.violations.push_back({Violation::Kind::antisymmetry, {i, j, k},
                                       "c^" + g.name(k) + "_{" + g.name(i) + "," + g.name(j) + "} + c^" + g.name(k) +
                                           "_{" + g.name(j) + "," + g.name(i) + "} = " + to_string(s)});
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector ei = basis_vector(n, i), ej = basis_vector(n, j), ek = basis_vector(n, k);
        Vector jac = bracket(g, bracket(g, ei, ej), ek);
        Vector b = bracket(g, bracket(g, ej, ek), ei);
        Vector c = bracket(g, bracket(g, ek, ei), ej);
        for (std::size_t l = 0; l < n; ++l) {
          Rational s = jac[l] + b[l] + c[l];
          if (s != 0)
            report.violations.push_back({Violation::Kind::jacobi, {i, j, k, l},
                                         "Jacobi identity fails for (" + g.name(i) + "," + g.name(j) + "," + g.name(k) +
                                             ") in component " + g.name(l) + ": " + to_string(s)});
        }
      }
  if (g.unipotent_indices()) {
    Subspace u = unipotent_ideal(g);
    for (std::size_t i = 0; i < n; ++i)
      for (auto ui : *g.unipotent_indices())
        if (!u.contains(bracket(g, basis_vector(n, i), basis_vector(n, ui))))
          report.violations.push_back({Violation::Kind::ideal, {i, ui},
                                       "[" + g.name(i) + "," + g.name(ui) + "] leaves the unipotent ideal"});
  }
  return report;
}

Subspace center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // Row (j, k): sum_i x_i c^k_ij = 0.
  Matrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : g.structure(i, j)) m(j * n + t.index, i) = t.coeff;
  return Subspace(n, kernel_basis(m));
}

Subspace bracket_with_algebra(const LieAlgebra& g, const Subspace& s) {
  return bracket_span(g, Subspace::whole(g.dim()), s);
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& s, const Subspace& t) {
  std::vector<Vector> rows;
  for (const auto& a : s.basis())
    for (const auto& b : t.basis()) {
      Vector c = bracket(g, a, b);
      if (!is_zero(c)) rows.push_back(std::move(c));
    }
  return Subspace(g.dim(), rows);
}

LowerCentralSeries lower_central_series(const LieAlgebra& g, const Subspace& s) {
  LowerCentralSeries lcs;
  lcs.terms.push_back(s);
  while (true) {
    const Subspace& last = lcs.terms.back();
    if (last.dim() == 0) {
      lcs.nilpotency_class = lcs.terms.size() - 1;
      return lcs;
    }
    Subspace next = bracket_span(g, s, last);
    if (next == last) return lcs;
    lcs.terms.push_back(std::move(next));
  }
}

LowerCentralSeries lower_central_series(const LieAlgebra& g) {
  return lower_central_series(g, Subspace::whole(g.dim()));
}

std::optional<std::string> abelian_ideal_failure(const LieAlgebra& g, const Subspace& s) {
  const std::size_t n = g.dim();
  if (s.ambient_dim() != n) throw DimensionMismatch("subspace lives in a different ambient dimension");
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& v : s.basis())
      if (!s.contains(bracket(g, basis_vector(n, i), v)))
        return "not an ideal: [" + g.name(i) + ", s] is not contained in s";
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b)
      if (!is_zero(bracket(g, s.basis()[a], s.basis()[b]))) return "not abelian: two basis vectors do not commute";
  return std::nullopt;
}

bool is_abelian_ideal(const LieAlgebra& g, const Subspace& s) { return !abelian_ideal_failure(g, s); }

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  return s.contains(bracket_with_algebra(g, s));
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) { return s.contains(bracket_span(g, s, s)); }

Subspace unipotent_ideal(const LieAlgebra& g) {
  if (!g.unipotent_indices()) return Subspace::zero(g.dim());
  return Subspace::coordinate(g.dim(), *g.unipotent_indices());
}

namespace algebras {

LieAlgebra abelian(std::size_t n) { return LieAlgebra(n); }

LieAlgebra heisenberg3() {
  return LieAlgebra::from_brackets(3, {"a", "b", "c"}, {{{0, 1}, {{2, 1}}}});
}

LieAlgebra sl2() {
  return LieAlgebra::from_brackets(3, {"e", "h", "f"},
                                   {{{1, 0}, {{0, 2}}}, {{1, 2}, {{2, -2}}}, {{0, 2}, {{1, 1}}}});
}

}  // namespace algebras

}  // namespace hinv
