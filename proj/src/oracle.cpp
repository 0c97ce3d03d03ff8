#include "hinv/oracle.hpp"

namespace hinv {

std::vector<WedgeElement> oracle_invariants(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);

  // unknown R_ab (a < b) stands for R_ab (x_a (x) x_b - x_b (x) x_a)
  Matrix m(n * n * n, pairs.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t col = 0; col < pairs.size(); ++col) {
      auto [a, b] = pairs[col];
      auto row = [&](std::size_t p, std::size_t q) -> Rational& { return m(i * n * n + p * n + q, col); };
      // [x_i, x_a] (x) x_b + x_a (x) [x_i, x_b] - [x_i, x_b] (x) x_a - x_b (x) [x_i, x_a]
      for (std::size_t p = 0; p < n; ++p) {
        Rational ia = g.constant(i, a, p), ib = g.constant(i, b, p);
        row(p, b) += ia;
        row(a, p) += ib;
        row(p, a) -= ib;
        row(b, p) -= ia;
      }
    }

  std::vector<WedgeElement> out;
  for (const auto& v : kernel_basis(m)) out.push_back(WedgeElement::from_pair_coordinates(n, v));
  return out;
}

}  // namespace hinv
