#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hinv/lie_algebra.hpp"
#include "hinv/wedge.hpp"

namespace hinv::pbw {

using Exponent = std::uint16_t;
/// Ordered PBW monomial x_0^{e_0} ... x_{n-1}^{e_{n-1}}, one exponent per basis element.
using Monomial = std::vector<Exponent>;
using Poly = std::map<Monomial, Rational>;

class NotNilpotent : public Error {
 public:
  using Error::Error;
};

/// Rewriting engine for U(g) in the PBW basis of g's input basis order.
///
/// Truncated arithmetic uses a weight filtration: letter k gets the smallest
/// weight w_k >= 1 with w_k >= w_i + w_j whenever c^k_ij != 0. Rewriting
/// x_j x_i = x_i x_j + [x_j, x_i] never lowers weight, so dropping every
/// term of total weight > T is an algebra quotient and all retained
/// coefficients are exact. Such weights exist iff g is nilpotent and the
/// basis is compatible with a filtration (true for the usual triangular
/// presentations); otherwise only exact (untruncated) arithmetic is available.
///
/// Monomial products are memoized; the cache is internally synchronized.
class Engine {
 public:
  explicit Engine(LieAlgebra g);

  const LieAlgebra& algebra() const { return g_; }
  std::size_t dim() const { return g_.dim(); }
  std::optional<std::size_t> nilpotency_class() const { return class_; }

  bool has_weights() const { return weights_.has_value(); }
  /// Throws NotNilpotent when no weight function exists.
  const std::vector<int>& weights() const;
  int max_weight() const;
  int weight(std::span<const Exponent> m) const;
  int degree(std::span<const Exponent> m) const;

  /// Exact product of two ordered monomials.
  const Poly& multiply(const Monomial& a, const Monomial& b) const;
  /// Class of the word x_{w_0} x_{w_1} ... in the PBW basis, exact.
  Poly normal_order(std::span<const std::size_t> word) const;

  /// Weight bound that determines every coefficient with per-factor degree <= n
  /// of an arity-fold tensor: arity * n * max_weight.
  int weight_bound_for_degree(int n, std::size_t arity) const;

 private:
  const Poly& right_multiply(const Monomial& m, std::size_t j) const;

  LieAlgebra g_;
  std::optional<std::size_t> class_;
  std::optional<std::vector<int>> weights_;

  struct KeyHash {
    std::size_t operator()(const std::vector<Exponent>& k) const noexcept;
  };
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::vector<Exponent>, Poly, KeyHash> right_cache_;
  mutable std::unordered_map<std::vector<Exponent>, Poly, KeyHash> product_cache_;
};

/// Terms whose weight summed over the tensor factors in `mask` exceeds `limit`
/// span an ideal of U(g)^{(x) k}; dropping them is an exact quotient.
struct Constraint {
  std::uint32_t mask = 0;
  int limit = 0;
  auto operator<=>(const Constraint&) const = default;
};
/// Conjunction of constraints, kept sorted with redundant entries removed.
using Bounds = std::vector<Constraint>;

/// Per-factor window {f}: multiple * n * max_weight for every factor of an arity-fold tensor.
Bounds degree_window(const Engine& e, int n, std::size_t arity, int multiple = 1);

/// Element of U(g)^{(x) arity} (arity 1: U(g) itself), possibly truncated.
///
/// A key concatenates one Monomial per tensor factor. The element is known
/// modulo the ideal spanned by monomials violating some constraint in
/// `bounds()`, and no such terms are stored. No bounds means exact.
/// Coproducts merge a factor's constraints into the two new factors, so a
/// bound set survives every operation below.
class Tensor {
 public:
  using Key = std::vector<Exponent>;

  /// A weight bound constrains the total weight over all factors.
  Tensor(std::shared_ptr<const Engine> engine, std::size_t arity, std::optional<int> weight_bound = std::nullopt);
  Tensor(std::shared_ptr<const Engine> engine, std::size_t arity, Bounds bounds);

  static Tensor one(std::shared_ptr<const Engine> engine, std::size_t arity, std::optional<int> weight_bound = std::nullopt);
  static Tensor one(std::shared_ptr<const Engine> engine, std::size_t arity, Bounds bounds);
  static Tensor generator(std::shared_ptr<const Engine> engine, std::size_t i);
  static Tensor from_poly(std::shared_ptr<const Engine> engine, const Poly& p);
  /// r as sum R_ab x_a (x) x_b.
  static Tensor from_wedge(std::shared_ptr<const Engine> engine, const WedgeElement& r);

  const std::shared_ptr<const Engine>& engine() const { return engine_; }
  std::size_t arity() const { return arity_; }
  const Bounds& bounds() const { return bounds_; }
  /// Tightest total-weight constraint, if any.
  std::optional<int> weight_bound() const;
  /// True when every coefficient with per-factor degree <= n is determined.
  bool exact_to_degree(int n) const;
  const std::map<Key, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& k, const Rational& c);
  Rational coefficient(const Key& k) const;
  Rational constant_term() const;
  /// Factor f of key k.
  Monomial factor(const Key& k, std::size_t f) const;
  int degree(const Key& k, std::size_t f) const;
  /// Weight of each factor of k.
  std::vector<int> factor_weights(const Key& k) const;

  /// Drops terms with any factor of degree > n. Presentation-only: the result is
  /// a comparison view and should not be fed back into products.
  Tensor truncated_degree(int n) const;
  /// Tightens the total weight bound, dropping terms above it.
  Tensor with_weight_bound(int bound) const;
  /// Adds constraints, dropping terms that violate them.
  Tensor restricted(const Bounds& extra) const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Rational& s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Rational& s) { return a *= s; }
  Tensor operator-() const { return *this * Rational(-1); }
  friend Tensor operator*(const Tensor& a, const Tensor& b);

  /// Equal coefficients (bounds are not compared).
  friend bool operator==(const Tensor& a, const Tensor& b) { return a.arity_ == b.arity_ && a.terms_ == b.terms_; }

 private:
  void require_compatible(const Tensor& o) const;
  bool violates(const Key& k) const;
  void merge_bounds(const Bounds& o);

  std::shared_ptr<const Engine> engine_;
  std::size_t arity_;
  Bounds bounds_;
  std::map<Key, Rational> terms_;
};


/// u (x) v
Tensor outer(const Tensor& u, const Tensor& v);
/// Delta applied to tensor factor `f`; generators are primitive.
Tensor coproduct(const Tensor& u, std::size_t f = 0);
/// Inserts a unit factor at position `pos` (pad(J, 2) = J (x) 1, pad(J, 0) = 1 (x) J).
Tensor pad(const Tensor& u, std::size_t pos);
/// Multiplies the tensor factors together in order: u_1 u_2 ... u_k.
Tensor multiply_components(const Tensor& u);
/// Swaps the two factors of a 2-tensor.
Tensor flip(const Tensor& u);
Tensor commutator(const Tensor& a, const Tensor& b);

/// Truncated exponential sum_m x^m / m!, modulo total weight > bound.
/// Throws PreconditionError for a nonzero constant term, NotNilpotent without weights.
Tensor exp_series(const Tensor& x, int bound);
/// Same, modulo `bounds`, whose masks must cover every factor.
Tensor exp_series(const Tensor& x, const Bounds& bounds);
/// Inverse of an element with nonzero constant term, modulo total weight > bound.
Tensor inverse(const Tensor& x, int bound);
Tensor inverse(const Tensor& x, const Bounds& bounds);

/// normal_order truncated to degree <= n.
Tensor normal_order(std::shared_ptr<const Engine> engine, std::span<const std::size_t> word, int n);

}  // namespace hinv::pbw
