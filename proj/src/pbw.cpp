#include "hinv/pbw.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace hinv::pbw {

std::size_t Engine::KeyHash::operator()(const std::vector<Exponent>& k) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : k) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

Engine::Engine(LieAlgebra g) : g_(std::move(g)) {
  class_ = lower_central_series(g_).nilpotency_class;
  if (!class_) return;
  const std::size_t n = g_.dim();
  std::vector<int> w(n, 1);
  // Longest-path relaxation; still changing after n + 1 passes means no weight function.
  for (std::size_t pass = 0; pass <= n + 1; ++pass) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& t : g_.structure(i, j))
          if (w[t.index] < w[i] + w[j]) {
            w[t.index] = w[i] + w[j];
            changed = true;
          }
    if (!changed) {
      weights_ = std::move(w);
      return;
    }
  }
}

const std::vector<int>& Engine::weights() const {
  if (!weights_) {
    if (!class_) throw NotNilpotent("PBW truncation requires a nilpotent Lie algebra");
    throw NotNilpotent("basis is not compatible with a weight filtration; use a basis adapted to the lower central series");
  }
  return *weights_;
}

int Engine::max_weight() const {
  const auto& w = weights();
  return w.empty() ? 1 : *std::max_element(w.begin(), w.end());
}

int Engine::weight(std::span<const Exponent> m) const {
  const auto& w = weights();
  int total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) total += m[i] * w[i % w.size()];
  return total;
}

int Engine::degree(std::span<const Exponent> m) const {
  int total = 0;
  for (auto e : m) total += e;
  return total;
}

int Engine::weight_bound_for_degree(int n, std::size_t arity) const {
  return static_cast<int>(arity) * n * max_weight();
}

const Poly& Engine::right_multiply(const Monomial& m, std::size_t j) const {
  std::vector<Exponent> key = m;
  key.push_back(static_cast<Exponent>(j));
  {
    std::lock_guard lock(mutex_);
    if (auto it = right_cache_.find(key); it != right_cache_.end()) return it->second;
  }
  Poly result;
  std::size_t last = m.size();
  for (std::size_t k = m.size(); k-- > 0;)
    if (m[k] > 0) {
      last = k;
      break;
    }
  if (last == m.size() || j >= last) {
    Monomial r = m;
    ++r[j];
    result.emplace(std::move(r), Rational(1));
  } else {
    // m = rest * x_k with k > j:  rest x_k x_j = (rest x_j) x_k + rest [x_k, x_j]
    const std::size_t k = last;
    Monomial rest = m;
    --rest[k];
    for (const auto& [t, c] : right_multiply(rest, j))
      for (const auto& [u, d] : right_multiply(t, k)) result[u] += c * d;
    for (const auto& term : g_.structure(k, j))
      for (const auto& [u, d] : right_multiply(rest, term.index)) result[u] += term.coeff * d;
    std::erase_if(result, [](const auto& kv) { return kv.second == 0; });
  }
  std::lock_guard lock(mutex_);
  return right_cache_.emplace(std::move(key), std::move(result)).first->second;
}

const Poly& Engine::multiply(const Monomial& a, const Monomial& b) const {
  std::vector<Exponent> key = a;
  key.insert(key.end(), b.begin(), b.end());
  {
    std::lock_guard lock(mutex_);
    if (auto it = product_cache_.find(key); it != product_cache_.end()) return it->second;
  }
  Poly current{{a, Rational(1)}};
  for (std::size_t i = 0; i < b.size(); ++i)
    for (Exponent e = 0; e < b[i]; ++e) {
      Poly next;
      for (const auto& [m, c] : current)
        for (const auto& [u, d] : right_multiply(m, i)) next[u] += c * d;
      std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
      current = std::move(next);
    }
  std::lock_guard lock(mutex_);
  return product_cache_.emplace(std::move(key), std::move(current)).first->second;
}

Poly Engine::normal_order(std::span<const std::size_t> word) const {
  Poly current{{Monomial(dim(), 0), Rational(1)}};
  for (auto letter : word) {
    if (letter >= dim()) throw DimensionMismatch("word letter out of range");
    Poly next;
    for (const auto& [m, c] : current)
      for (const auto& [u, d] : right_multiply(m, letter)) next[u] += c * d;
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    current = std::move(next);
  }
  return current;
}

// ---------------------------------------------------------------------------

namespace {

std::uint32_t full_mask(std::size_t arity) { return arity >= 32 ? ~0u : (1u << arity) - 1; }

bool subset(std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }

// Drops constraints implied by another one: (S, L) follows from (S', L') when S is
// contained in S' and L' <= L.
void normalize(Bounds& b) {
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  Bounds kept;
  for (std::size_t i = 0; i < b.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < b.size() && !redundant; ++j)
      redundant = j != i && subset(b[i].mask, b[j].mask) && b[j].limit <= b[i].limit &&
                  (b[j].mask != b[i].mask || b[j].limit < b[i].limit);
    if (!redundant) kept.push_back(b[i]);
  }
  b = std::move(kept);
}

bool violates(const Bounds& b, const std::vector<int>& fw) {
  for (const auto& c : b) {
    int w = 0;
    for (std::size_t f = 0; f < fw.size(); ++f)
      if (c.mask >> f & 1u) w += fw[f];
    if (w > c.limit) return true;
  }
  return false;
}

// Image of a factor mask under a map sending old factor f to the factors in image[f].
Bounds remap(const Bounds& b, const std::vector<std::uint32_t>& image) {
  Bounds out;
  for (const auto& c : b) {
    std::uint32_t m = 0;
    for (std::size_t f = 0; f < image.size(); ++f)
      if (c.mask >> f & 1u) m |= image[f];
    if (m) out.push_back({m, c.limit});
  }
  normalize(out);
  return out;
}

Bounds total_bound(std::size_t arity, std::optional<int> bound) {
  if (!bound) return {};
  return {{full_mask(arity), *bound}};
}

}  // namespace

Bounds degree_window(const Engine& e, int n, std::size_t arity, int multiple) {
  Bounds out;
  for (std::size_t f = 0; f < arity; ++f) out.push_back({1u << f, multiple * n * e.max_weight()});
  normalize(out);
  return out;
}

Tensor::Tensor(std::shared_ptr<const Engine> engine, std::size_t arity, std::optional<int> weight_bound)
    : Tensor(std::move(engine), arity, total_bound(arity, weight_bound)) {}

Tensor::Tensor(std::shared_ptr<const Engine> engine, std::size_t arity, Bounds bounds)
    : engine_(std::move(engine)), arity_(arity), bounds_(std::move(bounds)) {
  if (!engine_) throw PreconditionError("tensor requires an engine");
  if (arity_ >= 32) throw DimensionMismatch("tensor arity too large");
  for (const auto& c : bounds_)
    if (c.mask == 0 || !subset(c.mask, full_mask(arity_)))
      throw DimensionMismatch("weight constraint refers to a missing tensor factor");
  normalize(bounds_);
  if (!bounds_.empty()) engine_->weights();
}

Tensor Tensor::one(std::shared_ptr<const Engine> engine, std::size_t arity, std::optional<int> weight_bound) {
  return one(engine, arity, total_bound(arity, weight_bound));
}

Tensor Tensor::one(std::shared_ptr<const Engine> engine, std::size_t arity, Bounds bounds) {
  Tensor t(engine, arity, std::move(bounds));
  t.terms_.emplace(Key(arity * engine->dim(), 0), Rational(1));
  return t;
}

Tensor Tensor::generator(std::shared_ptr<const Engine> engine, std::size_t i) {
  if (i >= engine->dim()) throw DimensionMismatch("generator index out of range");
  Tensor t(engine, 1);
  Key k(engine->dim(), 0);
  k[i] = 1;
  t.terms_.emplace(std::move(k), Rational(1));
  return t;
}

Tensor Tensor::from_poly(std::shared_ptr<const Engine> engine, const Poly& p) {
  Tensor t(engine, 1);
  for (const auto& [m, c] : p) t.add_term(m, c);
  return t;
}

Tensor Tensor::from_wedge(std::shared_ptr<const Engine> engine, const WedgeElement& r) {
  const std::size_t n = engine->dim();
  if (r.dim() != n) throw DimensionMismatch("wedge element dimension differs from the algebra");
  Tensor t(engine, 2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (r.coeffs()(a, b) == 0) continue;
      Key k(2 * n, 0);
      k[a] = 1;
      k[n + b] = 1;
      t.add_term(k, r.coeffs()(a, b));
    }
  return t;
}

std::optional<int> Tensor::weight_bound() const {
  std::optional<int> out;
  for (const auto& c : bounds_)
    if (c.mask == full_mask(arity_) && (!out || c.limit < *out)) out = c.limit;
  return out;
}

bool Tensor::exact_to_degree(int n) const {
  if (bounds_.empty()) return true;
  const int per_factor = n * engine_->max_weight();
  return std::all_of(bounds_.begin(), bounds_.end(),
                     [&](const Constraint& c) { return c.limit >= std::popcount(c.mask) * per_factor; });
}

std::vector<int> Tensor::factor_weights(const Key& k) const {
  const std::size_t n = engine_->dim();
  std::vector<int> fw(arity_);
  for (std::size_t f = 0; f < arity_; ++f) fw[f] = engine_->weight(std::span<const Exponent>(k).subspan(f * n, n));
  return fw;
}

bool Tensor::violates(const Key& k) const { return !bounds_.empty() && pbw::violates(bounds_, factor_weights(k)); }

void Tensor::add_term(const Key& k, const Rational& c) {
  if (k.size() != arity_ * engine_->dim()) throw DimensionMismatch("tensor key has wrong length");
  if (c == 0) return;
  if (violates(k)) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Tensor::coefficient(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Tensor::constant_term() const { return coefficient(Key(arity_ * engine_->dim(), 0)); }

Monomial Tensor::factor(const Key& k, std::size_t f) const {
  const std::size_t n = engine_->dim();
  return Monomial(k.begin() + static_cast<std::ptrdiff_t>(f * n), k.begin() + static_cast<std::ptrdiff_t>((f + 1) * n));
}

int Tensor::degree(const Key& k, std::size_t f) const {
  const std::size_t n = engine_->dim();
  return engine_->degree(std::span<const Exponent>(k).subspan(f * n, n));
}

Tensor Tensor::truncated_degree(int n) const {
  Tensor out(engine_, arity_, bounds_);
  for (const auto& [k, c] : terms_) {
    bool keep = true;
    for (std::size_t f = 0; f < arity_ && keep; ++f) keep = degree(k, f) <= n;
    if (keep) out.terms_.emplace(k, c);
  }
  return out;
}

Tensor Tensor::with_weight_bound(int bound) const { return restricted({{full_mask(arity_), bound}}); }

Tensor Tensor::restricted(const Bounds& extra) const {
  Bounds b = bounds_;
  b.insert(b.end(), extra.begin(), extra.end());
  Tensor out(engine_, arity_, std::move(b));
  for (const auto& [k, c] : terms_)
    if (!out.violates(k)) out.terms_.emplace(k, c);
  return out;
}

void Tensor::require_compatible(const Tensor& o) const {
  if (engine_ != o.engine_)
    throw PreconditionError("tensors belong to different engines");
  if (arity_ != o.arity_) throw DimensionMismatch("tensor arity mismatch");
}

void Tensor::merge_bounds(const Bounds& o) {
  if (o.empty() || o == bounds_) return;
  bounds_.insert(bounds_.end(), o.begin(), o.end());
  normalize(bounds_);
  std::erase_if(terms_, [&](const auto& kv) { return violates(kv.first); });
}

Tensor& Tensor::operator+=(const Tensor& o) {
  require_compatible(o);
  merge_bounds(o.bounds_);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  require_compatible(o);
  merge_bounds(o.bounds_);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Tensor& Tensor::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

namespace {

struct Split {
  std::vector<Monomial> factors;
  const Rational* coeff;
};

// Terms grouped by their factor-weight vector, so whole groups can be skipped.
std::map<std::vector<int>, std::vector<Split>> split_terms(const Tensor& t, bool weighted) {
  std::map<std::vector<int>, std::vector<Split>> out;
  for (const auto& [k, c] : t.terms()) {
    Split s{{}, &c};
    for (std::size_t f = 0; f < t.arity(); ++f) s.factors.push_back(t.factor(k, f));
    out[weighted ? t.factor_weights(k) : std::vector<int>(t.arity(), 0)].push_back(std::move(s));
  }
  return out;
}

}  // namespace

Tensor operator*(const Tensor& a, const Tensor& b) {
  a.require_compatible(b);
  const Engine& e = *a.engine_;
  const std::size_t n = e.dim(), arity = a.arity_;
  Bounds bounds = a.bounds_;
  bounds.insert(bounds.end(), b.bounds_.begin(), b.bounds_.end());
  Tensor out(a.engine_, arity, std::move(bounds));
  const bool weighted = !out.bounds_.empty();
  const auto as = split_terms(a, weighted), bs = split_terms(b, weighted);

  // Constraints touching each factor, for pruning during expansion.
  std::vector<Bounds> touching(arity);
  for (const auto& c : out.bounds_)
    for (std::size_t f = 0; f < arity; ++f)
      if (c.mask >> f & 1u) touching[f].push_back(c);

  std::map<Tensor::Key, Rational> acc;
  std::vector<const Poly*> polys(arity);
  Tensor::Key key(arity * n);
  // Rewriting never lowers weight, so wa + wb bounds each product factor from below.
  std::vector<int> lower(arity), cur(arity);
  for (const auto& [wa, ta_group] : as)
    for (const auto& [wb, tb_group] : bs) {
      for (std::size_t f = 0; f < arity; ++f) lower[f] = wa[f] + wb[f];
      if (weighted && violates(out.bounds_, lower)) continue;
      for (const auto& ta : ta_group)
        for (const auto& tb : tb_group) {
          bool empty = false;
          for (std::size_t f = 0; f < arity; ++f) {
            polys[f] = &e.multiply(ta.factors[f], tb.factors[f]);
            if (polys[f]->empty()) empty = true;
          }
          if (empty) continue;
          cur = lower;
          auto expand = [&](auto&& self, std::size_t f, const Rational& c) -> void {
            if (f == arity) {
              auto [it, inserted] = acc.try_emplace(key, c);
              if (!inserted) it->second += c;
              return;
            }
            for (const auto& [m, d] : *polys[f]) {
              if (weighted) {
                cur[f] = e.weight(m);
                if (violates(touching[f], cur)) continue;
              }
              std::copy(m.begin(), m.end(), key.begin() + static_cast<std::ptrdiff_t>(f * n));
              self(self, f + 1, c * d);
            }
            cur[f] = lower[f];
          };
          expand(expand, 0, *ta.coeff * *tb.coeff);
        }
    }
  for (auto& [k, c] : acc)
    if (c != 0) out.terms_.emplace(k, std::move(c));
  return out;
}

Tensor outer(const Tensor& u, const Tensor& v) {
  if (u.engine() != v.engine()) throw PreconditionError("tensors belong to different engines");
  Bounds bounds = u.bounds();
  for (const auto& c : v.bounds()) bounds.push_back({c.mask << u.arity(), c.limit});
  Tensor out(u.engine(), u.arity() + v.arity(), std::move(bounds));
  for (const auto& [ku, cu] : u.terms())
    for (const auto& [kv, cv] : v.terms()) {
      Tensor::Key k = ku;
      k.insert(k.end(), kv.begin(), kv.end());
      out.add_term(k, cu * cv);
    }
  return out;
}

namespace {

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

Tensor coproduct(const Tensor& u, std::size_t f) {
  if (f >= u.arity()) throw DimensionMismatch("coproduct factor out of range");
  const std::size_t n = u.engine()->dim();
  // Factor f splits into f and f + 1; both inherit its constraints jointly.
  std::vector<std::uint32_t> image(u.arity());
  for (std::size_t i = 0; i < u.arity(); ++i) image[i] = i < f ? 1u << i : i == f ? 3u << i : 1u << (i + 1);
  Tensor out(u.engine(), u.arity() + 1, remap(u.bounds(), image));
  for (const auto& [k, c] : u.terms()) {
    Monomial m = u.factor(k, f);
    // Delta(x^e) = sum_{s <= e} prod_i C(e_i, s_i) x^s (x) x^{e-s}
    Monomial left(n, 0);
    auto rec = [&](auto&& self, std::size_t i, const Rational& coeff) -> void {
      if (i == n) {
        Tensor::Key key(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(f * n));
        key.insert(key.end(), left.begin(), left.end());
        for (std::size_t t = 0; t < n; ++t) key.push_back(static_cast<Exponent>(m[t] - left[t]));
        key.insert(key.end(), k.begin() + static_cast<std::ptrdiff_t>((f + 1) * n), k.end());
        out.add_term(key, coeff);
        return;
      }
      for (Exponent s = 0; s <= m[i]; ++s) {
        left[i] = s;
        self(self, i + 1, coeff * Rational(binomial(m[i], s)));
      }
      left[i] = 0;
    };
    rec(rec, 0, c);
  }
  return out;
}

Tensor pad(const Tensor& u, std::size_t pos) {
  if (pos > u.arity()) throw DimensionMismatch("pad position out of range");
  const std::size_t n = u.engine()->dim();
  std::vector<std::uint32_t> image(u.arity());
  for (std::size_t i = 0; i < u.arity(); ++i) image[i] = i < pos ? 1u << i : 1u << (i + 1);
  Tensor out(u.engine(), u.arity() + 1, remap(u.bounds(), image));
  for (const auto& [k, c] : u.terms()) {
    Tensor::Key key(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(pos * n));
    key.insert(key.end(), n, 0);
    key.insert(key.end(), k.begin() + static_cast<std::ptrdiff_t>(pos * n), k.end());
    out.add_term(key, c);
  }
  return out;
}

Tensor multiply_components(const Tensor& u) {
  const Engine& e = *u.engine();
  Tensor out(u.engine(), 1, remap(u.bounds(), std::vector<std::uint32_t>(u.arity(), 1u)));
  for (const auto& [k, c] : u.terms()) {
    Poly current{{u.factor(k, 0), Rational(1)}};
    for (std::size_t f = 1; f < u.arity(); ++f) {
      Monomial next_factor = u.factor(k, f);
      Poly next;
      for (const auto& [m, d] : current)
        for (const auto& [p, q] : e.multiply(m, next_factor)) next[p] += d * q;
      current = std::move(next);
    }
    for (const auto& [m, d] : current) out.add_term(m, c * d);
  }
  return out;
}

Tensor flip(const Tensor& u) {
  if (u.arity() != 2) throw DimensionMismatch("flip requires a 2-tensor");
  const std::size_t n = u.engine()->dim();
  Tensor out(u.engine(), 2, remap(u.bounds(), {2u, 1u}));
  for (const auto& [k, c] : u.terms()) {
    Tensor::Key key(k.begin() + static_cast<std::ptrdiff_t>(n), k.end());
    key.insert(key.end(), k.begin(), k.begin() + static_cast<std::ptrdiff_t>(n));
    out.add_term(key, c);
  }
  return out;
}

Tensor commutator(const Tensor& a, const Tensor& b) { return a * b - b * a; }

namespace {

// Every term of a series argument has total weight >= 1, so its m-th power lies in
// the bound ideal once m exceeds the sum of the limits of a covering set.
int series_length(const Tensor& x, const Bounds& bounds) {
  std::uint32_t covered = 0;
  int total = 0;
  for (const auto& c : bounds) {
    covered |= c.mask;
    total += c.limit;
  }
  if (covered != full_mask(x.arity()))
    throw PreconditionError("series truncation must constrain every tensor factor");
  return total + 1;
}

}  // namespace

Tensor exp_series(const Tensor& x, int bound) { return exp_series(x, total_bound(x.arity(), bound)); }

Tensor exp_series(const Tensor& x, const Bounds& bounds) {
  if (x.constant_term() != 0) throw PreconditionError("exp_series: argument has a nonzero constant term");
  x.engine()->weights();
  Tensor xb = x.restricted(bounds);
  const int length = series_length(xb, xb.bounds());
  Tensor result = Tensor::one(x.engine(), x.arity(), xb.bounds());
  Tensor power = result;
  for (int m = 1; m <= length; ++m) {
    power = power * xb * Rational(1, m);
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

Tensor inverse(const Tensor& x, int bound) { return inverse(x, total_bound(x.arity(), bound)); }

Tensor inverse(const Tensor& x, const Bounds& bounds) {
  Rational c = x.constant_term();
  if (c == 0) throw PreconditionError("inverse: element has zero constant term");
  x.engine()->weights();
  Tensor xb = x.restricted(bounds);
  Tensor one = Tensor::one(x.engine(), x.arity(), xb.bounds());
  Tensor y = one - xb * (1 / c);
  const int length = series_length(xb, xb.bounds());
  Tensor result = one, power = one;
  for (int m = 1; m <= length; ++m) {
    power = power * y;
    if (power.is_zero()) break;
    result += power;
  }
  return result * (1 / c);
}

Tensor normal_order(std::shared_ptr<const Engine> engine, std::span<const std::size_t> word, int n) {
  Poly p = engine->normal_order(word);
  return Tensor::from_poly(engine, p).truncated_degree(n);
}

}  // namespace hinv::pbw
