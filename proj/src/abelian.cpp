#include "hinv/abelian.hpp"

#include <algorithm>
#include <utility>

namespace hinv {

namespace {

// Index of e_i ^ e_j (i < j) among g(g-1)/2 generators in lexicographic order.
std::size_t pair_slot(std::size_t i, std::size_t j, std::size_t g) { return i * g - i * (i + 1) / 2 + (j - i - 1); }

IntMatrix stack(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

bool is_unimodular(const IntMatrix& p) {
  if (p.rows() != p.cols()) return false;
  for (const auto& d : smith_normal_form(p).diagonal())
    if (d != 1) return false;
  return true;
}

// The coordinate vector v lies in the relation lattice of the canonical group a.
bool in_relation_lattice(const FgAbelianGroup& a, const std::vector<Integer>& v) {
  for (std::size_t i = 0; i < a.generator_count(); ++i) {
    Integer d = a.order(i);
    if (d == 0 ? v[i] != 0 : v[i] % d != 0) return false;
  }
  return true;
}

}  // namespace

FgAbelianGroup FgAbelianGroup::from_presentation(const IntMatrix& relations, std::size_t generators) {
  if (relations.rows() > 0 && relations.cols() != generators)
    throw DimensionMismatch("presentation has " + std::to_string(relations.cols()) + " columns, expected " +
                            std::to_string(generators));
  FgAbelianGroup out;
  std::size_t nonzero = 0;
  if (relations.rows() > 0) {
    for (const auto& d : smith_normal_form(relations).diagonal()) {
      if (d == 0) continue;
      ++nonzero;
      if (d != 1) out.invariant_factors.push_back(d);
    }
  }
  out.free_rank = generators - nonzero;
  return out;
}

FgAbelianGroup FgAbelianGroup::from_orders(const std::vector<Integer>& orders) {
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] == 0) continue;
    std::vector<Integer> row(orders.size());
    row[i] = abs(orders[i]);
    rows.push_back(std::move(row));
  }
  return from_presentation(stack(rows, orders.size()), orders.size());
}

Integer FgAbelianGroup::order(std::size_t i) const {
  if (i >= generator_count()) throw DimensionMismatch("generator index out of range");
  return i < free_rank ? Integer(0) : invariant_factors[i - free_rank];
}

IntMatrix FgAbelianGroup::relations() const {
  IntMatrix m(invariant_factors.size(), generator_count());
  for (std::size_t t = 0; t < invariant_factors.size(); ++t) m(t, free_rank + t) = invariant_factors[t];
  return m;
}

std::string to_string(const FgAbelianGroup& a) {
  std::vector<std::string> parts;
  if (a.free_rank == 1) parts.push_back("Z");
  if (a.free_rank > 1) parts.push_back("Z^" + std::to_string(a.free_rank));
  for (const auto& d : a.invariant_factors) parts.push_back("Z/" + d.get_str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < a.generator_count(); ++i) orders.push_back(a.order(i));
  for (std::size_t i = 0; i < b.generator_count(); ++i) orders.push_back(b.order(i));
  return FgAbelianGroup::from_orders(orders);
}

FgAbelianGroup tensor_product(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  const std::size_t ga = a.generator_count(), gb = b.generator_count();
  // generator e_i (x) f_j sits at i * gb + j; relations d_i e_i (x) f_j and e_i (x) d'_j f_j
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < ga; ++i)
    for (std::size_t j = 0; j < gb; ++j)
      for (const Integer& d : {a.order(i), b.order(j)}) {
        if (d == 0) continue;
        std::vector<Integer> row(ga * gb);
        row[i * gb + j] = d;
        rows.push_back(std::move(row));
      }
  return FgAbelianGroup::from_presentation(stack(rows, ga * gb), ga * gb);
}

FgAbelianGroup wedge_square(const FgAbelianGroup& a) {
  const std::size_t g = a.generator_count();
  const std::size_t pairs = g < 2 ? 0 : g * (g - 1) / 2;
  IntMatrix rel = a.relations();
  std::vector<std::vector<Integer>> rows;
  // rho ^ e_j for every relation rho and generator j
  for (std::size_t r = 0; r < rel.rows(); ++r)
    for (std::size_t j = 0; j < g; ++j) {
      std::vector<Integer> row(pairs);
      bool any = false;
      for (std::size_t i = 0; i < g; ++i) {
        if (i == j || rel(r, i) == 0) continue;
        if (i < j)
          row[pair_slot(i, j, g)] += rel(r, i);
        else
          row[pair_slot(j, i, g)] -= rel(r, i);
        any = true;
      }
      if (any) rows.push_back(std::move(row));
    }
  return FgAbelianGroup::from_presentation(stack(rows, pairs), pairs);
}

KxDescription hom_to_kx(const FgAbelianGroup& a) { return {a.free_rank, a.invariant_factors}; }

Value::Value(Rational torsion, std::vector<Integer> free) : torsion_(std::move(torsion)), free_(std::move(free)) {
  normalize();
}

Value Value::q_power(std::size_t index, const Integer& exponent) {
  std::vector<Integer> free(index + 1);
  free[index] = exponent;
  return Value(0, std::move(free));
}

void Value::normalize() {
  torsion_.canonicalize();
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), torsion_.get_num_mpz_t(), torsion_.get_den_mpz_t());
  torsion_ -= fl;
  while (!free_.empty() && free_.back() == 0) free_.pop_back();
}

Integer Value::free(std::size_t index) const { return index < free_.size() ? free_[index] : Integer(0); }

bool Value::is_zero() const { return torsion_ == 0 && free_.empty(); }

Value operator+(const Value& a, const Value& b) {
  std::vector<Integer> free(std::max(a.free_.size(), b.free_.size()));
  for (std::size_t i = 0; i < free.size(); ++i) free[i] = a.free(i) + b.free(i);
  return Value(a.torsion_ + b.torsion_, std::move(free));
}

Value operator-(const Value& a) {
  std::vector<Integer> free = a.free_;
  for (auto& x : free) x = -x;
  return Value(-a.torsion_, std::move(free));
}

Value operator*(const Integer& k, const Value& a) {
  std::vector<Integer> free = a.free_;
  for (auto& x : free) x *= k;
  return Value(Rational(k) * a.torsion_, std::move(free));
}

bool operator==(const Value& a, const Value& b) { return a.torsion_ == b.torsion_ && a.free_ == b.free_; }

std::string to_string(const Value& v) {
  std::string out;
  if (v.torsion() != 0) out = "zeta^(" + to_string(v.torsion()) + ")";
  for (std::size_t i = 0; i < v.free_length(); ++i) {
    if (v.free(i) == 0) continue;
    if (!out.empty()) out += " ";
    out += "q" + std::to_string(i + 1);
    if (v.free(i) != 1) out += "^" + v.free(i).get_str();
  }
  return out.empty() ? "1" : out;
}

AlternatingBicharacter::AlternatingBicharacter(FgAbelianGroup domain, std::vector<std::vector<Value>> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  const std::size_t g = domain_.generator_count();
  if (values_.size() != g) throw PreconditionError("bicharacter matrix must have one row per generator");
  for (std::size_t i = 0; i < g; ++i) {
    if (values_[i].size() != g) throw PreconditionError("bicharacter matrix must be square");
    if (!values_[i][i].is_zero())
      throw PreconditionError("bicharacter is not alternating at generator " + std::to_string(i));
  }
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j)
      if (!(values_[j][i] == -values_[i][j]))
        throw PreconditionError("bicharacter is not skew at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  for (std::size_t i = domain_.free_rank; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      if (!(domain_.order(i) * values_[i][j]).is_zero())
        throw PreconditionError("bicharacter does not respect the order of generator " + std::to_string(i));
}

AlternatingBicharacter AlternatingBicharacter::zero(const FgAbelianGroup& domain) {
  const std::size_t g = domain.generator_count();
  return AlternatingBicharacter(domain, std::vector<std::vector<Value>>(g, std::vector<Value>(g)));
}

AlternatingBicharacter AlternatingBicharacter::pullback(const IntMatrix& p) const {
  const std::size_t g = domain_.generator_count();
  if (p.rows() != g || p.cols() != g) throw DimensionMismatch("change of generators must be square");
  if (!is_unimodular(p)) throw PreconditionError("change of generators is not unimodular");
  for (std::size_t i = domain_.free_rank; i < g; ++i) {
    std::vector<Integer> image(g);
    for (std::size_t k = 0; k < g; ++k) image[k] = p(k, i) * domain_.order(i);
    if (!in_relation_lattice(domain_, image))
      throw PreconditionError("change of generators does not preserve relations");
  }
  std::vector<std::vector<Value>> out(g, std::vector<Value>(g));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t k = 0; k < g; ++k)
        for (std::size_t l = 0; l < g; ++l)
          if (p(k, i) != 0 && p(l, j) != 0) out[i][j] = out[i][j] + Integer(p(k, i) * p(l, j)) * values_[k][l];
  return AlternatingBicharacter(domain_, std::move(out));
}

bool is_nondegenerate(const AlternatingBicharacter& b) {
  const FgAbelianGroup& a = b.domain();
  const std::size_t g = a.generator_count();
  if (g == 0) return true;

  std::size_t t = 0;
  Integer den = 1;
  for (const auto& row : b.values())
    for (const auto& v : row) {
      t = std::max(t, v.free_length());
      den = lcm(den, v.torsion().get_den());
    }

  // Unknowns (a_0..a_{g-1}, k_0..k_{g-1}):
  //   sum_i a_i free_l(B(e_i, e_j)) = 0          for every l, j
  //   sum_i a_i den * tors(B(e_i, e_j)) = den k_j  for every j
  IntMatrix m(t * g + g, 2 * g);
  for (std::size_t l = 0; l < t; ++l)
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t i = 0; i < g; ++i) m(l * g + j, i) = b(i, j).free(l);
  for (std::size_t j = 0; j < g; ++j) {
    for (std::size_t i = 0; i < g; ++i) {
      Rational scaled = b(i, j).torsion() * den;
      m(t * g + j, i) = scaled.get_num();
    }
    m(t * g + j, g + j) = -den;
  }
  for (const auto& v : integer_kernel(m)) {
    std::vector<Integer> element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(g));
    if (!in_relation_lattice(a, element)) return false;
  }
  return true;
}

}  // namespace hinv
