#include "hinv/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace hinv {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged integer matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("integer matrix product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (a(i, k) != 0)
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

namespace {

class Reducer {
 public:
  explicit Reducer(const IntMatrix& m)
      : d_(m), u_(IntMatrix::identity(m.rows())), v_(IntMatrix::identity(m.cols())) {}

  SmithForm run() {
    const std::size_t steps = std::min(d_.rows(), d_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!move_min_to(t)) break;
      while (!clear_cross(t) || !fix_divisibility(t)) {
      }
      if (d_(t, t) < 0) negate_row(t);
    }
    return {std::move(u_), std::move(d_), std::move(v_)};
  }

 private:
  // Brings the smallest nonzero |entry| of the trailing block to (t, t).
  bool move_min_to(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < d_.rows(); ++i)
      for (std::size_t j = t; j < d_.cols(); ++j)
        if (d_(i, j) != 0 && (!best || abs(d_(i, j)) < abs(d_(best->first, best->second)))) best = {{i, j}};
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  // Eliminates row t and column t outside the pivot; returns false if the pivot changed.
  bool clear_cross(std::size_t t) {
    for (std::size_t i = t + 1; i < d_.rows(); ++i) {
      if (d_(i, t) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), d_(i, t).get_mpz_t(), d_(t, t).get_mpz_t());
      add_row(i, t, -q);
      if (d_(i, t) != 0) {
        move_min_to(t);
        return false;
      }
    }
    for (std::size_t j = t + 1; j < d_.cols(); ++j) {
      if (d_(t, j) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), d_(t, j).get_mpz_t(), d_(t, t).get_mpz_t());
      add_col(j, t, -q);
      if (d_(t, j) != 0) {
        move_min_to(t);
        return false;
      }
    }
    return true;
  }

  bool fix_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < d_.rows(); ++i)
      for (std::size_t j = t + 1; j < d_.cols(); ++j)
        if (d_(i, j) % d_(t, t) != 0) {
          add_row(t, i, 1);
          return false;
        }
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < d_.cols(); ++c) std::swap(d_(a, c), d_(b, c));
    for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(a, c), u_(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < d_.rows(); ++r) std::swap(d_(r, a), d_(r, b));
    for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, a), v_(r, b));
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_(dst, c) += k * d_(src, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(dst, c) += k * u_(src, c);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t r = 0; r < d_.rows(); ++r) d_(r, dst) += k * d_(r, src);
    for (std::size_t r = 0; r < v_.rows(); ++r) v_(r, dst) += k * v_(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_(r, c) = -d_(r, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(r, c) = -u_(r, c);
  }

  IntMatrix d_, u_, v_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) { return Reducer(m).run(); }

std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  std::size_t r = 0;
  for (const auto& x : s.diagonal())
    if (x != 0) ++r;
  std::vector<std::vector<Integer>> out;
  for (std::size_t j = r; j < m.cols(); ++j) {
    std::vector<Integer> col(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) col[i] = s.v(i, j);
    out.push_back(std::move(col));
  }
  return out;
}

}  // namespace hinv
