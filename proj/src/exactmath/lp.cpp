#include "primeul/exactmath/lp.hpp"

#include <stdexcept>

#include "primeul/exactmath/matrix.hpp"

namespace primeul::exact {

namespace {

// Dense tableau simplex for
//   maximize t  s.t.  <a_i, p - q> >= t,  t <= 1,  p, q, t >= 0
// over a parametrization y = p - q of the equality subspace. The origin is a
// basic feasible point with t = 0; Bland's rule guarantees termination, and we
// stop at the first basic point with t > 0.
class FeasibilitySimplex {
 public:
  explicit FeasibilitySimplex(const std::vector<RatVector>& rows) : k_(rows.front().size()) {
    const std::size_t s = rows.size();
    m_ = s + 1;
    n_ = 2 * k_ + 1 + m_;
    tab_.assign(m_ * (n_ + 1), Rational(0));
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        if (sgn(rows[i][j]) == 0) continue;
        at(i, j) = -rows[i][j];
        at(i, k_ + j) = rows[i][j];
      }
      at(i, t_col()) = 1;
    }
    at(s, t_col()) = 1;
    rhs(s) = 1;
    for (std::size_t i = 0; i < m_; ++i) {
      at(i, 2 * k_ + 1 + i) = 1;
      basis_.push_back(2 * k_ + 1 + i);
    }
    obj_.assign(n_, Rational(0));
    obj_[t_col()] = -1;
  }

  // Returns y with <a_i, y> > 0 for all rows, or nullopt.
  std::optional<RatVector> solve() {
    while (true) {
      if (auto y = positive_witness()) return y;
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (sgn(obj_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == n_) return std::nullopt;  // optimal with t <= 0
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(at(i, enter)) <= 0) continue;
        Rational ratio = rhs(i) / at(i, enter);
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) throw std::logic_error("feasibility program unbounded");
      pivot(leave, enter);
    }
  }

 private:
  std::size_t t_col() const { return 2 * k_; }
  Rational& at(std::size_t r, std::size_t c) { return tab_[r * (n_ + 1) + c]; }
  Rational& rhs(std::size_t r) { return tab_[r * (n_ + 1) + n_]; }

  std::optional<RatVector> positive_witness() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] != t_col()) continue;
      if (sgn(rhs(i)) <= 0) return std::nullopt;
      RatVector y(k_, Rational(0));
      for (std::size_t r = 0; r < m_; ++r) {
        if (basis_[r] < k_) y[basis_[r]] += rhs(r);
        else if (basis_[r] < 2 * k_) y[basis_[r] - k_] -= rhs(r);
      }
      return y;
    }
    return std::nullopt;
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / at(r, c);
    for (std::size_t j = 0; j <= n_; ++j) {
      if (sgn(tab_[r * (n_ + 1) + j]) != 0) tab_[r * (n_ + 1) + j] *= inv;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || sgn(at(i, c)) == 0) continue;
      const Rational f = at(i, c);
      for (std::size_t j = 0; j <= n_; ++j) {
        const Rational& v = tab_[r * (n_ + 1) + j];
        if (sgn(v) != 0) tab_[i * (n_ + 1) + j] -= f * v;
      }
    }
    if (sgn(obj_[c]) != 0) {
      const Rational f = obj_[c];
      for (std::size_t j = 0; j < n_; ++j) {
        const Rational& v = tab_[r * (n_ + 1) + j];
        if (sgn(v) != 0) obj_[j] -= f * v;
      }
    }
    basis_[r] = c;
  }

  std::size_t k_;
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<Rational> tab_;
  std::vector<Rational> obj_;
  std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<RatVector> strict_interior_point(const std::vector<RatVector>& strict,
                                               const std::vector<RatVector>& equalities,
                                               std::size_t dim) {
  for (const auto& a : strict) {
    if (a.size() != dim) throw std::invalid_argument("constraint length mismatch");
  }
  for (const auto& b : equalities) {
    if (b.size() != dim) throw std::invalid_argument("constraint length mismatch");
  }
  // Parametrize the equality subspace by the rows of a kernel basis.
  const RatMatrix chart = equalities.empty() ? RatMatrix::identity(dim)
                                             : kernel(RatMatrix::from_rows(equalities, dim));
  if (strict.empty()) return RatVector(dim, Rational(0));
  const std::size_t k = chart.rows();
  if (k == 0) return std::nullopt;

  std::vector<RatVector> rows;
  rows.reserve(strict.size());
  for (const auto& a : strict) {
    RatVector r = chart.apply(a);
    if (is_zero(r)) return std::nullopt;
    rows.push_back(std::move(r));
  }
  auto y = FeasibilitySimplex(rows).solve();
  if (!y) return std::nullopt;
  RatVector x(dim, Rational(0));
  for (std::size_t i = 0; i < k; ++i) {
    if (sgn((*y)[i]) == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) x[j] += (*y)[i] * chart(i, j);
  }
  return x;
}

bool strict_feasible(const std::vector<RatVector>& strict,
                     const std::vector<RatVector>& equalities, std::size_t dim) {
  return strict_interior_point(strict, equalities, dim).has_value();
}

}  // namespace primeul::exact
