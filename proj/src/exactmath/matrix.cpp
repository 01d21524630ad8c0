#include "primeul/exactmath/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace primeul::exact {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<RatVector> RatMatrix::row_list() const {
  std::vector<RatVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

void RatMatrix::append_row(const RatVector& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
  RatMatrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += a * other(k, j);
    }
  }
  return p;
}

RatVector RatMatrix::apply(const RatVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector length mismatch");
  RatVector y(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(x[j]) != 0) y[i] += (*this)(i, j) * x[j];
    }
  }
  return y;
}

namespace {

// In-place Gauss-Jordan; returns pivot columns. Rows beyond the rank end up zero.
std::vector<std::size_t> reduce(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
    }
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (sgn(m(lead_row, j)) != 0) m(r, j) -= f * m(lead_row, j);
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

}  // namespace

RatMatrix rref(const RatMatrix& m) {
  RatMatrix work = m;
  const auto pivots = reduce(work);
  RatMatrix out(0, m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) out.append_row(work.row(r));
  return out;
}

std::size_t matrix_rank(const RatMatrix& m) {
  RatMatrix work = m;
  return reduce(work).size();
}

RatMatrix kernel(const RatMatrix& m) {
  RatMatrix work = m;
  const auto pivots = reduce(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  RatMatrix basis(0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work(r, free);
    basis.append_row(v);
  }
  return rref(basis);
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(const std::vector<RatVector>& vectors, std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = rref(RatMatrix::from_rows(vectors, ambient_dim));
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = RatMatrix::identity(ambient_dim);
  return s;
}

Subspace Subspace::solutions(const std::vector<RatVector>& normals, std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = kernel(RatMatrix::from_rows(normals, ambient_dim));
  return s;
}

bool Subspace::contains(const RatVector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("ambient dimension mismatch");
  // Reduce v against the rref basis: pivot of row r is its first nonzero entry.
  RatVector w = v;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t p = 0;
    while (sgn(basis_(r, p)) == 0) ++p;
    if (sgn(w[p]) == 0) continue;
    const Rational f = w[p];
    for (std::size_t j = p; j < ambient_dim_; ++j) {
      if (sgn(basis_(r, j)) != 0) w[j] -= f * basis_(r, j);
    }
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw std::invalid_argument("ambient dimension mismatch");
  for (std::size_t r = 0; r < other.basis_.rows(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Subspace Subspace::orthogonal_complement() const {
  Subspace s(ambient_dim_);
  s.basis_ = kernel(basis_);
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw std::invalid_argument("ambient dimension mismatch");
  auto eqs = orthogonal_complement().basis_.row_list();
  for (auto& r : other.orthogonal_complement().basis_.row_list()) eqs.push_back(std::move(r));
  return solutions(eqs, ambient_dim_);
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw std::invalid_argument("ambient dimension mismatch");
  auto rows = basis_.row_list();
  for (auto& r : other.basis_.row_list()) rows.push_back(std::move(r));
  return span(rows, ambient_dim_);
}

}  // namespace primeul::exact
