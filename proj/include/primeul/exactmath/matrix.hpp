#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "primeul/exactmath/rational.hpp"

namespace primeul::exact {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  /// All rows must share one length; `cols` fixes the width when `rows` is empty.
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  std::vector<RatVector> row_list() const;
  void append_row(const RatVector& v);

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& other) const;
  RatVector apply(const RatVector& x) const;  // M x

  bool operator==(const RatMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row-echelon form with zero rows removed. Unique per row space.
RatMatrix rref(const RatMatrix& m);

std::size_t matrix_rank(const RatMatrix& m);

/// Basis (as rows, in canonical form) of {x : m x = 0}.
RatMatrix kernel(const RatMatrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// A linear subspace of Q^n stored by a canonical (rref) basis of row vectors.
/// Two subspaces compare equal iff their canonical bases are identical.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);  // the zero subspace
  static Subspace span(const std::vector<RatVector>& vectors, std::size_t ambient_dim);
  static Subspace whole(std::size_t ambient_dim);
  /// {x : <a, x> = 0 for every a in normals}
  static Subspace solutions(const std::vector<RatVector>& normals, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }

  bool contains(const RatVector& v) const;
  bool contains(const Subspace& other) const;
  Subspace orthogonal_complement() const;

  /// Throws std::invalid_argument on ambient-dimension mismatch.
  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  bool operator==(const Subspace& other) const = default;

 private:
  std::size_t ambient_dim_;
  RatMatrix basis_;
};

}  // namespace primeul::exact
