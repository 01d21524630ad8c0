#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "primeul/exactmath/matrix.hpp"
#include "primeul/exactmath/rational.hpp"

namespace primeul::arr {

using exact::RatMatrix;
using exact::Rational;
using exact::RatVector;
using exact::Subspace;

/// H = normal^perp with positive side <normal, x> >= 0. The normal is stored
/// as a primitive integer vector whose first nonzero entry is positive.
struct Hyperplane {
  RatVector normal;
  bool operator==(const Hyperplane&) const = default;
};

/// A central arrangement: ambient dimension plus an ordered list of
/// pairwise distinct hyperplanes.
class Arrangement {
 public:
  explicit Arrangement(std::size_t dim = 0) : dim_(dim) {}
  /// Normalizes each normal; throws PreconditionError on a zero normal, a
  /// length mismatch or a repeated hyperplane.
  Arrangement(std::size_t dim, const std::vector<RatVector>& normals);

  /// Appends a hyperplane (normalized). Throws as the constructor does.
  void add(RatVector normal);
  /// Index of the hyperplane normal^perp, adding it if absent. The second
  /// member is the sign relating `normal` to the stored orientation.
  std::pair<std::size_t, int> add_or_find(RatVector normal);
  std::optional<std::size_t> find(RatVector normal) const;

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return h_.size(); }
  bool empty() const { return h_.empty(); }
  const Hyperplane& operator[](std::size_t i) const { return h_[i]; }
  const std::vector<Hyperplane>& hyperplanes() const { return h_; }
  std::vector<RatVector> normals() const;

  /// Codimension of the intersection of all hyperplanes.
  std::size_t rank() const;
  bool is_essential() const { return rank() == dim_; }
  /// The intersection of all hyperplanes.
  Subspace bottom() const;

  bool operator==(const Arrangement&) const = default;

 private:
  std::size_t dim_;
  std::vector<Hyperplane> h_;
};

/// Coordinates of a linear subspace: the rows of `chart` are a basis, and a
/// hyperplane H not containing the subspace becomes (<n_H, b_i>)_i there.
struct ChartedArrangement {
  Arrangement arrangement;
  RatMatrix chart;
  /// For each original hyperplane: index in `arrangement`, or -1 when the
  /// hyperplane contains the whole subspace.
  std::vector<long> index;
  /// Sign s with sign<n_H, x> = s * sign<n'_index, c> for x = c^T chart.
  std::vector<int> orientation;

  /// Point of the ambient space with chart coordinates c.
  RatVector lift(const RatVector& c) const;
  /// Chart coordinates of a linear functional restricted to the subspace.
  RatVector pull_back(const RatVector& functional) const;
};

/// Restriction to the subspace spanned by `basis_rows`.
ChartedArrangement restrict_to(const Arrangement& a, const RatMatrix& basis_rows);

/// Intersection with the orthogonal complement of the bottom; ambient
/// dimension becomes the rank, lattice is unchanged.
ChartedArrangement essentialization(const Arrangement& a);
Arrangement essentialize(const Arrangement& a);

/// Block-diagonal product in dimension dim a + dim b.
Arrangement product(const Arrangement& a, const Arrangement& b);

/// Equation for display: "x1=x2", "x1+x2=0", "x3=0", "2x1=x2+x3".
std::string hyperplane_equation(const Hyperplane& h);

}  // namespace primeul::arr
