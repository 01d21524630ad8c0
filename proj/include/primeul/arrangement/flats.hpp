#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "primeul/arrangement/arrangement.hpp"
#include "primeul/arrangement/index_set.hpp"
#include "primeul/exactmath/intpoly.hpp"
#include "primeul/parallel.hpp"

namespace primeul::arr {

struct Flat {
  Subspace subspace;
  IndexSet containing;   // every H with subspace <= H
  std::size_t grade = 0; // dim X - dim bottom
};

/// All intersections of hyperplanes, ordered by inclusion. Flats are stored
/// by increasing grade (bottom first, top last), ties broken by the
/// containing set.
class FlatLattice {
 public:
  FlatLattice() = default;
  FlatLattice(std::size_t ambient_dim, std::vector<Flat> flats);

  std::size_t size() const { return flats_.size(); }
  const Flat& operator[](std::size_t i) const { return flats_[i]; }
  const std::vector<Flat>& flats() const { return flats_; }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return flats_.size() - 1; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  /// Grade of the top, i.e. rank of the arrangement.
  std::size_t rank() const { return flats_.back().grade; }
  std::size_t codim(std::size_t i) const { return ambient_dim_ - flats_[i].subspace.dim(); }

  /// X_i <= X_j
  bool leq(std::size_t i, std::size_t j) const {
    return flats_[j].containing.is_subset_of(flats_[i].containing);
  }
  std::vector<std::size_t> of_grade(std::size_t g) const;
  std::optional<std::size_t> find(const IndexSet& containing) const;
  std::optional<std::size_t> find(const Subspace& s) const;

  /// mu(bottom, X_i)
  std::int64_t mobius_bottom(std::size_t i) const { return mu_bottom_[i]; }
  /// mu(X_i, top)
  std::int64_t mobius_top(std::size_t i) const { return mu_top_[i]; }

  void compute_mobius(Exec exec);

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Flat> flats_;
  std::vector<std::int64_t> mu_bottom_;
  std::vector<std::int64_t> mu_top_;
  std::unordered_map<IndexSet, std::size_t, IndexSetHash> lookup_;
};

FlatLattice build_flats(const Arrangement& a, Exec exec = Exec::parallel);

/// chi(t) = sum_X mu(X, top) t^dim X
exact::IntPoly characteristic_polynomial(const FlatLattice& lat);
exact::IntPoly characteristic_polynomial(const Arrangement& a);

/// sum_X |mu(X, top)|
exact::BigInt count_regions_zaslavsky(const FlatLattice& lat);
exact::BigInt count_regions_zaslavsky(const Arrangement& a);

/// Flats as arrangements.
Arrangement localization(const Arrangement& a, const Flat& x);
ChartedArrangement restriction(const Arrangement& a, const Flat& x);

/// Why a vector fails to be very generic, if it does.
struct GenericityReport {
  std::optional<std::size_t> on_hyperplane;   // first hyperplane containing v
  bool orthogonal_to_bottom = true;
  std::optional<std::size_t> kills_rank1_flat; // lattice index of a rank-1 flat inside v^perp

  bool halfspace_generic() const { return orthogonal_to_bottom && !kills_rank1_flat; }
  bool very_generic() const { return halfspace_generic() && !on_hyperplane; }
};

GenericityReport genericity(const Arrangement& a, const FlatLattice& lat, const RatVector& v);
bool is_very_generic_vector(const Arrangement& a, const FlatLattice& lat, const RatVector& v);
bool is_very_generic_vector(const Arrangement& a, const RatVector& v);

}  // namespace primeul::arr
