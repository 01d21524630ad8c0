#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "primeul/arrangement/flats.hpp"
#include "primeul/parallel.hpp"

namespace primeul::fan {

using arr::Arrangement;
using arr::FlatLattice;
using arr::IndexSet;
using exact::Rational;
using exact::RatVector;

/// Entries in {-1, 0, +1}, one per hyperplane in arrangement order.
using SignVector = std::vector<std::int8_t>;

struct SignVectorHash {
  std::size_t operator()(const SignVector& s) const;
};

/// Lexicographic with 0 < + < -.
bool sign_less(const SignVector& a, const SignVector& b);

SignVector sign_vector_of(const Arrangement& a, const RatVector& x);

/// An open cone together with a point inside it.
struct Cone {
  SignVector signs;
  RatVector witness;
};

/// Regions by incremental insertion of hyperplanes, sorted by sign vector.
std::vector<Cone> enumerate_regions(const Arrangement& a, Exec exec = Exec::parallel);

struct Face {
  SignVector signs;
  std::size_t flat = 0;  // lattice index of the span of the face
  std::size_t dim = 0;
  RatVector witness;     // a point of the relatively open face
};

struct Wall {
  std::size_t hyperplane;
  std::size_t neighbor;  // face index of the region across it
};

/// The complete fan: every face, sorted by sign vector, with region walls.
class FanIndex {
 public:
  FanIndex(Arrangement a, FlatLattice lattice, std::vector<Face> faces);

  const Arrangement& arrangement() const { return a_; }
  const FlatLattice& lattice() const { return lat_; }
  std::size_t size() const { return faces_.size(); }
  const Face& operator[](std::size_t i) const { return faces_[i]; }
  const std::vector<Face>& faces() const { return faces_; }
  /// Face indices of the regions, in sign order.
  const std::vector<std::size_t>& regions() const { return regions_; }
  bool is_region(std::size_t f) const { return faces_[f].dim == a_.dim(); }
  std::size_t central() const { return central_; }
  std::optional<std::size_t> find(const SignVector& s) const;
  /// Throws std::logic_error when s is not a face.
  std::size_t at(const SignVector& s) const;
  const std::vector<Wall>& walls(std::size_t region) const { return walls_[region]; }
  /// Rank of a face above the bottom.
  std::size_t rank_of(std::size_t f) const { return lat_[faces_[f].flat].grade; }
  /// Faces of rank 1, i.e. the rays modulo the bottom.
  const std::vector<std::size_t>& rank_one_faces() const { return rank_one_; }

 private:
  Arrangement a_;
  FlatLattice lat_;
  std::vector<Face> faces_;
  std::vector<std::size_t> regions_;
  std::vector<std::size_t> rank_one_;
  std::size_t central_ = 0;
  std::vector<std::vector<Wall>> walls_;
  std::unordered_map<SignVector, std::size_t, SignVectorHash> lookup_;
};

/// Regions of every restriction, lifted back; includes the central face.
FanIndex enumerate_faces(const Arrangement& a, Exec exec = Exec::parallel);
FanIndex enumerate_faces(const Arrangement& a, const FlatLattice& lat, Exec exec = Exec::parallel);

std::size_t tits_product(const FanIndex& fan, std::size_t f, std::size_t g);
std::size_t opposite(const FanIndex& fan, std::size_t f);
/// F <= G in the face order.
bool face_leq(const FanIndex& fan, std::size_t f, std::size_t g);
IndexSet separation_set(const FanIndex& fan, std::size_t c, std::size_t d);

/// The region containing v; throws PreconditionError if v is on a hyperplane.
std::size_t region_containing(const FanIndex& fan, const RatVector& v);

/// Weak order on regions with a fixed base region.
class WeakOrder {
 public:
  WeakOrder(const FanIndex& fan, std::size_t base);

  const FanIndex& fan() const { return *fan_; }
  std::size_t base() const { return base_; }
  std::size_t top() const { return top_; }
  const IndexSet& sep(std::size_t region) const { return sep_[region]; }
  bool leq(std::size_t c, std::size_t d) const { return sep_[c].is_subset_of(sep_[d]); }
  std::vector<std::size_t> lower_covers(std::size_t c) const;
  std::vector<std::size_t> upper_covers(std::size_t c) const;
  /// Walls of c separating it from the base.
  std::size_t descents(std::size_t c) const;

 private:
  const FanIndex* fan_;
  std::size_t base_;
  std::size_t top_;
  std::vector<IndexSet> sep_;  // by face index; empty for non-regions
};

/// Closed cone of the region inside {<v, x> <= 0}.
bool region_in_halfspace(const Arrangement& a, const SignVector& region, const RatVector& v);
bool face_in_halfspace(const FanIndex& fan, std::size_t f, const RatVector& v);
/// Face indices in sign order.
std::vector<std::size_t> faces_in_halfspace(const FanIndex& fan, const RatVector& v, Exec exec = Exec::parallel);
std::vector<std::size_t> regions_in_halfspace(const FanIndex& fan, const RatVector& v, Exec exec = Exec::parallel);

struct UpperSetCheck {
  bool upper = true;
  /// (C, D) with C in the set, D covering C and D outside the set.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};
UpperSetCheck is_upper_set(const WeakOrder& w, const std::vector<std::size_t>& regions);

struct TopStar {
  std::vector<std::size_t> regions;
  std::size_t min;
  std::size_t max;
  bool is_interval;  // every member lies between min and max
};
TopStar top_star(const WeakOrder& w, std::size_t f);

/// {F : F opp(B) in delta}, in sign order.
std::vector<std::size_t> descent_set(const WeakOrder& w, const std::vector<std::size_t>& delta);
/// Every maximal face of delta has the same dimension.
bool is_pure(const FanIndex& fan, const std::vector<std::size_t>& delta);

/// Primitive integer vectors spanning the rays of a region of an essential
/// arrangement. Throws PreconditionError otherwise.
std::vector<RatVector> rays_of_region(const FanIndex& fan, std::size_t c);
/// Same, for any arrangement: rays of the region's image in the orthogonal
/// complement of the bottom, in ambient coordinates.
std::vector<RatVector> ray_directions(const FanIndex& fan, std::size_t c);

/// Every region has exactly rank-many walls (a pointed cone with as many
/// facets as its dimension is simplicial).
bool is_simplicial(const FanIndex& fan);
bool is_simplicial(const Arrangement& a);
/// A region whose facet normals meet at an obtuse dual angle, if any. Only
/// meaningful for simplicial fans.
std::optional<std::size_t> non_sharp_region(const FanIndex& fan);
bool is_sharp(const FanIndex& fan);
bool is_sharp(const Arrangement& a);

}  // namespace primeul::fan
