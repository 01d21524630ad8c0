#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primeul/arrangement/flats.hpp"
#include "primeul/errors.hpp"
#include "primeul/exactmath/intpoly.hpp"
#include "primeul/fanface/fan.hpp"

namespace primeul::peul {

using arr::Arrangement;
using arr::FlatLattice;
using exact::IntPoly;
using exact::RatVector;

/// sum over flats of |mu(bottom, X)| (z-1)^(rank - grade X)
IntPoly peul_mobius(const FlatLattice& lat);
IntPoly peul_mobius(const Arrangement& a, Exec exec = Exec::parallel);

/// sum over flats of |mu(bottom, X)| z^(grade X)
IntPoly cocharacteristic(const FlatLattice& lat);
IntPoly cocharacteristic(const Arrangement& a, Exec exec = Exec::parallel);

/// (z-1)^r psi(1/(z-1)); throws PreconditionError if deg psi > r.
IntPoly peul_from_cochar(const IntPoly& psi, std::size_t r);

/// Deletion-restriction style recursion on the first hyperplane.
IntPoly peul_recursive(const Arrangement& a);

/// The two summands of one recursion step on the first hyperplane:
/// (z-1) P of the restriction, and the sum over localizations at rank-1
/// flats off that hyperplane. Requires a nonempty arrangement.
struct RecursionSplit {
  IntPoly restriction_term;
  IntPoly localization_sum;
};
RecursionSplit recursion_split(const Arrangement& a);

/// Thrown when the regions of the halfspace are not an upper set of the weak
/// order based at the region of v.
class UpperSetViolation : public PreconditionError {
 public:
  UpperSetViolation(const std::string& what, std::size_t lower, std::size_t upper)
      : PreconditionError(what), lower_region(lower), upper_region(upper) {}
  std::size_t lower_region;  // face index inside the halfspace
  std::size_t upper_region;  // covers lower_region, outside the halfspace
};

/// sum over faces inside {<v,x> <= 0} of z^(grade of the face).
IntPoly cochar_via_halfspace(const fan::FanIndex& fan, const RatVector& v, Exec exec = Exec::parallel);
IntPoly cochar_via_halfspace(const Arrangement& a, const RatVector& v, Exec exec = Exec::parallel);

/// sum over regions inside {<v,x> <= 0} of z^des, base region = region of v.
/// Requires v very generic and the arrangement simplicial; the upper-set
/// property is checked and a violation throws UpperSetViolation.
IntPoly peul_via_descents(const fan::FanIndex& fan, const RatVector& v, Exec exec = Exec::parallel);
IntPoly peul_via_descents(const Arrangement& a, const RatVector& v, Exec exec = Exec::parallel);

/// h-polynomial of the halfspace subcomplex from its f-vector, at rank r.
IntPoly h_polynomial(const std::vector<exact::BigInt>& f, std::size_t r);
/// z^r h(1/z) == peul_mobius for the halfspace subcomplex of v.
bool h_poly_relation_check(const Arrangement& a, const RatVector& v, Exec exec = Exec::parallel);

/// sum over all regions of z^des; requires a simplicial fan.
IntPoly eulerian_poly(const fan::FanIndex& fan, std::size_t base);
IntPoly eulerian_poly(const Arrangement& a);

/// Canonical test vector of a family name ("A n", "B n", "D n", "Dnk n k"),
/// before any perturbation.
std::optional<RatVector> canonical_vector(std::string_view family);

/// v + eps * u with u projected onto the complement of the bottom, eps > 0
/// small enough that no sign of v against a hyperplane or rank-1 flat
/// changes; the result is very generic. Throws PreconditionError when v is
/// not halfspace generic or no eps works.
RatVector perturb(const Arrangement& a, const FlatLattice& lat, const RatVector& v, const RatVector& u);

struct GenericChoice {
  RatVector v;
  std::string how;  // "given", "perturbed" or "random"
};
/// The first candidate that is very generic (perturbing halfspace-generic
/// candidates along (1, 2, ..., n)), else seeded random small vectors.
GenericChoice find_very_generic(const Arrangement& a, const FlatLattice& lat, const std::vector<RatVector>& candidates,
                                std::uint64_t seed = 0x5eed);

}  // namespace primeul::peul
