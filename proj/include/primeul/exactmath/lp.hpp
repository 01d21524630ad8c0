#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "primeul/exactmath/rational.hpp"

namespace primeul::exact {

/// Decides exactly whether some x in Q^dim satisfies <a, x> > 0 for every a in
/// `strict` and <b, x> = 0 for every b in `equalities`. The open cone it tests
/// is nonempty iff this returns true.
bool strict_feasible(const std::vector<RatVector>& strict,
                     const std::vector<RatVector>& equalities, std::size_t dim);

/// Same decision, returning a point of the open cone when one exists.
std::optional<RatVector> strict_interior_point(const std::vector<RatVector>& strict,
                                               const std::vector<RatVector>& equalities,
                                               std::size_t dim);

}  // namespace primeul::exact
