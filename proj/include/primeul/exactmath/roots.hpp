#pragma once

#include <cstddef>
#include <vector>

#include "primeul/exactmath/intpoly.hpp"

namespace primeul::exact {

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// Exact quotient a / b for b dividing a over Q, returned as a primitive
/// integer polynomial (so only defined up to a positive constant).
IntPoly exact_quotient_primitive(const IntPoly& a, const IntPoly& b);

/// Primitive square-free part p / gcd(p, p').
IntPoly squarefree_part(const IntPoly& p);

/// The chain p, gcd(p,p'), gcd of that with its derivative, ... down to a
/// constant. A root of multiplicity m appears in the first m entries.
std::vector<IntPoly> derivative_gcd_chain(const IntPoly& p);

/// Sturm chain with sign-corrected pseudo-remainders, each divided by its
/// content.
std::vector<IntPoly> sturm_chain(const IntPoly& p);

/// Distinct roots of the square-free polynomial behind `chain` in (a, b].
std::size_t sturm_count(const std::vector<IntPoly>& chain, const Rational& a, const Rational& b);

std::size_t distinct_real_root_count(const IntPoly& p);

/// Real roots counted with multiplicity. Throws std::domain_error on zero.
std::size_t real_root_count(const IntPoly& p);

bool is_real_rooted(const IntPoly& p);

/// Half-open interval (lo, hi] holding exactly one root.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Isolating intervals for the distinct real roots of p, in increasing order.
std::vector<RootInterval> isolate_real_roots(const IntPoly& p);

/// True iff roots a_1 <= ... <= a_d of f and b_1 <= ... <= b_{d-1} of g
/// satisfy a_i <= b_i <= a_{i+1}. Throws PreconditionError unless deg g =
/// deg f - 1 and both are real-rooted.
bool interlaces(const IntPoly& g, const IntPoly& f);

}  // namespace primeul::exact
