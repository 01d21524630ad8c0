#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace primeul::exact {

using BigInt = mpz_class;
using Rational = mpq_class;  // canonical: lowest terms, positive denominator
using RatVector = std::vector<Rational>;

/// Parses "3", "-7", "2/5" or "-4/6" (stored as -2/3). Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

Rational dot(const RatVector& a, const RatVector& b);

/// Scales a nonzero vector to a primitive integer vector (coprime entries)
/// whose first nonzero entry is positive. Returns the sign (+1/-1) of the
/// positive factor that was applied relative to the input direction.
int normalize_primitive(RatVector& v);

bool is_zero(const RatVector& v);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const BigInt& z) { return sgn(z); }

}  // namespace primeul::exact
