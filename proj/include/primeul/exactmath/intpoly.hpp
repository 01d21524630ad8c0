#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "primeul/exactmath/rational.hpp"

namespace primeul::exact {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored low to high with no trailing zeros (the zero polynomial is empty).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);
  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t degree);
  static IntPoly z() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of z^i (zero beyond the degree).
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& leading() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& s);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend IntPoly operator*(const BigInt& s, IntPoly a) { return a *= s; }
  IntPoly operator-() const;

  bool operator==(const IntPoly& o) const = default;

  IntPoly pow(unsigned e) const;
  IntPoly derivative() const;
  /// z^n p(1/z); requires n >= degree.
  IntPoly reversed(std::size_t n) const;
  /// p(q(z))
  IntPoly compose(const IntPoly& q) const;

  Rational evaluate(const Rational& x) const;
  BigInt evaluate(const BigInt& x) const;
  /// Sign of p(x), computed without forming the rational value.
  int sign_at(const Rational& x) const;

  BigInt content() const;  // gcd of coefficients, sign of leading coefficient
  IntPoly primitive_part() const;

  bool has_nonnegative_coefficients() const;

  /// Human-readable form, highest degree first: "z^3 + 10z^2 + 4z".
  std::string to_string(std::string_view var = "z") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// (z - 1)^k
IntPoly z_minus_one_pow(unsigned k);

/// Parses the output of IntPoly::to_string (any single-letter variable).
IntPoly parse_intpoly(std::string_view text);

/// Polynomial with exact rational coefficients; coefficient ring of the
/// truncated exponential generating series.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  explicit RatPoly(const IntPoly& p);
  static RatPoly constant(const Rational& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const Rational& s);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
  bool operator==(const RatPoly& o) const = default;

  bool is_constant() const { return c_.size() <= 1; }
  bool is_integral() const;
  /// Throws std::domain_error unless every coefficient is an integer.
  IntPoly to_intpoly() const;

  /// Quotient and remainder of Euclidean division by a nonzero divisor.
  static void divide(const RatPoly& a, const RatPoly& b, RatPoly& quotient, RatPoly& remainder);

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace primeul::exact
