#pragma once

#include <cstddef>
#include <vector>

#include "primeul/exactmath/intpoly.hpp"

namespace primeul::exact {

/// Sum_{n<=N} c_n(z) x^n / n! with c_n in Q[z]; everything past x^N is dropped.
class TruncatedEgf {
 public:
  static constexpr std::size_t kDefaultOrder = 8;

  explicit TruncatedEgf(std::size_t order = kDefaultOrder);
  /// Missing coefficients are zero; extra ones are dropped.
  TruncatedEgf(std::size_t order, std::vector<RatPoly> coeffs);
  static TruncatedEgf constant(std::size_t order, const RatPoly& c);
  /// p(z) * x
  static TruncatedEgf linear(std::size_t order, const RatPoly& p);

  std::size_t order() const { return c_.size() - 1; }
  const RatPoly& coeff(std::size_t n) const { return c_.at(n); }
  const std::vector<RatPoly>& coeffs() const { return c_; }

  TruncatedEgf& operator+=(const TruncatedEgf& o);
  TruncatedEgf& operator-=(const TruncatedEgf& o);
  friend TruncatedEgf operator+(TruncatedEgf a, const TruncatedEgf& b) { return a += b; }
  friend TruncatedEgf operator-(TruncatedEgf a, const TruncatedEgf& b) { return a -= b; }
  bool operator==(const TruncatedEgf& o) const = default;

 private:
  std::vector<RatPoly> c_;
};

TruncatedEgf egf_mul(const TruncatedEgf& a, const TruncatedEgf& b);
/// Requires a zero constant coefficient.
TruncatedEgf egf_exp(const TruncatedEgf& f);
/// Requires constant coefficient 1.
TruncatedEgf egf_log(const TruncatedEgf& f);
/// Requires constant coefficient 1; the root with constant coefficient 1.
TruncatedEgf egf_sqrt(const TruncatedEgf& f);
/// f(z, c x)
TruncatedEgf egf_scale_x(const TruncatedEgf& f, const Rational& c);
/// Requires the constant coefficient of b to be a nonzero rational constant.
TruncatedEgf egf_div(const TruncatedEgf& a, const TruncatedEgf& b);
/// n! [x^n] f, a polynomial in z.
const RatPoly& egf_coeff(const TruncatedEgf& f, std::size_t n);

}  // namespace primeul::exact
