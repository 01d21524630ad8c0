#include "primeul/exactmath/egf.hpp"

#include <algorithm>
#include <stdexcept>

#include "primeul/errors.hpp"

namespace primeul::exact {

namespace {

std::vector<std::vector<BigInt>> binomials(std::size_t n) {
  std::vector<std::vector<BigInt>> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    c[i].assign(i + 1, BigInt(1));
    for (std::size_t k = 1; k < i; ++k) c[i][k] = c[i - 1][k - 1] + c[i - 1][k];
  }
  return c;
}

void check_same_order(const TruncatedEgf& a, const TruncatedEgf& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series orders differ");
}

bool is_one(const RatPoly& p) { return p == RatPoly::constant(1); }

}  // namespace

TruncatedEgf::TruncatedEgf(std::size_t order) : c_(order + 1) {}

TruncatedEgf::TruncatedEgf(std::size_t order, std::vector<RatPoly> coeffs) : c_(std::move(coeffs)) {
  c_.resize(order + 1);
}

TruncatedEgf TruncatedEgf::constant(std::size_t order, const RatPoly& c) {
  TruncatedEgf f(order);
  f.c_[0] = c;
  return f;
}

TruncatedEgf TruncatedEgf::linear(std::size_t order, const RatPoly& p) {
  TruncatedEgf f(order);
  if (order >= 1) f.c_[1] = p;
  return f;
}

TruncatedEgf& TruncatedEgf::operator+=(const TruncatedEgf& o) {
  check_same_order(*this, o);
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += o.c_[n];
  return *this;
}

TruncatedEgf& TruncatedEgf::operator-=(const TruncatedEgf& o) {
  check_same_order(*this, o);
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= o.c_[n];
  return *this;
}

TruncatedEgf egf_mul(const TruncatedEgf& a, const TruncatedEgf& b) {
  check_same_order(a, b);
  const std::size_t N = a.order();
  const auto C = binomials(N);
  std::vector<RatPoly> out(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      if (a.coeff(k).is_zero() || b.coeff(n - k).is_zero()) continue;
      out[n] += a.coeff(k) * b.coeff(n - k) * Rational(C[n][k]);
    }
  }
  return TruncatedEgf(N, std::move(out));
}

TruncatedEgf egf_exp(const TruncatedEgf& f) {
  if (!f.coeff(0).is_zero()) throw PreconditionError("exp needs a zero constant term");
  const std::size_t N = f.order();
  const auto C = binomials(N);
  // g' = f' g
  std::vector<RatPoly> g(N + 1);
  g[0] = RatPoly::constant(1);
  for (std::size_t n = 0; n < N; ++n) {
    for (std::size_t k = 0; k <= n; ++k) g[n + 1] += f.coeff(k + 1) * g[n - k] * Rational(C[n][k]);
  }
  return TruncatedEgf(N, std::move(g));
}

TruncatedEgf egf_log(const TruncatedEgf& f) {
  if (!is_one(f.coeff(0))) throw PreconditionError("log needs constant term 1");
  const std::size_t N = f.order();
  const auto C = binomials(N);
  // f' = h' f
  std::vector<RatPoly> h(N + 1);
  for (std::size_t n = 0; n < N; ++n) {
    RatPoly acc = f.coeff(n + 1);
    for (std::size_t k = 0; k < n; ++k) acc -= h[k + 1] * f.coeff(n - k) * Rational(C[n][k]);
    h[n + 1] = std::move(acc);
  }
  return TruncatedEgf(N, std::move(h));
}

TruncatedEgf egf_sqrt(const TruncatedEgf& f) {
  if (!is_one(f.coeff(0))) throw PreconditionError("sqrt needs constant term 1");
  const std::size_t N = f.order();
  const auto C = binomials(N);
  std::vector<RatPoly> r(N + 1);
  r[0] = RatPoly::constant(1);
  for (std::size_t n = 1; n <= N; ++n) {
    RatPoly acc = f.coeff(n);
    for (std::size_t k = 1; k < n; ++k) acc -= r[k] * r[n - k] * Rational(C[n][k]);
    r[n] = acc * Rational(1, 2);
  }
  return TruncatedEgf(N, std::move(r));
}

TruncatedEgf egf_scale_x(const TruncatedEgf& f, const Rational& c) {
  std::vector<RatPoly> out(f.coeffs());
  Rational p = 1;
  for (auto& t : out) {
    t *= p;
    p *= c;
  }
  return TruncatedEgf(f.order(), std::move(out));
}

TruncatedEgf egf_div(const TruncatedEgf& a, const TruncatedEgf& b) {
  check_same_order(a, b);
  const RatPoly& b0 = b.coeff(0);
  if (!b0.is_constant() || b0.is_zero()) {
    throw PreconditionError("division needs a nonzero rational constant term");
  }
  const Rational inv = 1 / b0.coeff(0);
  const std::size_t N = a.order();
  const auto C = binomials(N);
  std::vector<RatPoly> q(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    RatPoly acc = a.coeff(n);
    for (std::size_t k = 1; k <= n; ++k) acc -= b.coeff(k) * q[n - k] * Rational(C[n][k]);
    q[n] = acc * inv;
  }
  return TruncatedEgf(N, std::move(q));
}

const RatPoly& egf_coeff(const TruncatedEgf& f, std::size_t n) {
  if (n > f.order()) throw std::out_of_range("coefficient beyond series order");
  return f.coeff(n);
}

}  // namespace primeul::exact
