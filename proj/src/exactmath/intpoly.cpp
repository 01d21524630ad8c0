#include "primeul/exactmath/intpoly.hpp"

#include <cctype>
#include <stdexcept>

#include "primeul/errors.hpp"

namespace primeul::exact {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = c;
  return IntPoly(std::move(v));
}

const BigInt& IntPoly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

void IntPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const BigInt& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result = constant(1);
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::reversed(std::size_t n) const {
  if (degree() > static_cast<int>(n)) throw std::invalid_argument("reversal degree below polynomial degree");
  if (is_zero()) return {};
  std::vector<BigInt> r(n + 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[n - i] = c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::compose(const IntPoly& q) const {
  IntPoly result;
  for (std::size_t i = c_.size(); i-- > 0;) {
    result = result * q + constant(c_[i]);
  }
  return result;
}

Rational IntPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

int IntPoly::sign_at(const Rational& x) const {
  // p(a/b) * b^d = sum c_i a^i b^(d-i) with b > 0.
  if (c_.empty()) return 0;
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  BigInt acc = 0;
  BigInt bpow = 1;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * a + c_[i] * bpow;
    bpow *= b;
  }
  return sgn(acc);
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : c_) g = gcd(g, c);
  if (!c_.empty() && sgn(c_.back()) < 0) g = -g;
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (c_.empty()) return {};
  const BigInt g = content();
  std::vector<BigInt> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(r[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(r));
}

bool IntPoly::has_nonnegative_coefficients() const {
  for (const auto& c : c_) {
    if (sgn(c) < 0) return false;
  }
  return true;
}

std::string IntPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t d = c_.size(); d-- > 0;) {
    const BigInt& c = c_[d];
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const BigInt mag = abs(c);
    if (mag != 1 || d == 0) out += mag.get_str();
    if (d >= 1) out += var;
    if (d >= 2) out += "^" + std::to_string(d);
    first = false;
  }
  return out;
}

IntPoly z_minus_one_pow(unsigned k) { return IntPoly{-1, 1}.pow(k); }

IntPoly parse_intpoly(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ParseError("empty polynomial");
  IntPoly result;
  std::size_t i = 0;
  char var = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw ParseError("expected '+' or '-' in polynomial '" + std::string(text) + "'");
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    BigInt coef = start == i ? BigInt(1) : BigInt(s.substr(start, i - start), 10);
    std::size_t degree = 0;
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      if (var != 0 && s[i] != var) throw ParseError("mixed variables in polynomial");
      var = s[i++];
      degree = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t ds = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (ds == i) throw ParseError("missing exponent in polynomial");
        degree = std::stoul(s.substr(ds, i - ds));
      }
    } else if (start == i) {
      throw ParseError("malformed term in polynomial '" + std::string(text) + "'");
    }
    result += IntPoly::monomial(coef * sign, degree);
  }
  return result;
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(const IntPoly& p) {
  for (const auto& c : p.coeffs()) c_.emplace_back(c);
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

void RatPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(out));
}

bool RatPoly::is_integral() const {
  for (const auto& c : c_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

IntPoly RatPoly::to_intpoly() const {
  if (!is_integral()) throw std::domain_error("polynomial has non-integer coefficients");
  std::vector<BigInt> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.get_num());
  return IntPoly(std::move(v));
}

void RatPoly::divide(const RatPoly& a, const RatPoly& b, RatPoly& quotient, RatPoly& remainder) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.c_;
  const int db = b.degree();
  std::vector<Rational> q(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0,
                          Rational(0));
  for (int d = a.degree(); d >= db; --d) {
    const Rational f = r[static_cast<std::size_t>(d)] / b.c_.back();
    if (sgn(f) == 0) continue;
    q[static_cast<std::size_t>(d - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(d - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
  }
  quotient = RatPoly(std::move(q));
  remainder = RatPoly(std::move(r));
}

}  // namespace primeul::exact
