#include "primeul/exactmath/rational.hpp"

#include <cctype>

#include "primeul/errors.hpp"

namespace primeul::exact {

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(parse_integer(num_text));
  } else {
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text)) {
      throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
    const BigInt den = parse_integer(den_text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    q = Rational(parse_integer(num_text), den);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

int normalize_primitive(RatVector& v) {
  BigInt lcm_den = 1;
  for (const auto& x : v) lcm_den = lcm(lcm_den, BigInt(x.get_den()));
  std::vector<BigInt> ints(v.size());
  BigInt g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (lcm_den / v[i].get_den());
    g = gcd(g, ints[i]);
  }
  if (g == 0) return 0;
  int s = 1;
  for (const auto& x : ints) {
    if (sgn(x) != 0) {
      s = sgn(x);
      break;
    }
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    BigInt e = ints[i] / g;
    if (s < 0) e = -e;
    v[i] = Rational(e);
  }
  return s;
}

}  // namespace primeul::exact
