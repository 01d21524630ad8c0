#include "primeul/exactmath/roots.hpp"

#include <stdexcept>

#include "primeul/errors.hpp"

namespace primeul::exact {

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, over Z.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const int db = b.degree();
  const BigInt& lb = b.leading();
  int steps = a.degree() - db + 1;
  while (!a.is_zero() && a.degree() >= db) {
    const BigInt la = a.leading();
    const auto shift = static_cast<std::size_t>(a.degree() - db);
    a *= lb;
    a -= IntPoly::monomial(la, shift) * b;
    --steps;
  }
  // Skipped steps still owe their factor so the sign is lc(b)^delta.
  for (; steps > 0; --steps) a *= lb;
  return a;
}

int sign_changes(const std::vector<IntPoly>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Every root has absolute value strictly below this.
Rational cauchy_bound(const IntPoly& p) {
  BigInt top = 0;
  for (const auto& c : p.coeffs()) {
    if (abs(c) > top) top = abs(c);
  }
  return Rational(1) + Rational(top, abs(p.leading()));
}

void bisect(const std::vector<IntPoly>& chain, const Rational& lo, const Rational& hi,
            std::size_t count, std::vector<RootInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  const Rational mid = (lo + hi) / 2;
  const std::size_t left = sturm_count(chain, lo, mid);
  bisect(chain, lo, mid, left, out);
  bisect(chain, mid, hi, count - left, out);
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

IntPoly exact_quotient_primitive(const IntPoly& a, const IntPoly& b) {
  RatPoly q, r;
  RatPoly::divide(RatPoly(a), RatPoly(b), q, r);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  BigInt den = 1;
  for (const auto& c : q.coeffs()) den = lcm(den, BigInt(c.get_den()));
  q *= Rational(den);
  return q.to_intpoly().primitive_part();
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 0) return p.primitive_part();
  return exact_quotient_primitive(p, poly_gcd(p, p.derivative()));
}

std::vector<IntPoly> derivative_gcd_chain(const IntPoly& p) {
  std::vector<IntPoly> chain;
  IntPoly g = p.primitive_part();
  while (g.degree() > 0) {
    chain.push_back(g);
    g = poly_gcd(g, g.derivative());
  }
  return chain;
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain{p.primitive_part()};
  if (p.degree() <= 0) return chain;
  chain.push_back(p.derivative().primitive_part());
  while (true) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^delta * rem with delta = deg a - deg b + 1; we need -rem.
    const int delta = a.degree() - b.degree() + 1;
    const bool flip = (delta % 2 == 0) || sgn(b.leading()) > 0;
    IntPoly next = r.primitive_part();
    if (sgn(next.leading()) != sgn(r.leading())) next = -next;
    if (flip) next = -next;
    chain.push_back(std::move(next));
    if (chain.back().degree() == 0) break;
  }
  return chain;
}

std::size_t sturm_count(const std::vector<IntPoly>& chain, const Rational& a, const Rational& b) {
  if (b <= a) return 0;
  return static_cast<std::size_t>(sign_changes(chain, a) - sign_changes(chain, b));
}

std::size_t distinct_real_root_count(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
  if (p.degree() == 0) return 0;
  const IntPoly s = squarefree_part(p);
  const Rational bound = cauchy_bound(s);
  return sturm_count(sturm_chain(s), -bound, bound);
}

std::size_t real_root_count(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
  std::size_t total = 0;
  for (const auto& g : derivative_gcd_chain(p)) total += distinct_real_root_count(g);
  return total;
}

bool is_real_rooted(const IntPoly& p) {
  return real_root_count(p) == static_cast<std::size_t>(p.degree());
}

std::vector<RootInterval> isolate_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;
  const IntPoly s = squarefree_part(p);
  const auto chain = sturm_chain(s);
  const Rational bound = cauchy_bound(s);
  bisect(chain, -bound, bound, sturm_count(chain, -bound, bound), out);
  return out;
}

namespace {

// Roots of p with multiplicity, as indices into the isolating intervals of a
// common square-free multiple.
std::vector<std::size_t> root_indices(const IntPoly& p, const std::vector<RootInterval>& cells) {
  std::vector<std::vector<IntPoly>> chains;
  for (const auto& g : derivative_gcd_chain(p)) chains.push_back(sturm_chain(squarefree_part(g)));
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < cells.size(); ++j) {
    for (const auto& ch : chains) {
      if (sturm_count(ch, cells[j].lo, cells[j].hi) == 0) break;
      idx.push_back(j);
    }
  }
  return idx;
}

}  // namespace

bool interlaces(const IntPoly& g, const IntPoly& f) {
  if (f.is_zero() || g.is_zero() || g.degree() != f.degree() - 1) {
    throw PreconditionError("interlacing needs deg g = deg f - 1");
  }
  if (!is_real_rooted(f) || !is_real_rooted(g)) {
    throw PreconditionError("interlacing needs real-rooted inputs");
  }
  const auto cells = isolate_real_roots(f * g);
  const auto a = root_indices(f, cells);
  const auto b = root_indices(g, cells);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (a[i] > b[i] || b[i] > a[i + 1]) return false;
  }
  return true;
}

}  // namespace primeul::exact
