#include "primeul/peul/peul.hpp"

#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "primeul/errors.hpp"

namespace primeul::peul {

using exact::BigInt;
using exact::Rational;

namespace {

BigInt abs_mu(std::int64_t m) { return BigInt(static_cast<long>(m < 0 ? -m : m)); }

// x minus its orthogonal projection onto the bottom.
RatVector off_bottom(const FlatLattice& lat, RatVector x) {
  const auto& b = lat[lat.bottom()].subspace.basis();
  if (b.rows() == 0) return x;
  const auto inv = exact::inverse(b * b.transpose());
  const RatVector coef = inv->apply(b.apply(x));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) x[j] -= coef[i] * b(i, j);
  return x;
}

RatVector positive_primitive(RatVector v) {
  if (exact::is_zero(v)) return v;
  if (exact::normalize_primitive(v) < 0)
    for (auto& x : v) x = -x;
  return v;
}

std::string describe(const Arrangement& a, const FlatLattice& lat, const arr::GenericityReport& rep) {
  std::ostringstream os;
  if (!rep.orthogonal_to_bottom) os << "v is not orthogonal to the intersection of all hyperplanes";
  else if (rep.kills_rank1_flat) os << "v is orthogonal to the rank-1 flat #" << *rep.kills_rank1_flat;
  else if (rep.on_hyperplane) os << "v lies on hyperplane " << arr::hyperplane_equation(a[*rep.on_hyperplane]);
  (void)lat;
  return os.str();
}

std::string signs_text(const fan::SignVector& s) {
  std::string out;
  for (auto x : s) out += x == 0 ? '0' : (x > 0 ? '+' : '-');
  return out;
}

IntPoly recursive(const Arrangement& input, std::map<std::vector<RatVector>, IntPoly>& memo) {
  const Arrangement a = input.is_essential() ? input : arr::essentialize(input);
  if (a.size() == 0) return IntPoly::constant(1);
  if (a.dim() == 1) return IntPoly::z();
  auto key = a.normals();
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const auto h = exact::Subspace::solutions({a[0].normal}, a.dim());
  IntPoly p = IntPoly{-1, 1} * recursive(arr::restrict_to(a, h.basis()).arrangement, memo);
  const auto lat = arr::build_flats(a, Exec::serial);
  for (auto l : lat.of_grade(1)) {
    if (!lat[l].containing.contains(0)) p += recursive(arr::localization(a, lat[l]), memo);
  }
  memo.emplace(std::move(key), p);
  return p;
}

}  // namespace

IntPoly peul_mobius(const FlatLattice& lat) {
  const std::size_t r = lat.rank();
  std::vector<BigInt> mass(r + 1, BigInt(0));
  for (std::size_t i = 0; i < lat.size(); ++i) mass[lat[i].grade] += abs_mu(lat.mobius_bottom(i));
  IntPoly p;
  for (std::size_t g = 0; g <= r; ++g) p += mass[g] * exact::z_minus_one_pow(static_cast<unsigned>(r - g));
  return p;
}

IntPoly peul_mobius(const Arrangement& a, Exec exec) { return peul_mobius(arr::build_flats(a, exec)); }

IntPoly cocharacteristic(const FlatLattice& lat) {
  std::vector<BigInt> c(lat.rank() + 1, BigInt(0));
  for (std::size_t i = 0; i < lat.size(); ++i) c[lat[i].grade] += abs_mu(lat.mobius_bottom(i));
  return IntPoly(std::move(c));
}

IntPoly cocharacteristic(const Arrangement& a, Exec exec) { return cocharacteristic(arr::build_flats(a, exec)); }

IntPoly peul_from_cochar(const IntPoly& psi, std::size_t r) {
  if (psi.degree() > static_cast<int>(r)) throw PreconditionError("cocharacteristic degree exceeds the rank");
  IntPoly p;
  for (std::size_t i = 0; i < psi.coeffs().size(); ++i)
    p += psi.coeff(i) * exact::z_minus_one_pow(static_cast<unsigned>(r - i));
  return p;
}

IntPoly peul_recursive(const Arrangement& a) {
  std::map<std::vector<RatVector>, IntPoly> memo;
  return recursive(a, memo);
}

RecursionSplit recursion_split(const Arrangement& input) {
  if (input.size() == 0) throw PreconditionError("recursion needs at least one hyperplane");
  const Arrangement a = input.is_essential() ? input : arr::essentialize(input);
  std::map<std::vector<RatVector>, IntPoly> memo;
  RecursionSplit s;
  const auto h = exact::Subspace::solutions({a[0].normal}, a.dim());
  s.restriction_term = IntPoly{-1, 1} * recursive(arr::restrict_to(a, h.basis()).arrangement, memo);
  const auto lat = arr::build_flats(a, Exec::serial);
  for (auto l : lat.of_grade(1)) {
    if (!lat[l].containing.contains(0)) s.localization_sum += recursive(arr::localization(a, lat[l]), memo);
  }
  return s;
}

IntPoly cochar_via_halfspace(const fan::FanIndex& fan, const RatVector& v, Exec exec) {
  const auto& a = fan.arrangement();
  const auto rep = arr::genericity(a, fan.lattice(), v);
  if (!rep.halfspace_generic()) throw PreconditionError("halfspace not generic: " + describe(a, fan.lattice(), rep));
  std::vector<BigInt> c(fan.lattice().rank() + 1, BigInt(0));
  for (auto f : fan::faces_in_halfspace(fan, v, exec)) c[fan.rank_of(f)] += 1;
  return IntPoly(std::move(c));
}

IntPoly cochar_via_halfspace(const Arrangement& a, const RatVector& v, Exec exec) {
  return cochar_via_halfspace(fan::enumerate_faces(a, exec), v, exec);
}

IntPoly peul_via_descents(const fan::FanIndex& fan, const RatVector& v, Exec exec) {
  const auto& a = fan.arrangement();
  const auto rep = arr::genericity(a, fan.lattice(), v);
  if (!rep.very_generic()) throw PreconditionError("v is not very generic: " + describe(a, fan.lattice(), rep));
  if (!fan::is_simplicial(fan)) throw PreconditionError("descent path needs a simplicial arrangement");
  const fan::WeakOrder w(fan, fan::region_containing(fan, v));
  const auto regions = fan::regions_in_halfspace(fan, v, exec);
  const auto check = fan::is_upper_set(w, regions);
  if (!check.upper) {
    const auto [lo, hi] = *check.violation;
    throw UpperSetViolation("regions in the halfspace are not an upper set: " + signs_text(fan[lo].signs) +
                                " is covered by " + signs_text(fan[hi].signs),
                            lo, hi);
  }
  std::vector<std::size_t> des(regions.size());
  parallel_for(regions.size(), exec, [&](std::size_t i) { des[i] = w.descents(regions[i]); });
  std::vector<BigInt> c(fan.lattice().rank() + 1, BigInt(0));
  for (auto d : des) c[d] += 1;
  return IntPoly(std::move(c));
}

IntPoly peul_via_descents(const Arrangement& a, const RatVector& v, Exec exec) {
  return peul_via_descents(fan::enumerate_faces(a, exec), v, exec);
}

IntPoly h_polynomial(const std::vector<BigInt>& f, std::size_t r) {
  if (f.size() > r + 1) throw PreconditionError("f-vector longer than rank + 1");
  const IntPoly one_minus_x{1, -1};
  IntPoly h;
  for (std::size_t i = 0; i < f.size(); ++i)
    h += f[i] * IntPoly::monomial(1, i) * one_minus_x.pow(static_cast<unsigned>(r - i));
  return h;
}

bool h_poly_relation_check(const Arrangement& a, const RatVector& v, Exec exec) {
  const auto fan = fan::enumerate_faces(a, exec);
  if (!fan::is_simplicial(fan)) throw PreconditionError("h-polynomial relation needs a simplicial arrangement");
  const auto rep = arr::genericity(a, fan.lattice(), v);
  if (!rep.halfspace_generic()) throw PreconditionError("halfspace not generic: " + describe(a, fan.lattice(), rep));
  const std::size_t r = fan.lattice().rank();
  std::vector<BigInt> f(r + 1, BigInt(0));
  for (auto i : fan::faces_in_halfspace(fan, v, exec)) f[fan.rank_of(i)] += 1;
  return h_polynomial(f, r).reversed(r) == peul_mobius(fan.lattice());
}

IntPoly eulerian_poly(const fan::FanIndex& fan, std::size_t base) {
  if (!fan::is_simplicial(fan)) throw PreconditionError("Eulerian polynomial needs a simplicial arrangement");
  const fan::WeakOrder w(fan, base);
  std::vector<BigInt> c(fan.lattice().rank() + 1, BigInt(0));
  for (auto r : fan.regions()) c[w.descents(r)] += 1;
  return IntPoly(std::move(c));
}

IntPoly eulerian_poly(const Arrangement& a) {
  const auto fan = fan::enumerate_faces(a);
  return eulerian_poly(fan, fan.regions().front());
}

std::optional<RatVector> canonical_vector(std::string_view family) {
  std::istringstream in{std::string(family)};
  std::string kind;
  long n = 0;
  if (!(in >> kind >> n) || n < 1) return std::nullopt;
  RatVector v;
  if (kind == "A") {
    for (long i = 1; i < n; ++i) v.emplace_back(-1);
    v.emplace_back(n - 1);
  } else if (kind == "B" || kind == "D" || kind == "Dnk") {
    BigInt p = 1;
    for (long i = 0; i < n; ++i, p *= 2) v.emplace_back(p);
  } else {
    return std::nullopt;
  }
  return v;
}

RatVector perturb(const Arrangement& a, const FlatLattice& lat, const RatVector& v, const RatVector& u) {
  if (u.size() != a.dim()) throw PreconditionError("perturbation length differs from ambient dimension");
  const auto rep = arr::genericity(a, lat, v);
  if (!rep.halfspace_generic()) throw PreconditionError("cannot perturb: " + describe(a, lat, rep));
  if (rep.very_generic()) return v;
  const RatVector du = off_bottom(lat, u);

  // every functional whose sign against v must survive
  std::vector<RatVector> guards;
  for (const auto& h : a.hyperplanes()) guards.push_back(h.normal);
  for (auto l : lat.of_grade(1)) {
    const auto& b = lat[l].subspace.basis();
    for (std::size_t r = 0; r < b.rows(); ++r) {
      RatVector d = off_bottom(lat, b.row(r));
      if (!exact::is_zero(d)) {
        guards.push_back(std::move(d));
        break;
      }
    }
  }
  Rational eps = 1;
  for (const auto& g : guards) {
    const Rational p = exact::dot(v, g);
    const Rational q = exact::dot(du, g);
    if (sgn(p) == 0 || sgn(q) == 0) continue;
    const Rational bound = abs(p) / abs(q);
    if (bound < eps) eps = bound;
  }
  eps /= 2;
  RatVector out = v;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] += eps * du[j];
  if (!arr::is_very_generic_vector(a, lat, out)) throw PreconditionError("perturbation direction lies in a wall");
  return positive_primitive(std::move(out));
}

GenericChoice find_very_generic(const Arrangement& a, const FlatLattice& lat, const std::vector<RatVector>& candidates,
                                std::uint64_t seed) {
  const std::size_t n = a.dim();
  RatVector ramp;
  for (std::size_t i = 1; i <= n; ++i) ramp.emplace_back(static_cast<long>(i));
  for (const auto& c : candidates) {
    if (c.size() != n) continue;
    const auto rep = arr::genericity(a, lat, c);
    if (rep.very_generic()) return {c, "given"};
    if (rep.halfspace_generic()) {
      try {
        return {perturb(a, lat, c, ramp), "perturbed"};
      } catch (const PreconditionError&) {
      }
    }
  }
  std::mt19937_64 rng(seed);
  const long bound = 4 * static_cast<long>(n) + 8;
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    RatVector x(n);
    for (auto& e : x) e = dist(rng);
    x = positive_primitive(off_bottom(lat, std::move(x)));
    if (arr::is_very_generic_vector(a, lat, x)) return {x, "random"};
  }
  throw std::runtime_error("no very generic vector found");
}

}  // namespace primeul::peul
