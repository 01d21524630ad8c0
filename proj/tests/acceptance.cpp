// One line per acceptance criterion; exit status 0 iff every line passes.
// Pass --long to add the slow geometric rows (E7).

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "primeul/arrangement/builders.hpp"
#include "primeul/coxstats/coxstats.hpp"
#include "primeul/exactmath/roots.hpp"
#include "primeul/fanface/fan.hpp"
#include "primeul/peul/peul.hpp"

using namespace primeul;
using arr::Arrangement;
using exact::BigInt;
using exact::IntPoly;
using exact::RatVector;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

// Collects failures with a short reason; the first few reasons are kept.
struct Tally {
  Outcome o;
  std::size_t checked = 0;
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (o.pass) o.note = what;
    o.pass = false;
  }
  Outcome done(const std::string& summary) {
    if (o.pass) o.note = summary + " (" + std::to_string(checked) + " checks)";
    return o;
  }
};

int failures = 0;

void criterion(const std::string& id, const std::string& desc, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.pass && s > budget_s) o = {false, "over the " + std::to_string(budget_s) + " s budget"};
  failures += !o.pass;
  std::cout << (o.pass ? "PASS " : "FAIL ") << std::left << std::setw(5) << id << desc << "  [" << std::fixed
            << std::setprecision(2) << s << " s] " << o.note << std::endl;
}

IntPoly P(const char* s) { return exact::parse_intpoly(s); }

RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

struct Builtin {
  std::string name;
  Arrangement a;
};

std::vector<Builtin> builtins_rank_le_4() {
  std::vector<Builtin> out;
  for (const char* f : {"A 2", "A 3", "A 4", "A 5", "B 1", "B 2", "B 3", "B 4", "D 2", "D 3", "D 4", "Dnk 2 1",
                        "Dnk 3 1", "Dnk 3 2", "Dnk 4 1", "Dnk 4 2", "Dnk 4 3", "I2 2", "I2 3", "I2 4", "I2 5", "I2 6",
                        "I2 8", "Gn 2", "Gn 3", "Gn 4", "graphic 4 1-2,2-3,3-4,4-1",
                        "graphic 4 1-2,2-3,3-4,4-1,1-3", "graphic 5 1-2,2-3,3-4,4-5,5-1", "F4"})
    out.push_back({f, arr::parse_family(f)});
  out.push_back({"coordinate 3", arr::coordinate(3)});
  out.push_back({"coordinate 4", arr::coordinate(4)});
  return out;
}

std::vector<RatVector> candidates(const std::string& family) {
  if (auto c = peul::canonical_vector(family)) return {*c};
  return {};
}

// Random rank-3 arrangement in R^3 with small integer normals.
Arrangement random_rank3(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-3, 3), count(4, 8);
  while (true) {
    Arrangement a(3);
    const int k = count(rng);
    for (int tries = 0; static_cast<int>(a.size()) < k && tries < 200; ++tries) {
      RatVector n = rv({entry(rng), entry(rng), entry(rng)});
      if (exact::is_zero(n) || a.find(n)) continue;
      a.add(n);
    }
    if (a.rank() == 3) return a;
  }
}

// Sum of z^des over the regions inside the halfspace, without the upper-set
// check the descent path performs.
IntPoly raw_descent_sum(const fan::FanIndex& fan, const RatVector& v) {
  const fan::WeakOrder w(fan, fan::region_containing(fan, v));
  IntPoly p;
  for (auto c : fan::regions_in_halfspace(fan, v)) p += IntPoly::monomial(1, w.descents(c));
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  const bool long_tier = argc > 1 && std::strcmp(argv[1], "--long") == 0;

  std::cout << "-- golden polynomials\n";
  criterion("1.1", "I2(k) = z^2+(k-2)z for k = 2..10, Mobius and recursive", 1, [] {
    Tally t;
    for (std::size_t k = 2; k <= 10; ++k) {
      const IntPoly want = IntPoly{0, static_cast<long>(k) - 2, 1};
      const auto a = arr::rank2(k);
      t.expect(peul::peul_mobius(a) == want, "mobius k=" + std::to_string(k));
      t.expect(peul::peul_recursive(a) == want, "recursive k=" + std::to_string(k));
    }
    return t.done("k = 2..10");
  });

  criterion("1.2", "4-cycle P = z^3+3z^2-z and chi = t(t-1)(t^2-3t+3)", 1, [] {
    Tally t;
    const auto a = arr::parse_family("graphic 4 1-2,2-3,3-4,4-1");
    t.expect(peul::peul_mobius(a) == P("z^3 + 3z^2 - z"), "P mobius");
    t.expect(peul::peul_recursive(a) == P("z^3 + 3z^2 - z"), "P recursive");
    t.expect(arr::characteristic_polynomial(a) == P("t") * P("t - 1") * P("t^2 - 3t + 3"), "chi");
    return t.done("both paths");
  });

  criterion("1.3", "type A, n <= 6: Mobius = z E_{n-1} = exc over cuspidal = des over BW^A", 10, [] {
    Tally t;
    for (int n = 1; n <= 6; ++n) {
      const auto ns = std::to_string(n);
      const IntPoly m = peul::peul_mobius(arr::braid(static_cast<std::size_t>(n)));
      const IntPoly z_e = n == 1 ? IntPoly::constant(1) : IntPoly::z() * cox::eulerian_A(n - 1);
      t.expect(m == z_e, "z E n=" + ns);
      t.expect(cox::peul_A_exc(n) == m, "exc n=" + ns);
      t.expect(cox::peul_A_des(n) == m, "des n=" + ns);
    }
    return t.done("n = 1..6");
  });

  criterion("1.4", "type B table rows n <= 5 by five paths (geometric rows through n = 5)", 600, [] {
    Tally t;
    const std::vector<IntPoly> table = {P("1"), P("z"), P("z^2 + 2z"), P("z^3 + 10z^2 + 4z"),
                                        P("z^4 + 36z^3 + 60z^2 + 8z"), P("z^5 + 116z^4 + 516z^3 + 296z^2 + 16z")};
    for (int n = 0; n <= 5; ++n) {
      const auto ns = std::to_string(n);
      const auto& row = table[static_cast<std::size_t>(n)];
      t.expect(cox::peul_B_rec(n) == row, "recursion n=" + ns);
      t.expect(cox::peul_B_diffrec(n) == row, "differential n=" + ns);
      t.expect(cox::half_eulerian(n).reversed(static_cast<std::size_t>(n)) == row, "half-Eulerian n=" + ns);
      if (n == 0) continue;
      const auto a = arr::type_b(static_cast<std::size_t>(n));
      t.expect(peul::peul_mobius(a) == row, "mobius n=" + ns);
      RatVector v;
      for (int i = 0; i < n; ++i) v.emplace_back(1L << i);
      t.expect(peul::peul_via_descents(a, v) == row, "descents n=" + ns);
    }
    return t.done("n = 0..5");
  });

  criterion("1.5", "type D table rows n <= 7 by recursion and BW^D; geometric for n <= 5", 60, [] {
    Tally t;
    const std::vector<IntPoly> table = {
        P("z^2"),
        P("z^3 + 4z^2 + z"),
        P("z^4 + 20z^3 + 20z^2 + 4z"),
        P("z^5 + 76z^4 + 216z^3 + 116z^2 + 11z"),
        P("z^6 + 262z^5 + 1732z^4 + 2072z^3 + 632z^2 + 26z"),
        P("z^7 + 862z^6 + 11824z^5 + 28064z^4 + 18404z^3 + 3158z^2 + 57z")};
    for (int n = 2; n <= 7; ++n) {
      const auto ns = std::to_string(n);
      const auto& row = table[static_cast<std::size_t>(n - 2)];
      t.expect(cox::peul_D_rec(n) == row, "recursion n=" + ns);
      t.expect(cox::peul_D_des(n) == row, "BW^D n=" + ns);
      if (n <= 5) {
        const auto a = arr::type_d(static_cast<std::size_t>(n));
        t.expect(peul::peul_mobius(a) == row, "mobius n=" + ns);
        t.expect(peul::peul_via_descents(a, *peul::canonical_vector("D " + ns)) == row, "descents n=" + ns);
      }
    }
    return t.done("n = 2..7");
  });

  criterion("1.6", "D_{n,k} formula = Mobius for 2 <= n <= 4, all k", 120, [] {
    Tally t;
    for (int n = 2; n <= 4; ++n)
      for (int k = 0; k <= n; ++k)
        t.expect(cox::peul_dnk(n, k) ==
                     peul::peul_mobius(arr::type_dnk(static_cast<std::size_t>(n), static_cast<std::size_t>(k))),
                 "n=" + std::to_string(n) + " k=" + std::to_string(k));
    return t.done("all (n, k)");
  });

  criterion("1.7", "F4 = z^4+116z^3+220z^2+48z by Mobius on the root system", 300, [] {
    Tally t;
    t.expect(peul::peul_mobius(arr::root_system("F4")) == P("z^4 + 116z^3 + 220z^2 + 48z"), "F4");
    return t.done("F4");
  });

  criterion("1.7b", "E6 = z^6+633z^5+4098z^4+5698z^3+1773z^2+117z by Mobius", 600, [] {
    Tally t;
    t.expect(peul::peul_mobius(arr::root_system("E6")) == P("z^6 + 633z^5 + 4098z^4 + 5698z^3 + 1773z^2 + 117z"),
             "E6");
    return t.done("E6");
  });

  if (long_tier) {
    criterion("1.7c", "E7 row by Mobius (long tier)", 1800, [] {
      Tally t;
      t.expect(peul::peul_mobius(arr::root_system("E7")) == cox::exceptional_table()[4].peul, "E7");
      return t.done("E7");
    });
  }

  criterion("1.8", "G_n = z(z-1)^n+(n+1)z^n-z^{n+1} for 2 <= n <= 8 by recursion", 10, [] {
    Tally t;
    for (unsigned n = 2; n <= 8; ++n) {
      const IntPoly want = IntPoly::z() * exact::z_minus_one_pow(n) + IntPoly::monomial(n + 1, n) - IntPoly::monomial(1, n + 1);
      t.expect(peul::peul_recursive(arr::generic_gn(n)) == want, "n=" + std::to_string(n));
    }
    return t.done("n = 2..8");
  });

  criterion("1.9", "Psi of essentialized braid(4) from halfspace faces = 1+7z+12z^2+6z^3", 5, [] {
    Tally t;
    const auto ess = arr::essentialization(arr::braid(4));
    t.expect(peul::cochar_via_halfspace(ess.arrangement, ess.pull_back(rv({-1, -1, -1, 3}))) ==
                 P("1 + 7z + 12z^2 + 6z^3"),
             "psi");
    return t.done("v = (-1,-1,-1,3)");
  });

  std::cout << "-- property suites\n";
  const auto builtins = builtins_rank_le_4();
  std::vector<fan::FanIndex> fans;
  for (const auto& b : builtins) fans.push_back(fan::enumerate_faces(b.a));

  criterion("2.1", "Greene-Zaslavsky: regions in h_v^- = |mu| for 5 random very generic v, rank <= 4", 600, [&] {
    Tally t;
    for (std::size_t i = 0; i < builtins.size(); ++i) {
      const auto& lat = fans[i].lattice();
      const auto mu = BigInt(std::abs(lat.mobius_bottom(lat.top())));
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto v = peul::find_very_generic(builtins[i].a, lat, {}, seed).v;
        t.expect(BigInt(static_cast<unsigned long>(fan::regions_in_halfspace(fans[i], v).size())) == mu,
                 builtins[i].name + " seed " + std::to_string(seed));
      }
    }
    return t.done(std::to_string(builtins.size()) + " arrangements");
  });

  criterion("2.2", "Tits monoid axioms, exhaustive on fans with <= 200 faces", 600, [&] {
    Tally t;
    std::size_t fans_checked = 0;
    for (std::size_t i = 0; i < builtins.size(); ++i) {
      const auto& fan = fans[i];
      if (fan.size() > 200) continue;
      ++fans_checked;
      bool ok = true;
      const std::size_t n = fan.size(), o = fan.central();
      for (std::size_t f = 0; f < n && ok; ++f) {
        ok = ok && fan::tits_product(fan, f, f) == f && fan::tits_product(fan, o, f) == f;
        for (std::size_t g = 0; g < n && ok; ++g) {
          const auto fg = fan::tits_product(fan, f, g);
          ok = ok && fan::tits_product(fan, fg, f) == fg && fan::face_leq(fan, f, fg);
        }
      }
      t.expect(ok, builtins[i].name);
    }
    return t.done(std::to_string(fans_checked) + " fans");
  });

  criterion("2.3", "upper-set property on sharp built-ins; non-sharp witness has descent sum != P", 600, [&] {
    Tally t;
    std::size_t sharp = 0;
    for (std::size_t i = 0; i < builtins.size(); ++i) {
      if (!fan::is_sharp(fans[i])) continue;
      ++sharp;
      auto vs = std::vector<RatVector>{peul::find_very_generic(builtins[i].a, fans[i].lattice(), candidates(builtins[i].name)).v};
      for (std::uint64_t seed = 1; seed <= 5; ++seed)
        vs.push_back(peul::find_very_generic(builtins[i].a, fans[i].lattice(), {}, seed).v);
      for (const auto& v : vs) {
        const fan::WeakOrder w(fans[i], fan::region_containing(fans[i], v));
        t.expect(fan::is_upper_set(w, fan::regions_in_halfspace(fans[i], v)).upper, builtins[i].name);
      }
    }
    // two lines at 45 degrees: the obtuse region breaks the property
    const Arrangement skew(2, {rv({1, 0}), rv({1, 1})});
    const auto fan = fan::enumerate_faces(skew);
    const IntPoly p = peul::peul_mobius(skew);
    std::string witness;
    for (long x = -3; x <= 3 && witness.empty(); ++x)
      for (long y = -3; y <= 3 && witness.empty(); ++y) {
        const auto v = rv({x, y});
        if (!arr::is_very_generic_vector(skew, fan.lattice(), v)) continue;
        const fan::WeakOrder w(fan, fan::region_containing(fan, v));
        const auto regions = fan::regions_in_halfspace(fan, v);
        const IntPoly d = raw_descent_sum(fan, v);
        if (!fan::is_upper_set(w, regions).upper && d != p)
          witness = "v=(" + std::to_string(x) + "," + std::to_string(y) + "): descent sum " + d.to_string() +
                    " vs P " + p.to_string();
      }
    t.expect(!witness.empty(), "no non-sharp witness found");
    return t.done(std::to_string(sharp) + " sharp built-ins; witness " + witness);
  });

  criterion("2.4", "four-path agreement on every simplicial built-in of rank <= 4", 600, [&] {
    Tally t;
    std::size_t simplicial = 0;
    for (std::size_t i = 0; i < builtins.size(); ++i) {
      if (!fan::is_simplicial(fans[i])) continue;
      ++simplicial;
      const auto& a = builtins[i].a;
      const auto v = peul::find_very_generic(a, fans[i].lattice(), candidates(builtins[i].name)).v;
      const IntPoly m = peul::peul_mobius(fans[i].lattice());
      t.expect(peul::peul_recursive(a) == m, builtins[i].name + " recursive");
      t.expect(peul::peul_from_cochar(peul::cochar_via_halfspace(fans[i], v), a.rank()) == m,
               builtins[i].name + " halfspace");
      t.expect(peul::peul_via_descents(fans[i], v) == m, builtins[i].name + " descents");
    }
    return t.done(std::to_string(simplicial) + " simplicial built-ins");
  });

  criterion("2.5", "Zaslavsky count = enumerated regions on every built-in", 60, [&] {
    Tally t;
    for (std::size_t i = 0; i < builtins.size(); ++i)
      t.expect(arr::count_regions_zaslavsky(fans[i].lattice()) == BigInt(static_cast<unsigned long>(fans[i].regions().size())),
               builtins[i].name);
    return t.done(std::to_string(builtins.size()) + " built-ins");
  });

  std::cout << "-- real-rootedness\n";
  criterion("3.1", "rank <= 3 built-ins and 25 seeded random rank-3 arrangements are real-rooted", 60, [&] {
    Tally t;
    for (const auto& b : builtins)
      if (b.a.rank() <= 3) t.expect(exact::is_real_rooted(peul::peul_mobius(b.a)), b.name);
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 25; ++i) {
      const auto a = random_rank3(rng);
      t.expect(exact::is_real_rooted(peul::peul_mobius(a)), "random #" + std::to_string(i));
    }
    return t.done("built-ins and 25 random");
  });

  criterion("3.2", "P_{B_n}, P_{D_n}, P_{D_{n,k}} real-rooted for n <= 30", 120, [] {
    Tally t;
    for (int n = 1; n <= 30; ++n) {
      const auto ns = std::to_string(n);
      t.expect(exact::is_real_rooted(cox::peul_B_rec(n)), "B n=" + ns);
      if (n >= 2) t.expect(exact::is_real_rooted(cox::peul_D_rec(n)), "D n=" + ns);
      for (int k = n == 1 ? 1 : 0; k <= n; ++k)
        t.expect(exact::is_real_rooted(cox::peul_dnk(n, k)), "Dnk n=" + ns + " k=" + std::to_string(k));
    }
    return t.done("n = 1..30");
  });

  criterion("3.3", "the six exceptional table polynomials are real-rooted", 10, [] {
    Tally t;
    for (const auto& e : cox::exceptional_table()) t.expect(exact::is_real_rooted(e.peul), e.name);
    return t.done("H3 H4 F4 E6 E7 E8");
  });

  criterion("3.4", "P_{G_4} = z^4+6z^3-4z^2+z is not real-rooted", 10, [] {
    Tally t;
    const IntPoly g4 = peul::peul_mobius(arr::generic_gn(4));
    t.expect(g4 == P("z^4 + 6z^3 - 4z^2 + z"), "G4 value");
    t.expect(!exact::is_real_rooted(g4), "G4 reported real-rooted");
    return t.done("G4");
  });

  criterion("3.5", "rank-3 recursion split interlaces on 10 random arrangements", 60, [] {
    Tally t;
    std::mt19937_64 rng(77);
    for (int i = 0; i < 10; ++i) {
      const auto a = random_rank3(rng);
      const auto s = peul::recursion_split(a);
      t.expect(s.restriction_term + s.localization_sum == peul::peul_mobius(a), "sum #" + std::to_string(i));
      t.expect(exact::interlaces(s.localization_sum, s.restriction_term), "interlacing #" + std::to_string(i));
    }
    return t.done("10 random");
  });

  std::cout << "-- generating functions\n";
  criterion("4.1", "generating functions in types A, B, D to order 6 (P_{D_1} = 0); binomial identities n <= 6", 30, [] {
    Tally t;
    t.expect(cox::generating_function_check(6), "generating functions");
    t.expect(cox::binomial_identity_checks(6), "binomial identities");
    t.expect(cox::peul_D_rec(1).is_zero(), "P_D1");
    return t.done("order 6");
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
