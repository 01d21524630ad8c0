#include "doctest.h"

#include <map>
#include <numeric>
#include <set>

#include "primeul/arrangement/builders.hpp"
#include "primeul/arrangement/flats.hpp"
#include "primeul/errors.hpp"

using namespace primeul;
using namespace primeul::arr;
using exact::IntPoly;

namespace {

RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Whitney's formula: chi(t) = sum over subsets S of (-1)^|S| t^(dim of the
// intersection of S). Independent of the flat lattice.
IntPoly whitney_chi(const Arrangement& a) {
  std::vector<exact::BigInt> c(a.dim() + 1, 0);
  const std::size_t m = a.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<RatVector> rows;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1u) rows.push_back(a[i].normal);
    const std::size_t d = a.dim() - exact::matrix_rank(RatMatrix::from_rows(rows, a.dim()));
    c[d] += (__builtin_popcountll(mask) % 2) ? -1 : 1;
  }
  return IntPoly(c);
}

long double_factorial(long k) {
  long r = 1;
  for (long i = k; i > 1; i -= 2) r *= i;
  return r;
}

// Type B partition of a flat of a B_n-type arrangement read off its basis:
// zero columns form the zero block, proportional columns share a block.
struct BPartition {
  std::size_t zero_size = 0;                 // |S_0| / 2
  std::vector<std::size_t> block_sizes;      // one entry per pair {S, -S}
};

BPartition partition_of(const Subspace& x, std::size_t n) {
  const auto& b = x.basis();
  BPartition p;
  std::vector<bool> used(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    RatVector col;
    for (std::size_t r = 0; r < b.rows(); ++r) col.push_back(b(r, j));
    if (exact::is_zero(col)) {
      ++p.zero_size;
      used[j] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j]) continue;
    std::size_t size = 0;
    for (std::size_t l = j; l < n; ++l) {
      if (used[l]) continue;
      bool same = true, opp = true;
      for (std::size_t r = 0; r < b.rows(); ++r) {
        same = same && b(r, l) == b(r, j);
        opp = opp && b(r, l) == -b(r, j);
      }
      if (same || opp) {
        used[l] = true;
        ++size;
      }
    }
    p.block_sizes.push_back(size);
  }
  return p;
}

// Number of type B partitions of [+-n] per number of block pairs, with the
// zero block restricted by `zero_ok`.
std::vector<long> count_b_partitions(std::size_t n, bool (*zero_ok)(std::size_t)) {
  // S(m, k) weighted by 2^(m-k): set partitions of m signed letters into k
  // blocks up to global sign per block.
  std::vector<std::vector<long>> w(n + 1, std::vector<long>(n + 1, 0));
  w[0][0] = 1;
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t k = 1; k <= m; ++k) w[m][k] = w[m - 1][k - 1] + 2 * static_cast<long>(k) * w[m - 1][k];
  std::vector<long> out(n + 1, 0);
  for (std::size_t z = 0; z <= n; ++z) {
    if (!zero_ok(z)) continue;
    long choose = 1;
    for (std::size_t i = 0; i < z; ++i) choose = choose * static_cast<long>(n - i) / static_cast<long>(i + 1);
    for (std::size_t k = 0; k <= n - z; ++k) out[k] += choose * w[n - z][k];
  }
  return out;
}

std::vector<long> grade_counts(const FlatLattice& lat) {
  std::vector<long> c(lat.rank() + 1, 0);
  for (const auto& f : lat.flats()) ++c[f.grade];
  return c;
}

void check_mobius_sums(const FlatLattice& lat) {
  for (std::size_t x = 1; x < lat.size(); ++x) {
    long s = 0;
    for (std::size_t y = 0; y < lat.size(); ++y)
      if (lat.leq(y, x)) s += lat.mobius_bottom(y);
    CHECK(s == 0);
  }
}

}  // namespace

TEST_CASE("arrangement storage") {
  Arrangement a(2, {rv({-2, 2}), rv({0, 3})});
  CHECK(a[0].normal == rv({1, -1}));
  CHECK(a[1].normal == rv({0, 1}));
  CHECK_THROWS_AS(a.add(rv({3, -3})), PreconditionError);
  CHECK_THROWS_AS(a.add(rv({0, 0})), PreconditionError);
  CHECK_THROWS_AS(a.add(rv({1, 2, 3})), PreconditionError);
  CHECK(hyperplane_equation(a[0]) == "x1=x2");
  CHECK(hyperplane_equation(type_b(2)[1]) == "x1+x2=0");
  CHECK(hyperplane_equation(type_b(2)[2]) == "x1=0");
}

TEST_CASE("builders") {
  CHECK(braid(3).size() == 3);
  CHECK(braid(3).rank() == 2);
  CHECK(type_b(3).size() == 9);
  CHECK(type_b(3).rank() == 3);
  CHECK(type_d(4).size() == 12);
  for (std::size_t n = 2; n <= 5; ++n) {
    CHECK(type_dnk(n, n) == type_b(n));
    CHECK(type_dnk(n, 0) == type_d(n));
  }
  CHECK(rank2(5).size() == 5);
  CHECK(generic_gn(4).size() == 5);
  CHECK(root_system("F4").size() == 24);
  CHECK(root_system("E6").size() == 36);
  CHECK(root_system("E7").size() == 63);
  CHECK(root_system("E8").size() == 120);
  CHECK(root_system("E6").rank() == 6);
  CHECK(root_system("E7").rank() == 7);
  CHECK_THROWS_AS(type_d(1), PreconditionError);
  CHECK_THROWS_AS(rank2(1), PreconditionError);
  CHECK_THROWS_AS(type_dnk(3, 4), PreconditionError);
}

TEST_CASE("family strings and files") {
  CHECK(parse_family("B 3") == type_b(3));
  CHECK(parse_family("Dnk 4 2") == type_dnk(4, 2));
  CHECK(parse_family("I2 5") == rank2(5));
  CHECK(parse_family("graphic 4 1-2,2-3,3-4,4-1") == graphic(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}));
  CHECK(parse_family("graphic 4 1-2, 2-3") == graphic(4, {{1, 2}, {2, 3}}));
  CHECK(parse_family("F4").size() == 24);
  CHECK_THROWS_AS(parse_family("B"), ParseError);
  CHECK_THROWS_AS(parse_family("Q 3"), ParseError);
  CHECK_THROWS_AS(parse_family("D 1"), ParseError);
  CHECK_THROWS_AS(parse_family("A x"), ParseError);
  CHECK_THROWS_AS(parse_family("graphic 3 1-4"), ParseError);

  auto a = parse_arrangement("# the 4-cycle\n4\n1 -1 0 0\n0 1 -1 0 # edge\n0 0 1 -1\n-1 0 0 1\n");
  CHECK(a == graphic(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  CHECK(parse_arrangement(format_arrangement(type_b(3))) == type_b(3));
  CHECK(parse_arrangement("2\n1/2 -1/3\n").hyperplanes()[0].normal == rv({3, -2}));
  CHECK_THROWS_AS(parse_arrangement("2\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_arrangement("2\n1 1\n2 2\n"), ParseError);
  CHECK_THROWS_AS(parse_arrangement("2\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_arrangement("# nothing\n"), ParseError);
  CHECK_THROWS_AS(parse_arrangement("2\n1 a\n"), ParseError);
}

TEST_CASE("flat lattice of small arrangements") {
  SUBCASE("single hyperplane") {
    auto lat = build_flats(Arrangement(2, {rv({1, 0})}));
    REQUIRE(lat.size() == 2);
    CHECK(lat.mobius_bottom(lat.bottom()) == 1);
    CHECK(lat.mobius_bottom(lat.top()) == -1);
  }
  SUBCASE("k lines") {
    for (std::size_t k = 2; k <= 8; ++k) {
      auto lat = build_flats(rank2(k));
      CHECK(lat.size() == k + 2);
      for (auto i : lat.of_grade(1)) CHECK(lat.mobius_bottom(i) == -1);
      CHECK(lat.mobius_bottom(lat.top()) == static_cast<long>(k) - 1);
    }
  }
  SUBCASE("4-cycle") {
    auto lat = build_flats(graphic(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}));
    std::map<std::size_t, std::multiset<long>> by_grade;
    for (std::size_t i = 0; i < lat.size(); ++i) by_grade[lat[i].grade].insert(lat.mobius_bottom(i));
    CHECK(by_grade[0] == std::multiset<long>{1});
    CHECK(by_grade[1] == std::multiset<long>{-1, -1, -1, -1, -1, -1});
    CHECK(by_grade[2] == std::multiset<long>{2, 2, 2, 2});
    CHECK(by_grade[3] == std::multiset<long>{-3});
    CHECK(characteristic_polynomial(lat) == IntPoly{0, -3, 6, -4, 1});
  }
  SUBCASE("empty arrangement") {
    auto lat = build_flats(Arrangement(3));
    CHECK(lat.size() == 1);
    CHECK(characteristic_polynomial(lat) == IntPoly::monomial(1, 3));
    CHECK(count_regions_zaslavsky(lat) == 1);
  }
  CHECK(characteristic_polynomial(Arrangement(4, {rv({1, 2, 0, 0})})) == IntPoly{0, 0, 0, -1, 1});
}

TEST_CASE("characteristic polynomial agrees with Whitney's formula") {
  std::vector<Arrangement> cases{braid(4), braid(5), type_b(3), type_d(4), type_dnk(4, 2), rank2(6),
                                 generic_gn(4), graphic(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}),
                                 product(rank2(3), braid(3))};
  for (const auto& a : cases) {
    auto lat = build_flats(a);
    CHECK(characteristic_polynomial(lat) == whitney_chi(a));
    check_mobius_sums(lat);
  }
}

TEST_CASE("Mobius from bottom matches restricted Whitney formula") {
  for (const auto& a : {type_b(3), type_d(4), graphic(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}})}) {
    auto lat = build_flats(a);
    const std::size_t bottom_dim = lat[lat.bottom()].subspace.dim();
    for (std::size_t i = 0; i < lat.size(); ++i) {
      auto r = restriction(a, lat[i]);
      CHECK(whitney_chi(r.arrangement).coeff(bottom_dim) == lat.mobius_bottom(i));
    }
  }
}

TEST_CASE("region counts") {
  for (std::size_t k = 2; k <= 7; ++k) CHECK(count_regions_zaslavsky(rank2(k)) == 2 * k);
  CHECK(count_regions_zaslavsky(braid(4)) == 24);
  CHECK(count_regions_zaslavsky(type_b(3)) == 48);
  CHECK(count_regions_zaslavsky(type_d(4)) == 192);
}

TEST_CASE("type D Mobius closed form") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto lat = build_flats(type_d(n));
    for (std::size_t i = 0; i < lat.size(); ++i) {
      auto p = partition_of(lat[i].subspace, n);
      const long k = static_cast<long>(p.block_sizes.size());
      long expected;
      if (p.zero_size == 0) {
        long r = 0;
        for (auto s : p.block_sizes) r += s > 1;
        expected = (k % 2 ? -1 : 1) * double_factorial(2 * k - 3) * (k + r - 1);
      } else {
        expected = (k % 2 ? -1 : 1) * double_factorial(2 * k - 1);
      }
      CHECK(lat.mobius_bottom(i) == expected);
    }
  }
}

TEST_CASE("flats of B_n and D_n are type B partitions") {
  for (std::size_t n = 2; n <= 4; ++n) {
    CHECK(grade_counts(build_flats(type_b(n))) == count_b_partitions(n, [](std::size_t) { return true; }));
    CHECK(grade_counts(build_flats(type_d(n))) == count_b_partitions(n, [](std::size_t z) { return z != 1; }));
  }
}

TEST_CASE("restriction, localization, essentialization") {
  auto a = braid(3);
  auto lat = build_flats(a);
  auto h = lat.find(Subspace::solutions({rv({1, -1, 0})}, 3));
  REQUIRE(h);
  auto r = restriction(a, lat[*h]);
  CHECK(r.arrangement.dim() == 2);
  CHECK(r.arrangement.size() == 1);
  CHECK(r.index[0] == -1);
  CHECK(r.index[1] == r.index[2]);
  CHECK(restriction(a, lat[lat.top()]).arrangement == a);
  CHECK(restriction(a, lat[lat.bottom()]).arrangement.empty());
  CHECK(restriction(a, lat[lat.bottom()]).arrangement.dim() == 1);
  CHECK(localization(a, lat[lat.bottom()]) == a);
  CHECK(localization(a, lat[lat.top()]).empty());

  auto b3 = type_b(3);
  auto lb = build_flats(b3);
  auto line = lb.find(Subspace::span({rv({1, 1, 1})}, 3));
  REQUIRE(line);
  CHECK(localization(b3, lb[*line]).size() == 3);

  // orientation bookkeeping: signs agree on a point of the subspace
  for (std::size_t i = 0; i < lb.size(); ++i) {
    auto res = restriction(b3, lb[i]);
    RatVector c(res.arrangement.dim());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = static_cast<long>(j * j + 3 * j + 1);
    RatVector x = res.lift(c);
    for (std::size_t k = 0; k < b3.size(); ++k) {
      if (res.index[k] < 0) {
        CHECK(sgn(exact::dot(b3[k].normal, x)) == 0);
        continue;
      }
      const auto& m = res.arrangement[static_cast<std::size_t>(res.index[k])].normal;
      CHECK(sgn(exact::dot(b3[k].normal, x)) == res.orientation[k] * sgn(exact::dot(m, c)));
    }
  }

  auto e = essentialize(braid(4));
  CHECK(e.dim() == 3);
  CHECK(e.size() == 6);
  CHECK(e.is_essential());
  CHECK(essentialize(type_b(3)).size() == 9);
  CHECK(essentialize(Arrangement(0)).dim() == 0);
  auto l1 = build_flats(braid(4));
  auto l2 = build_flats(e);
  std::multiset<std::pair<std::size_t, long>> m1, m2;
  for (std::size_t i = 0; i < l1.size(); ++i) m1.insert({l1[i].grade, l1.mobius_bottom(i)});
  for (std::size_t i = 0; i < l2.size(); ++i) m2.insert({l2[i].grade, l2.mobius_bottom(i)});
  CHECK(m1 == m2);
}

TEST_CASE("products") {
  auto p = product(Arrangement(1, {rv({1})}), Arrangement(1, {rv({1})}));
  CHECK(p == coordinate(2));
  CHECK(product(braid(3), Arrangement(0)) == braid(3));
  CHECK(characteristic_polynomial(product(rank2(3), braid(2))) ==
        characteristic_polynomial(rank2(3)) * characteristic_polynomial(braid(2)));
}

TEST_CASE("very generic vectors") {
  auto b3 = type_b(3);
  CHECK(is_very_generic_vector(b3, rv({1, 2, 4})));
  CHECK_FALSE(is_very_generic_vector(b3, rv({1, 1, 2})));
  // halfspace generic while the vector itself lies on x1 = x2
  auto a4 = braid(4);
  auto rep = genericity(a4, build_flats(a4), rv({-1, -1, -1, 3}));
  CHECK(rep.halfspace_generic());
  CHECK_FALSE(rep.very_generic());
  REQUIRE(rep.on_hyperplane);
  CHECK(hyperplane_equation(a4[*rep.on_hyperplane]) == "x1=x2");
  // not orthogonal to the bottom line
  CHECK_FALSE(genericity(a4, build_flats(a4), rv({1, 2, 4, 8})).orthogonal_to_bottom);
  // contains a rank-1 flat: (1,-1,0) kills the line x1 = x2 = 0... in B_3
  auto lat = build_flats(b3);
  auto r2 = genericity(b3, lat, rv({1, 3, 0}));
  CHECK(r2.kills_rank1_flat);
  CHECK_THROWS_AS(is_very_generic_vector(b3, rv({1, 2})), PreconditionError);
}

TEST_CASE("serial and parallel lattices agree") {
  for (const auto& a : {type_b(4), type_d(5), root_system("F4")}) {
    auto s = build_flats(a, Exec::serial);
    auto p = build_flats(a, Exec::parallel);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i].containing == p[i].containing);
      CHECK(s.mobius_bottom(i) == p.mobius_bottom(i));
      CHECK(s.mobius_top(i) == p.mobius_top(i));
    }
  }
}
