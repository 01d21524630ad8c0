#include "primeul/arrangement/flats.hpp"

#include <algorithm>
#include <stdexcept>

#include "primeul/errors.hpp"

namespace primeul::arr {

namespace {

struct Candidate {
  IndexSet containing;
  Subspace normal_space;
};

IndexSet hyperplanes_in(const Arrangement& a, const Subspace& normal_space) {
  IndexSet s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (normal_space.contains(a[i].normal)) s.insert(i);
  }
  return s;
}

// Flats covered by the flat with the given normal space: intersect with each
// hyperplane not yet containing it, skipping hyperplanes already absorbed.
std::vector<Candidate> lower_covers(const Arrangement& a, const Candidate& x) {
  std::vector<Candidate> out;
  IndexSet done = x.containing;
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (done.contains(h)) continue;
    auto rows = x.normal_space.basis().row_list();
    rows.push_back(a[h].normal);
    Subspace ns = Subspace::span(rows, a.dim());
    IndexSet s = hyperplanes_in(a, ns);
    done |= s;
    out.push_back({std::move(s), std::move(ns)});
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Mobius value exceeds 64 bits");
  return r;
}

}  // namespace

FlatLattice::FlatLattice(std::size_t ambient_dim, std::vector<Flat> flats)
    : ambient_dim_(ambient_dim), flats_(std::move(flats)) {
  for (std::size_t i = 0; i < flats_.size(); ++i) lookup_.emplace(flats_[i].containing, i);
}

std::vector<std::size_t> FlatLattice::of_grade(std::size_t g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    if (flats_[i].grade == g) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> FlatLattice::find(const IndexSet& containing) const {
  auto it = lookup_.find(containing);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FlatLattice::find(const Subspace& s) const {
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    if (flats_[i].subspace == s) return i;
  }
  return std::nullopt;
}

void FlatLattice::compute_mobius(Exec exec) {
  const std::size_t n = flats_.size();
  mu_bottom_.assign(n, 0);
  mu_top_.assign(n, 0);
  const std::size_t r = rank();
  std::vector<std::vector<std::size_t>> grades(r + 1);
  for (std::size_t i = 0; i < n; ++i) grades[flats_[i].grade].push_back(i);

  // Flats are sorted by grade, so every smaller flat precedes x.
  mu_bottom_[0] = 1;
  for (std::size_t g = 1; g <= r; ++g) {
    const auto& level = grades[g];
    parallel_for(level.size(), exec, [&](std::size_t k) {
      const std::size_t x = level[k];
      std::int64_t s = 0;
      for (std::size_t y = 0; flats_[y].grade < g; ++y) {
        if (leq(y, x)) s = checked_add(s, mu_bottom_[y]);
      }
      mu_bottom_[x] = -s;
    });
  }

  mu_top_[n - 1] = 1;
  for (std::size_t g = r; g-- > 0;) {
    const auto& level = grades[g];
    parallel_for(level.size(), exec, [&](std::size_t k) {
      const std::size_t x = level[k];
      std::int64_t s = 0;
      for (std::size_t y = n - 1; flats_[y].grade > g; --y) {
        if (leq(x, y)) s = checked_add(s, mu_top_[y]);
      }
      mu_top_[x] = -s;
    });
  }
}

FlatLattice build_flats(const Arrangement& a, Exec exec) {
  std::vector<Candidate> found{{IndexSet(a.size()), Subspace(a.dim())}};
  std::unordered_map<IndexSet, std::size_t, IndexSetHash> seen{{found[0].containing, 0}};
  std::size_t level_begin = 0;
  while (level_begin < found.size()) {
    const std::size_t level_end = found.size();
    std::vector<std::vector<Candidate>> covers(level_end - level_begin);
    parallel_for(covers.size(), exec, [&](std::size_t k) { covers[k] = lower_covers(a, found[level_begin + k]); });
    for (auto& list : covers) {
      for (auto& c : list) {
        if (seen.emplace(c.containing, found.size()).second) found.push_back(std::move(c));
      }
    }
    level_begin = level_end;
  }

  const std::size_t bottom_dim = a.dim() - a.rank();
  std::vector<Flat> flats;
  flats.reserve(found.size());
  for (auto& c : found) {
    Subspace x = c.normal_space.orthogonal_complement();
    const std::size_t g = x.dim() - bottom_dim;
    flats.push_back({std::move(x), std::move(c.containing), g});
  }
  std::sort(flats.begin(), flats.end(), [](const Flat& p, const Flat& q) {
    if (p.grade != q.grade) return p.grade < q.grade;
    if (p.containing.count() != q.containing.count()) return p.containing.count() > q.containing.count();
    return p.containing.elements() < q.containing.elements();
  });
  FlatLattice lat(a.dim(), std::move(flats));
  lat.compute_mobius(exec);
  return lat;
}

exact::IntPoly characteristic_polynomial(const FlatLattice& lat) {
  exact::IntPoly chi;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    chi += exact::IntPoly::monomial(exact::BigInt(static_cast<long>(lat.mobius_top(i))), lat[i].subspace.dim());
  }
  return chi;
}

exact::IntPoly characteristic_polynomial(const Arrangement& a) {
  return characteristic_polynomial(build_flats(a));
}

exact::BigInt count_regions_zaslavsky(const FlatLattice& lat) {
  exact::BigInt total = 0;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    total += exact::BigInt(static_cast<long>(std::abs(lat.mobius_top(i))));
  }
  return total;
}

exact::BigInt count_regions_zaslavsky(const Arrangement& a) {
  return count_regions_zaslavsky(build_flats(a));
}

Arrangement localization(const Arrangement& a, const Flat& x) {
  if (x.containing.universe() != a.size()) throw PreconditionError("flat of a different arrangement");
  Arrangement loc(a.dim());
  for (auto i : x.containing.elements()) loc.add(a[i].normal);
  return loc;
}

ChartedArrangement restriction(const Arrangement& a, const Flat& x) {
  if (x.containing.universe() != a.size() || x.subspace.ambient_dim() != a.dim()) {
    throw PreconditionError("flat of a different arrangement");
  }
  return restrict_to(a, x.subspace.basis());
}

GenericityReport genericity(const Arrangement& a, const FlatLattice& lat, const RatVector& v) {
  if (v.size() != a.dim()) throw PreconditionError("vector length differs from ambient dimension");
  GenericityReport rep;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(exact::dot(a[i].normal, v)) == 0) {
      rep.on_hyperplane = i;
      break;
    }
  }
  const auto& bottom = lat[lat.bottom()].subspace.basis();
  for (std::size_t r = 0; r < bottom.rows(); ++r) {
    if (sgn(exact::dot(bottom.row(r), v)) != 0) rep.orthogonal_to_bottom = false;
  }
  for (auto i : lat.of_grade(1)) {
    const auto& basis = lat[i].subspace.basis();
    bool hit = false;
    for (std::size_t r = 0; r < basis.rows() && !hit; ++r) hit = sgn(exact::dot(basis.row(r), v)) != 0;
    if (!hit) {
      rep.kills_rank1_flat = i;
      break;
    }
  }
  return rep;
}

bool is_very_generic_vector(const Arrangement& a, const FlatLattice& lat, const RatVector& v) {
  return genericity(a, lat, v).very_generic();
}

bool is_very_generic_vector(const Arrangement& a, const RatVector& v) {
  return is_very_generic_vector(a, build_flats(a), v);
}

}  // namespace primeul::arr
