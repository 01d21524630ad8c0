#include "primeul/fanface/fan.hpp"

#include <algorithm>
#include <stdexcept>
#include <string_view>

#include "primeul/errors.hpp"
#include "primeul/exactmath/lp.hpp"

namespace primeul::fan {

namespace {

int sign_rank(std::int8_t s) { return s == 0 ? 0 : (s > 0 ? 1 : 2); }

RatVector scaled(const RatVector& n, int s) {
  RatVector out = n;
  if (s < 0)
    for (auto& x : out) x = -x;
  return out;
}

// Splits a region of the first k hyperplanes by hyperplane k. The witness
// already certifies the side it lies on, so at most one side needs the oracle.
std::vector<Cone> split(const Arrangement& a, const Cone& c, std::size_t k) {
  std::vector<RatVector> strict;
  strict.reserve(k + 1);
  for (std::size_t j = 0; j < k; ++j) strict.push_back(scaled(a[j].normal, c.signs[j]));
  const int s = sgn(exact::dot(a[k].normal, c.witness));
  std::vector<Cone> out;
  for (int side : {1, -1}) {
    if (side == s) {
      Cone child = c;
      child.signs.push_back(static_cast<std::int8_t>(side));
      out.push_back(std::move(child));
      continue;
    }
    strict.push_back(scaled(a[k].normal, side));
    if (auto x = exact::strict_interior_point(strict, {}, a.dim())) {
      Cone child{c.signs, std::move(*x)};
      child.signs.push_back(static_cast<std::int8_t>(side));
      out.push_back(std::move(child));
    }
    strict.pop_back();
  }
  return out;
}

RatVector positive_primitive(RatVector v) {
  if (exact::normalize_primitive(v) < 0)
    for (auto& x : v) x = -x;
  return v;
}

}  // namespace

std::size_t SignVectorHash::operator()(const SignVector& s) const {
  return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(s.data()), s.size()));
}

bool sign_less(const SignVector& a, const SignVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](std::int8_t x, std::int8_t y) {
    return sign_rank(x) < sign_rank(y);
  });
}

SignVector sign_vector_of(const Arrangement& a, const RatVector& x) {
  SignVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = static_cast<std::int8_t>(sgn(exact::dot(a[i].normal, x)));
  return s;
}

std::vector<Cone> enumerate_regions(const Arrangement& a, Exec exec) {
  std::vector<Cone> cur{{{}, RatVector(a.dim(), Rational(0))}};
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::vector<std::vector<Cone>> parts(cur.size());
    parallel_for(cur.size(), exec, [&](std::size_t i) { parts[i] = split(a, cur[i], k); });
    std::vector<Cone> next;
    next.reserve(2 * cur.size());
    for (auto& p : parts)
      for (auto& c : p) next.push_back(std::move(c));
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end(), [](const Cone& x, const Cone& y) { return sign_less(x.signs, y.signs); });
  return cur;
}

FanIndex::FanIndex(Arrangement a, FlatLattice lattice, std::vector<Face> faces)
    : a_(std::move(a)), lat_(std::move(lattice)), faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end(), [](const Face& x, const Face& y) { return sign_less(x.signs, y.signs); });
  walls_.resize(faces_.size());
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    lookup_.emplace(faces_[i].signs, i);
    if (faces_[i].dim == a_.dim()) regions_.push_back(i);
    if (faces_[i].flat == lat_.bottom()) central_ = i;
    if (rank_of(i) == 1) rank_one_.push_back(i);
  }
  for (auto r : regions_) {
    SignVector s = faces_[r].signs;
    for (std::size_t h = 0; h < s.size(); ++h) {
      s[h] = static_cast<std::int8_t>(-s[h]);
      if (auto d = find(s)) walls_[r].push_back({h, *d});
      s[h] = static_cast<std::int8_t>(-s[h]);
    }
  }
}

std::optional<std::size_t> FanIndex::find(const SignVector& s) const {
  auto it = lookup_.find(s);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t FanIndex::at(const SignVector& s) const {
  auto f = find(s);
  if (!f) throw std::logic_error("sign vector is not a face of the fan");
  return *f;
}

FanIndex enumerate_faces(const Arrangement& a, Exec exec) { return enumerate_faces(a, arr::build_flats(a, exec), exec); }

FanIndex enumerate_faces(const Arrangement& a, const FlatLattice& lat, Exec exec) {
  std::vector<std::vector<Face>> per_flat(lat.size());
  parallel_for(lat.size(), exec, [&](std::size_t x) {
    const auto r = arr::restriction(a, lat[x]);
    for (auto& cone : enumerate_regions(r.arrangement, Exec::serial)) {
      Face f;
      f.signs.assign(a.size(), 0);
      for (std::size_t h = 0; h < a.size(); ++h) {
        if (r.index[h] >= 0) {
          f.signs[h] = static_cast<std::int8_t>(r.orientation[h] * cone.signs[static_cast<std::size_t>(r.index[h])]);
        }
      }
      f.flat = x;
      f.dim = lat[x].subspace.dim();
      f.witness = r.lift(cone.witness);
      per_flat[x].push_back(std::move(f));
    }
  });
  std::vector<Face> faces;
  for (auto& v : per_flat)
    for (auto& f : v) faces.push_back(std::move(f));
  return FanIndex(a, lat, std::move(faces));
}

std::size_t tits_product(const FanIndex& fan, std::size_t f, std::size_t g) {
  SignVector s = fan[f].signs;
  const auto& t = fan[g].signs;
  for (std::size_t h = 0; h < s.size(); ++h)
    if (s[h] == 0) s[h] = t[h];
  return fan.at(s);
}

std::size_t opposite(const FanIndex& fan, std::size_t f) {
  SignVector s = fan[f].signs;
  for (auto& x : s) x = static_cast<std::int8_t>(-x);
  return fan.at(s);
}

bool face_leq(const FanIndex& fan, std::size_t f, std::size_t g) {
  const auto& s = fan[f].signs;
  const auto& t = fan[g].signs;
  for (std::size_t h = 0; h < s.size(); ++h)
    if (s[h] != 0 && s[h] != t[h]) return false;
  return true;
}

IndexSet separation_set(const FanIndex& fan, std::size_t c, std::size_t d) {
  IndexSet sep(fan.arrangement().size());
  const auto& s = fan[c].signs;
  const auto& t = fan[d].signs;
  for (std::size_t h = 0; h < s.size(); ++h)
    if (s[h] * t[h] < 0) sep.insert(h);
  return sep;
}

std::size_t region_containing(const FanIndex& fan, const RatVector& v) {
  const auto& a = fan.arrangement();
  if (v.size() != a.dim()) throw PreconditionError("vector length differs from ambient dimension");
  SignVector s = sign_vector_of(a, v);
  for (std::size_t h = 0; h < s.size(); ++h) {
    if (s[h] == 0) throw PreconditionError("v lies on hyperplane " + arr::hyperplane_equation(a[h]));
  }
  return fan.at(s);
}

WeakOrder::WeakOrder(const FanIndex& fan, std::size_t base) : fan_(&fan), base_(base) {
  if (base >= fan.size() || !fan.is_region(base)) throw PreconditionError("base is not a region");
  top_ = opposite(fan, base);
  sep_.resize(fan.size());
  for (auto r : fan.regions()) sep_[r] = separation_set(fan, base, r);
}

std::vector<std::size_t> WeakOrder::lower_covers(std::size_t c) const {
  std::vector<std::size_t> out;
  for (const auto& w : fan_->walls(c))
    if (sep_[c].contains(w.hyperplane)) out.push_back(w.neighbor);
  return out;
}

std::vector<std::size_t> WeakOrder::upper_covers(std::size_t c) const {
  std::vector<std::size_t> out;
  for (const auto& w : fan_->walls(c))
    if (!sep_[c].contains(w.hyperplane)) out.push_back(w.neighbor);
  return out;
}

std::size_t WeakOrder::descents(std::size_t c) const {
  std::size_t d = 0;
  for (const auto& w : fan_->walls(c)) d += sep_[c].contains(w.hyperplane);
  return d;
}

bool region_in_halfspace(const Arrangement& a, const SignVector& region, const RatVector& v) {
  std::vector<RatVector> strict;
  for (std::size_t h = 0; h < a.size(); ++h) strict.push_back(scaled(a[h].normal, region[h]));
  strict.push_back(v);
  return !exact::strict_feasible(strict, {}, a.dim());
}

bool face_in_halfspace(const FanIndex& fan, std::size_t f, const RatVector& v) {
  const auto& face = fan[f];
  if (sgn(exact::dot(v, face.witness)) > 0) return false;
  const auto& a = fan.arrangement();
  std::vector<RatVector> strict, eq;
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (face.signs[h] == 0) eq.push_back(a[h].normal);
    else strict.push_back(scaled(a[h].normal, face.signs[h]));
  }
  strict.push_back(v);
  return !exact::strict_feasible(strict, eq, a.dim());
}

namespace {

std::vector<std::size_t> filter_in_halfspace(const FanIndex& fan, const std::vector<std::size_t>& candidates,
                                             const RatVector& v, Exec exec) {
  if (v.size() != fan.arrangement().dim()) throw PreconditionError("vector length differs from ambient dimension");
  std::vector<char> inside(candidates.size(), 0);
  parallel_for(candidates.size(), exec, [&](std::size_t i) { inside[i] = face_in_halfspace(fan, candidates[i], v); });
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (inside[i]) out.push_back(candidates[i]);
  return out;
}

}  // namespace

std::vector<std::size_t> faces_in_halfspace(const FanIndex& fan, const RatVector& v, Exec exec) {
  std::vector<std::size_t> all(fan.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return filter_in_halfspace(fan, all, v, exec);
}

std::vector<std::size_t> regions_in_halfspace(const FanIndex& fan, const RatVector& v, Exec exec) {
  return filter_in_halfspace(fan, fan.regions(), v, exec);
}

UpperSetCheck is_upper_set(const WeakOrder& w, const std::vector<std::size_t>& regions) {
  std::vector<char> member(w.fan().size(), 0);
  for (auto r : regions) member[r] = 1;
  for (auto c : regions) {
    for (auto d : w.upper_covers(c)) {
      if (!member[d]) return {false, std::make_pair(c, d)};
    }
  }
  return {};
}

TopStar top_star(const WeakOrder& w, std::size_t f) {
  const FanIndex& fan = w.fan();
  TopStar t{{}, tits_product(fan, f, w.base()), tits_product(fan, f, w.top()), true};
  for (auto c : fan.regions()) {
    if (!face_leq(fan, f, c)) continue;
    t.regions.push_back(c);
    t.is_interval = t.is_interval && w.leq(t.min, c) && w.leq(c, t.max);
  }
  return t;
}

std::vector<std::size_t> descent_set(const WeakOrder& w, const std::vector<std::size_t>& delta) {
  const FanIndex& fan = w.fan();
  std::vector<char> member(fan.size(), 0);
  for (auto f : delta) member[f] = 1;
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < fan.size(); ++f)
    if (member[tits_product(fan, f, w.top())]) out.push_back(f);
  return out;
}

bool is_pure(const FanIndex& fan, const std::vector<std::size_t>& delta) {
  std::optional<std::size_t> dim;
  for (auto f : delta) {
    bool maximal = true;
    for (auto g : delta) {
      if (g != f && face_leq(fan, f, g)) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    if (dim && *dim != fan[f].dim) return false;
    dim = fan[f].dim;
  }
  return true;
}

std::vector<RatVector> ray_directions(const FanIndex& fan, std::size_t c) {
  const auto& lat = fan.lattice();
  const auto& bottom = lat[lat.bottom()].subspace.basis();
  std::optional<exact::RatMatrix> gram_inv;
  if (bottom.rows() > 0) gram_inv = exact::inverse(bottom * bottom.transpose());
  std::vector<RatVector> rays;
  for (auto f : fan.rank_one_faces()) {
    if (!face_leq(fan, f, c)) continue;
    RatVector w = fan[f].witness;
    if (gram_inv) {
      // subtract the orthogonal projection onto the bottom
      const RatVector coef = gram_inv->apply(bottom.apply(w));
      for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) w[j] -= coef[i] * bottom(i, j);
    }
    rays.push_back(positive_primitive(std::move(w)));
  }
  return rays;
}

std::vector<RatVector> rays_of_region(const FanIndex& fan, std::size_t c) {
  if (!fan.arrangement().is_essential()) throw PreconditionError("arrangement is not essential");
  return ray_directions(fan, c);
}

bool is_simplicial(const FanIndex& fan) {
  const std::size_t r = fan.lattice().rank();
  for (auto c : fan.regions())
    if (fan.walls(c).size() != r) return false;
  return true;
}

bool is_simplicial(const Arrangement& a) { return is_simplicial(enumerate_faces(a)); }

std::optional<std::size_t> non_sharp_region(const FanIndex& fan) {
  for (auto c : fan.regions()) {
    const auto rays = ray_directions(fan, c);
    if (rays.empty()) continue;
    const auto R = exact::RatMatrix::from_rows(rays, fan.arrangement().dim());
    const auto inv = exact::inverse(R * R.transpose());
    if (!inv) return c;  // rays are dependent: not simplicial
    for (std::size_t i = 0; i < inv->rows(); ++i)
      for (std::size_t j = 0; j < inv->cols(); ++j)
        if (i != j && sgn((*inv)(i, j)) > 0) return c;
  }
  return std::nullopt;
}

bool is_sharp(const FanIndex& fan) { return is_simplicial(fan) && !non_sharp_region(fan); }

bool is_sharp(const Arrangement& a) { return is_sharp(enumerate_faces(a)); }

}  // namespace primeul::fan
