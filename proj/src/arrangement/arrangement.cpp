#include "primeul/arrangement/arrangement.hpp"

#include "primeul/errors.hpp"

namespace primeul::arr {

Arrangement::Arrangement(std::size_t dim, const std::vector<RatVector>& normals) : dim_(dim) {
  for (const auto& n : normals) add(n);
}

std::optional<std::size_t> Arrangement::find(RatVector normal) const {
  if (normal.size() != dim_ || exact::normalize_primitive(normal) == 0) return std::nullopt;
  for (std::size_t i = 0; i < h_.size(); ++i) {
    if (h_[i].normal == normal) return i;
  }
  return std::nullopt;
}

void Arrangement::add(RatVector normal) {
  if (normal.size() != dim_) throw PreconditionError("normal has wrong length");
  if (exact::normalize_primitive(normal) == 0) throw PreconditionError("zero normal vector");
  for (const auto& h : h_) {
    if (h.normal == normal) throw PreconditionError("repeated hyperplane");
  }
  h_.push_back({std::move(normal)});
}

std::pair<std::size_t, int> Arrangement::add_or_find(RatVector normal) {
  if (normal.size() != dim_) throw PreconditionError("normal has wrong length");
  const int s = exact::normalize_primitive(normal);
  if (s == 0) throw PreconditionError("zero normal vector");
  for (std::size_t i = 0; i < h_.size(); ++i) {
    if (h_[i].normal == normal) return {i, s};
  }
  h_.push_back({std::move(normal)});
  return {h_.size() - 1, s};
}

std::vector<RatVector> Arrangement::normals() const {
  std::vector<RatVector> out;
  out.reserve(h_.size());
  for (const auto& h : h_) out.push_back(h.normal);
  return out;
}

std::size_t Arrangement::rank() const {
  return exact::matrix_rank(RatMatrix::from_rows(normals(), dim_));
}

Subspace Arrangement::bottom() const { return Subspace::solutions(normals(), dim_); }

RatVector ChartedArrangement::lift(const RatVector& c) const {
  RatVector x(chart.cols(), Rational(0));
  for (std::size_t i = 0; i < chart.rows(); ++i) {
    if (sgn(c[i]) == 0) continue;
    for (std::size_t j = 0; j < chart.cols(); ++j) x[j] += c[i] * chart(i, j);
  }
  return x;
}

RatVector ChartedArrangement::pull_back(const RatVector& functional) const {
  return chart.apply(functional);
}

ChartedArrangement restrict_to(const Arrangement& a, const RatMatrix& basis_rows) {
  ChartedArrangement r{Arrangement(basis_rows.rows()), basis_rows, {}, {}};
  r.index.assign(a.size(), -1);
  r.orientation.assign(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    RatVector m = basis_rows.apply(a[i].normal);
    if (exact::is_zero(m)) continue;
    auto [idx, s] = r.arrangement.add_or_find(std::move(m));
    r.index[i] = static_cast<long>(idx);
    r.orientation[i] = s;
  }
  return r;
}

ChartedArrangement essentialization(const Arrangement& a) {
  return restrict_to(a, exact::rref(RatMatrix::from_rows(a.normals(), a.dim())));
}

Arrangement essentialize(const Arrangement& a) { return essentialization(a).arrangement; }

Arrangement product(const Arrangement& a, const Arrangement& b) {
  Arrangement p(a.dim() + b.dim());
  for (const auto& h : a.hyperplanes()) {
    RatVector n(p.dim(), Rational(0));
    std::copy(h.normal.begin(), h.normal.end(), n.begin());
    p.add(std::move(n));
  }
  for (const auto& h : b.hyperplanes()) {
    RatVector n(p.dim(), Rational(0));
    std::copy(h.normal.begin(), h.normal.end(), n.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    p.add(std::move(n));
  }
  return p;
}

namespace {

std::string side(const RatVector& n, int s) {
  std::string out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (sgn(n[i]) != s) continue;
    const Rational c = s > 0 ? n[i] : Rational(-n[i]);
    if (!out.empty()) out += "+";
    if (c != 1) out += c.get_str();
    out += "x" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string hyperplane_equation(const Hyperplane& h) {
  return side(h.normal, 1) + "=" + side(h.normal, -1);
}

}  // namespace primeul::arr
