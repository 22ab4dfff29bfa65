#include "csg/cone.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "csg/error.hpp"
#include "csg/kernels.hpp"
#include "csg/unit_box.hpp"

namespace csg {

namespace {

// Calls f(indices) for each k-subset of [0, n) in lexicographic order until f
// returns true. Returns whether f stopped the enumeration.
template <typename F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (f(std::as_const(idx))) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void validate_generators(std::span<const IntVec> gens) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  const std::size_t p = gens.front().dim();
  if (p == 0) throw std::invalid_argument("generators must have dimension >= 1");
  for (const IntVec& g : gens) {
    if (g.dim() != p) throw std::invalid_argument("generators of different dimension");
    if (!g.is_nonnegative()) throw std::invalid_argument("generator " + g.to_string() + " has a negative entry");
    if (g.is_zero()) throw std::invalid_argument("zero generator");
  }
}

}  // namespace

Cone Cone::from_generators(std::span<const IntVec> gens) {
  validate_generators(gens);
  const std::size_t p = gens.front().dim();

  std::vector<IntVec> dirs;
  dirs.reserve(gens.size());
  for (const IntVec& g : gens) dirs.push_back(primitive(g));
  dirs = canonical_set(std::move(dirs));
  if (rank(dirs) < p) throw DomainError("degenerate cone");

  Cone cone;
  cone.dim_ = p;
  if (p == 1) {
    cone.facets_.push_back(Hyperplane{IntVec{1}});
    cone.rays_.push_back(RayData{IntVec{1}, {}});
    return cone;
  }

  std::set<IntVec> normals;
  std::vector<IntVec> subset(p - 1);
  for_each_combination(dirs.size(), p - 1, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < idx.size(); ++i) subset[i] = dirs[idx[i]];
    IntVec normal = orthogonal_complement(subset);
    if (normal.is_zero()) return false;
    bool any_pos = false;
    bool any_neg = false;
    for (const IntVec& d : dirs) {
      const int s = dot(normal, d).sign();
      any_pos |= s > 0;
      any_neg |= s < 0;
    }
    if (any_pos && any_neg) return false;
    if (any_neg) normal = -normal;
    normals.insert(primitive(normal));
    return false;
  });
  for (const IntVec& n : normals) cone.facets_.push_back(Hyperplane{n});

  for (const IntVec& d : dirs) {
    std::vector<std::size_t> tight;
    for (std::size_t j = 0; j < cone.facets_.size(); ++j) {
      if (evaluate(cone.facets_[j], d).is_zero()) tight.push_back(j);
    }
    std::vector<IntVec> tight_normals;
    for (std::size_t j : tight) tight_normals.push_back(cone.facets_[j].normal);
    if (rank(tight_normals) != p - 1) continue;

    RayData ray{d, {}};
    std::vector<IntVec> chosen(p - 1);
    for_each_combination(tight.size(), p - 1, [&](const std::vector<std::size_t>& idx) {
      for (std::size_t i = 0; i < idx.size(); ++i) chosen[i] = tight_normals[idx[i]];
      if (rank(chosen) != p - 1) return false;
      for (std::size_t i : idx) ray.facets.push_back(tight[i]);
      return true;
    });
    cone.rays_.push_back(std::move(ray));
  }
  std::sort(cone.rays_.begin(), cone.rays_.end(), [](const RayData& x, const RayData& y) { return x.a < y.a; });
  return cone;
}

const IntVec& Cone::ray(std::size_t i) const {
  if (i >= rays_.size()) throw std::out_of_range("ray index out of range");
  return rays_[i].a;
}

bool Cone::contains(const IntVec& point) const {
  if (point.dim() != dim_) throw std::invalid_argument("cone membership: dimension mismatch");
  if (!point.is_nonnegative()) return false;
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Hyperplane& h) { return evaluate(h, point).sign() >= 0; });
}

IntVec Cone::upsilon(std::size_t ray, const IntVec& point) const {
  if (ray >= rays_.size()) throw std::out_of_range("ray index out of range");
  if (point.dim() != dim_) throw std::invalid_argument("upsilon: dimension mismatch");
  const auto& idx = rays_[ray].facets;
  std::vector<Int> values;
  values.reserve(idx.size());
  for (std::size_t j : idx) values.push_back(evaluate(facets_[j], point));
  return IntVec(std::move(values));
}

bool Cone::on_ray(std::size_t ray, const IntVec& point) const {
  return contains(point) && upsilon(ray, point).is_zero();
}

std::vector<IntVec> Cone::ray_vectors() const {
  std::vector<IntVec> out;
  out.reserve(rays_.size());
  for (const RayData& r : rays_) out.push_back(r.a);
  return out;
}

std::vector<IntVec> zonotope_lattice_points(std::span<const IntVec> columns) {
  if (columns.empty()) throw std::invalid_argument("zonotope needs at least one column");
  IntVec upper = IntVec::zero(columns.front().dim());
  for (const IntVec& c : columns) {
    if (!c.is_nonnegative()) throw std::invalid_argument("zonotope columns must lie in N^p");
    upper += c;
  }
  const UnitBoxFeasibility solver(std::vector<IntVec>(columns.begin(), columns.end()));
  return kernels::filter_box(upper, [&](const IntVec& p) { return solver.feasible(p); });
}

std::vector<IntVec> unit_zonotope(const Cone& c) {
  const auto rays = c.ray_vectors();
  return zonotope_lattice_points(rays);
}

}  // namespace csg
