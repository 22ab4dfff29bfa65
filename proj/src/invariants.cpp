#include "csg/invariants.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "csg/check.hpp"
#include "csg/kernels.hpp"

namespace csg {

std::vector<IntVec> pseudo_frobenius(const AffineSemigroup& s, std::span<const IntVec> gaps) {
  return kernels::filter_points(gaps, [&](const IntVec& a) {
    return std::all_of(s.generators().begin(), s.generators().end(),
                       [&](const IntVec& g) { return s.contains(a + g); });
  });
}

std::vector<IntVec> special_gaps(const AffineSemigroup& s, std::span<const IntVec> gaps) {
  const std::vector<IntVec> pf = pseudo_frobenius(s, gaps);
  return kernels::filter_points(pf, [&](const IntVec& a) { return s.contains(Int(2) * a); });
}

BoundReport embedding_bound(const AffineSemigroup& s) {
  require_c_semigroup(s);
  const Cone& cone = s.cone();
  const std::vector<IntVec> unit_points = unit_zonotope(cone);
  const std::vector<GammaSet> gammas = gamma_sets(cone, unit_points);

  BoundReport report;
  report.embedding_dimension = s.embedding_dimension();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < cone.ray_count(); ++i) {
    report.ray_semigroup_dims.push_back(ray_numerical_semigroup(s, i).embedding_dimension());
    report.gamma_dims.push_back(gammas[i].gamma.size());
    total += static_cast<std::int64_t>(report.ray_semigroup_dims.back() + report.gamma_dims.back());
  }

  const std::unordered_set<IntVec, IntVecHash> unit_set(unit_points.begin(), unit_points.end());
  for (const IntVec& g : s.generators()) {
    if (unit_set.contains(g)) report.unit_generators.push_back(g);
  }
  for (const IntVec& g : report.unit_generators) {
    std::size_t covered = 0;
    for (std::size_t i = 0; i < cone.ray_count(); ++i) {
      const IntVec image = cone.upsilon(i, g);
      const auto& gamma = gammas[i].gamma;
      if (image.is_zero() || std::binary_search(gamma.begin(), gamma.end(), image)) ++covered;
    }
    report.coverage.push_back(covered);
    total -= static_cast<std::int64_t>(covered);
  }
  total += static_cast<std::int64_t>(report.unit_generators.size());
  report.bound = total;
  return report;
}

AffineSemigroup construct_tight_family(const Cone& cone, std::span<const std::vector<Int>> ray_generators,
                                       std::span<const IntVec> extra) {
  const std::size_t q = cone.ray_count();
  if (ray_generators.size() != q) {
    throw std::invalid_argument("expected " + std::to_string(q) + " numerical generator lists, got " +
                                std::to_string(ray_generators.size()));
  }
  for (std::size_t i = 0; i < q; ++i) {
    const auto& list = ray_generators[i];
    if (list.empty()) throw std::invalid_argument("ray " + std::to_string(i + 1) + ": empty generator list");
    Int g = 0;
    for (const Int& n : list) {
      if (n < 2) throw std::invalid_argument("ray " + std::to_string(i + 1) + ": generator " + n.str() + " < 2");
      g = gcd(g, n);
    }
    if (g != 1) throw std::invalid_argument("ray " + std::to_string(i + 1) + ": generators have gcd " + g.str());
  }

  const std::vector<IntVec> points = canonical_set(std::vector<IntVec>(extra.begin(), extra.end()));
  const std::vector<IntVec> rays = cone.ray_vectors();
  for (const IntVec& d : points) {
    if (d.dim() != cone.dim()) throw std::invalid_argument("extra point " + d.to_string() + ": dimension mismatch");
    if (!cone.contains(d)) throw std::invalid_argument("extra point " + d.to_string() + " lies outside the cone");
    if (std::find(rays.begin(), rays.end(), d) != rays.end()) {
      throw std::invalid_argument("extra point " + d.to_string() + " is a primitive ray vector");
    }
  }

  const std::vector<GammaSet> gammas = gamma_sets(cone);
  for (std::size_t i = 0; i < q; ++i) {
    std::map<IntVec, IntVec> owner;  // image -> point
    for (const IntVec& d : points) {
      IntVec image = cone.upsilon(i, d);
      auto [it, inserted] = owner.try_emplace(image, d);
      if (!inserted) {
        throw std::invalid_argument("ray " + std::to_string(i + 1) + ": " + it->second.to_string() + " and " +
                                    d.to_string() + " share the projection " + image.to_string());
      }
    }
    for (const IntVec& gamma : gammas[i].gamma) {
      if (!owner.contains(gamma)) {
        throw std::invalid_argument("ray " + std::to_string(i + 1) + ": no extra point projects onto " +
                                    gamma.to_string());
      }
    }
  }

  std::vector<IntVec> gens = points;
  for (std::size_t i = 0; i < q; ++i) {
    for (const Int& n : ray_generators[i]) gens.push_back(n * rays[i]);
  }
  return AffineSemigroup::from_minimal(std::move(gens));
}

}  // namespace csg
