#include "csg/check.hpp"

#include <optional>
#include <unordered_set>

#include "csg/kernels.hpp"

namespace csg {

std::string CheckResult::message() const {
  const std::string where = "ray " + std::to_string(ray + 1) + " " + ray_vector.to_string();
  switch (failure) {
    case CheckFailure::none:
      return "all conditions hold";
    case CheckFailure::ray_uncovered:
      return where + ": no minimal generator on the extremal ray, so the ray has infinitely many gaps";
    case CheckFailure::ray_gaps_infinite:
      return where + ": generator multiples on the ray have gcd > 1, so the ray has infinitely many gaps";
    case CheckFailure::gamma_uncovered:
      return where + ": no minimal generator projects onto Gamma element " + missing.to_string();
  }
  return {};
}

bool ray_gaps_finite(const AffineSemigroup& s, std::size_t ray) {
  const std::vector<Int> multiples = ray_multiples(s, ray);
  Int g = 0;
  for (const Int& m : multiples) g = gcd(g, m);
  return g == 1;
}

CheckResult check_c_semigroup(const AffineSemigroup& s) {
  const Cone& cone = s.cone();
  const std::size_t q = cone.ray_count();

  for (std::size_t i = 0; i < q; ++i) {
    if (ray_gaps_finite(s, i)) continue;
    CheckResult r;
    r.failure = ray_multiples(s, i).empty() ? CheckFailure::ray_uncovered : CheckFailure::ray_gaps_infinite;
    r.ray = i;
    r.ray_vector = cone.ray(i);
    return r;
  }

  const std::vector<GammaSet> gammas = gamma_sets(cone);
  // Per-ray coverage is independent; slot i holds the first uncovered α.
  std::vector<std::optional<IntVec>> uncovered(q);
  kernels::for_each_index(q, [&](std::size_t i) {
    std::unordered_set<IntVec, IntVecHash> images;
    for (const IntVec& g : s.generators()) images.insert(cone.upsilon(i, g));
    for (const IntVec& alpha : gammas[i].gamma) {
      if (!images.contains(alpha)) {
        uncovered[i] = alpha;
        return;
      }
    }
  });
  for (std::size_t i = 0; i < q; ++i) {
    if (!uncovered[i]) continue;
    CheckResult r;
    r.failure = CheckFailure::gamma_uncovered;
    r.ray = i;
    r.ray_vector = cone.ray(i);
    r.missing = *uncovered[i];
    return r;
  }
  CheckResult ok;
  ok.is_c_semigroup = true;
  return ok;
}

CheckResult is_c_semigroup(std::span<const IntVec> gens) {
  return check_c_semigroup(AffineSemigroup(std::vector<IntVec>(gens.begin(), gens.end())));
}

void require_c_semigroup(const AffineSemigroup& s) {
  CheckResult r = check_c_semigroup(s);
  if (!r.is_c_semigroup) throw NotCSemigroup(std::move(r));
}

}  // namespace csg
