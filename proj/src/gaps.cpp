#include "csg/gaps.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "csg/kernels.hpp"
#include "csg/unit_box.hpp"

namespace csg {

namespace {

// Least integer >= num / den for den > 0.
Int ceil_div(const Int& num, const Int& den) {
  Int q = num / den;
  if (q * den < num) ++q;
  return q;
}

}  // namespace

IntVec line_minimal_member(const AffineSemigroup& s, std::size_t ray, const IntVec& witness,
                           const std::optional<Int>& horizon) {
  const Cone& cone = s.cone();
  const IntVec& a = cone.ray(ray);
  if (witness.dim() != a.dim()) throw std::invalid_argument("line search: dimension mismatch");

  // First lambda with witness + lambda * a inside N^p and on the nonnegative
  // side of every facet. Coordinates and facets that are constant along the
  // line must already be nonnegative.
  bool have_start = false;
  Int start = 0;
  auto raise = [&](const Int& value, const Int& slope) {
    if (slope.is_zero()) {
      if (value.sign() < 0) throw std::invalid_argument("line through " + witness.to_string() + " misses the cone");
      return;
    }
    const Int needed = ceil_div(-value, slope);
    if (!have_start || needed > start) start = needed;
    have_start = true;
  };
  for (std::size_t j = 0; j < a.dim(); ++j) raise(witness[j], a[j]);
  for (const Hyperplane& h : cone.facets()) raise(evaluate(h, witness), evaluate(h, a));

  IntVec point = witness + start * a;
  for (Int step = 0; !horizon || step <= *horizon; ++step) {
    if (s.contains(point)) return point;
    point += a;
  }
  throw DomainError("line search overflow on ray " + std::to_string(ray + 1) + " through " + witness.to_string());
}

std::vector<IntVec> ray_generator_zonotope(const AffineSemigroup& s) {
  std::vector<IntVec> least;
  for (std::size_t i = 0; i < s.cone().ray_count(); ++i) {
    const std::vector<Int> multiples = ray_multiples(s, i);
    if (multiples.empty()) throw DomainError("ray uncovered");
    least.push_back(multiples.front() * s.cone().ray(i));
  }
  return zonotope_lattice_points(least);
}

RayAnchor ray_anchor(const AffineSemigroup& s, std::size_t ray) {
  require_c_semigroup(s);
  const std::vector<IntVec> d_points = ray_generator_zonotope(s);
  return ray_anchor(s, ray, d_points);
}

RayAnchor ray_anchor(const AffineSemigroup& s, std::size_t ray, std::span<const IntVec> d_points) {
  const Cone& cone = s.cone();
  const IntVec& a = cone.ray(ray);
  const NumericalSemigroup ray_semigroup = ray_numerical_semigroup(s, ray);

  RayAnchor out;
  out.ray = ray;
  out.conductor = ray_semigroup.conductor() * a;

  // One witness per line: the canonically first point of D with that image.
  std::map<IntVec, IntVec> witnesses;
  for (const IntVec& q : d_points) {
    IntVec alpha = cone.upsilon(ray, q);
    if (!alpha.is_zero()) witnesses.try_emplace(std::move(alpha), q);
  }
  std::vector<IntVec> lines;
  for (const auto& [alpha, q] : witnesses) lines.push_back(q);

  std::vector<IntVec> minima(lines.size());
  kernels::for_each_index(lines.size(), [&](std::size_t k) { minima[k] = line_minimal_member(s, ray, lines[k]); });

  Int widest = 0;
  for (const IntVec& m : minima) widest = std::max(widest, m.norm1());
  out.bound = out.conductor.norm1() + widest;
  out.line_minima = canonical_set(std::move(minima));

  // Strictly beyond n_i, then forward to the next multiple inside S_i.
  Int lambda = out.bound / a.norm1() + 1;
  while (!ray_semigroup.contains(lambda)) ++lambda;
  out.anchor = lambda * a;
  return out;
}

GapComputation gap_computation(const AffineSemigroup& s) {
  require_c_semigroup(s);
  GapComputation out;
  out.d_points = ray_generator_zonotope(s);
  const std::size_t q = s.cone().ray_count();
  for (std::size_t i = 0; i < q; ++i) out.anchors.push_back(ray_anchor(s, i, out.d_points));

  std::vector<IntVec> columns;
  IntVec upper = IntVec::zero(s.dim());
  for (const RayAnchor& r : out.anchors) {
    columns.push_back(r.anchor);
    upper += r.anchor;
  }
  const UnitBoxFeasibility in_box(columns);
  out.gaps = kernels::filter_box(upper, [&](const IntVec& p) { return in_box.feasible(p) && !s.contains(p); });
  return out;
}

std::vector<IntVec> compute_gaps(const AffineSemigroup& s) { return gap_computation(s).gaps; }

std::vector<IntVec> compute_gaps(std::span<const IntVec> gens) {
  return compute_gaps(AffineSemigroup(std::vector<IntVec>(gens.begin(), gens.end())));
}

}  // namespace csg
