#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "csg/check.hpp"
#include "csg/semigroup.hpp"

namespace csg {

/// Per-ray data bounding the gap set of a C-semigroup.
struct RayAnchor {
  std::size_t ray = 0;
  IntVec conductor;                 // c_i = conductor(S_i) * a_i
  std::vector<IntVec> line_minima;  // minimal-norm members on each line through D, canonical
  Int bound;                        // n_i = ||c_i||_1 + max ||m||_1
  IntVec anchor;                    // x_i: least member of the ray with ||x_i||_1 > n_i
};

/// Member of S with minimal 1-norm on the line { witness + lambda * a_i }.
///
/// The walk starts at the first point of the line inside the cone. With a
/// horizon it gives up after that many further steps with
/// DomainError("line search overflow"); without one it runs until it finds a
/// member, which terminates whenever S is a C-semigroup. Throws
/// std::invalid_argument when the line never enters the cone.
IntVec line_minimal_member(const AffineSemigroup& s, std::size_t ray, const IntVec& witness,
                           const std::optional<Int>& horizon = std::nullopt);

/// The set D: lattice points of the zonotope spanned by the least generator
/// on each extremal ray.
std::vector<IntVec> ray_generator_zonotope(const AffineSemigroup& s);

/// Throws NotCSemigroup unless S is a C-semigroup.
RayAnchor ray_anchor(const AffineSemigroup& s, std::size_t ray);
/// Unchecked: loops forever if some line of the cone holds no member of S.
RayAnchor ray_anchor(const AffineSemigroup& s, std::size_t ray, std::span<const IntVec> d_points);

/// Everything the gap algorithm computes on the way to H(S).
struct GapComputation {
  std::vector<IntVec> d_points;
  std::vector<RayAnchor> anchors;
  std::vector<IntVec> gaps;
};

/// Throws NotCSemigroup when the check fails.
GapComputation gap_computation(const AffineSemigroup& s);

/// H(S) = C_S \ S, canonically sorted. Throws NotCSemigroup when S is not a
/// C-semigroup.
std::vector<IntVec> compute_gaps(const AffineSemigroup& s);
std::vector<IntVec> compute_gaps(std::span<const IntVec> gens);

}  // namespace csg
