#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "csg/semigroup.hpp"

namespace csg {

/// Gaps a with a + s ∈ S for every minimal generator s. Checking generators
/// suffices: every nonzero member is a generator plus a member.
std::vector<IntVec> pseudo_frobenius(const AffineSemigroup& s, std::span<const IntVec> gaps);

/// Pseudo-Frobenius elements a with 2a ∈ S.
std::vector<IntVec> special_gaps(const AffineSemigroup& s, std::span<const IntVec> gaps);

/// Terms of the embedding-dimension lower bound
///   e(S) >= sum_i (e(S_i) + e(T_i)) + k - sum_l #(M_l).
struct BoundReport {
  std::vector<std::size_t> ray_semigroup_dims;  // e(S_i)
  std::vector<std::size_t> gamma_dims;          // e(T_i) = |Γ_i|
  std::vector<IntVec> unit_generators;          // Λ' = Λ_S ∩ A, canonical
  std::vector<std::size_t> coverage;            // #(M_l) per element of Λ'
  std::int64_t bound = 0;
  std::size_t embedding_dimension = 0;          // e(S) = |Λ_S|
};

/// Requires a C-semigroup (throws NotCSemigroup otherwise).
BoundReport embedding_bound(const AffineSemigroup& s);

/// Semigroup generated by `extra` together with n * a_i for every generator
/// n of the i-th numerical semigroup, for a family whose embedding dimension
/// meets the lower bound.
///
/// Validation (std::invalid_argument naming the offending data):
///  - one numerical generator list per ray, gcd 1, all entries >= 2;
///  - every extra point lies in the cone and is not a primitive ray vector;
///  - for every ray i and γ ∈ Γ_i exactly one extra point has Υ_i = γ;
///  - for every ray i, distinct extra points have distinct Υ_i images.
/// The output keeps the generators as given, minus exact duplicates.
AffineSemigroup construct_tight_family(const Cone& cone, std::span<const std::vector<Int>> ray_generators,
                                       std::span<const IntVec> extra);

}  // namespace csg
