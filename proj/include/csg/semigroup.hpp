#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "csg/cone.hpp"
#include "csg/int_vec.hpp"

namespace csg {

/// Submonoid of N with finite complement, with its Frobenius number computed
/// from the Apéry set of the multiplicity (round-robin algorithm).
class NumericalSemigroup {
 public:
  /// Accepts any positive generators with gcd 1 and keeps a minimal subset.
  /// Throws DomainError("ray gaps infinite") when the gcd is not 1.
  explicit NumericalSemigroup(std::vector<Int> gens);

  const std::vector<Int>& generators() const { return gens_; }
  std::size_t embedding_dimension() const { return gens_.size(); }
  const Int& multiplicity() const { return gens_.front(); }
  /// -1 when the semigroup is N.
  const Int& frobenius() const { return frobenius_; }
  Int conductor() const { return frobenius_ + 1; }
  bool contains(const Int& n) const;

 private:
  std::vector<Int> gens_;
  std::vector<Int> apery_;  // apery_[r]: least element congruent to r mod multiplicity
  Int frobenius_;
};

/// Minimal subset of positive integers generating the same submonoid of N,
/// ascending.
std::vector<Int> minimal_numerical_generators(std::vector<Int> gens);

/// Affine semigroup S ⊂ N^p given by its minimal generating set, together
/// with the cone L(S).
class AffineSemigroup {
 public:
  /// Minimalizes `gens` and builds the cone. Zero vectors are dropped.
  explicit AffineSemigroup(std::vector<IntVec> gens);

  /// Skips minimalization; only duplicates are removed. The caller vouches
  /// that no generator is a combination of the others.
  static AffineSemigroup from_minimal(std::vector<IntVec> gens);

  const std::vector<IntVec>& generators() const { return gens_; }
  const Cone& cone() const { return cone_; }
  std::size_t dim() const { return cone_.dim(); }
  std::size_t embedding_dimension() const { return gens_.size(); }

  /// Exact N-combination membership.
  bool contains(const IntVec& x) const;

 private:
  AffineSemigroup(std::vector<IntVec> gens, Cone cone) : gens_(std::move(gens)), cone_(std::move(cone)) {}

  std::vector<IntVec> gens_;
  Cone cone_;
};

/// True iff x = sum mu_j gens_j with mu ∈ N^n. Depth-first subtraction of
/// generators with a visited set on residuals; residuals leaving N^p are
/// pruned. Generators must be nonzero vectors of N^p.
bool in_monoid(std::span<const IntVec> gens, const IntVec& x);

inline bool member(const AffineSemigroup& s, const IntVec& x) { return s.contains(x); }

/// Subset generating the same semigroup in which no element is an
/// N-combination of the others, canonically sorted. Zero vectors and
/// duplicates are dropped.
std::vector<IntVec> minimalize(std::vector<IntVec> gens);

/// lambda values with lambda * a_i ∈ Λ_S, ascending.
std::vector<Int> ray_multiples(const AffineSemigroup& s, std::size_t ray);

/// The semigroup S_i = {lambda : lambda * a_i ∈ S}. Throws
/// DomainError("ray uncovered") when no generator lies on the ray and
/// DomainError("ray gaps infinite") when the multiples have gcd > 1.
NumericalSemigroup ray_numerical_semigroup(const AffineSemigroup& s, std::size_t ray);

/// Conductor vector c_i = c * a_i; zero when S_i = N.
IntVec conductor_vector(const AffineSemigroup& s, std::size_t ray);

/// Per ray: the nonzero images Υ_i(A) generating T_i, and the minimal
/// generating set Γ_i of T_i. Both canonically sorted.
struct GammaSet {
  std::vector<IntVec> t_generators;
  std::vector<IntVec> gamma;
};

std::vector<GammaSet> gamma_sets(const Cone& c);
std::vector<GammaSet> gamma_sets(const Cone& c, std::span<const IntVec> unit_points);

}  // namespace csg
