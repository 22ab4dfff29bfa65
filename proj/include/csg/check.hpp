#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "csg/error.hpp"
#include "csg/semigroup.hpp"

namespace csg {

enum class CheckFailure {
  none,
  ray_uncovered,      // no minimal generator on the extremal ray
  ray_gaps_infinite,  // ray multiples have gcd > 1
  gamma_uncovered,    // some α ∈ Γ_i is not Υ_i of any minimal generator
};

/// Outcome of the C-semigroup test. On failure, names the first violated
/// condition in ray order (and, for gamma_uncovered, the first uncovered α
/// in canonical order).
struct CheckResult {
  bool is_c_semigroup = false;
  CheckFailure failure = CheckFailure::none;
  std::size_t ray = 0;
  IntVec ray_vector;
  IntVec missing;

  std::string message() const;
};

/// Some generator lies on the ray and their multiples have gcd 1.
bool ray_gaps_finite(const AffineSemigroup& s, std::size_t ray);

/// Whether the semigroup is a C_S-semigroup: every ray has finitely many gaps
/// and, for every ray i and α ∈ Γ_i, some minimal generator has Υ_i = α.
CheckResult check_c_semigroup(const AffineSemigroup& s);

/// Minimalizes `gens` first. Degenerate cones propagate as DomainError.
CheckResult is_c_semigroup(std::span<const IntVec> gens);

/// Thrown by operations that require a C-semigroup.
class NotCSemigroup : public DomainError {
 public:
  explicit NotCSemigroup(CheckResult result)
      : DomainError("not a C-semigroup: " + result.message()), result_(std::move(result)) {}
  const CheckResult& result() const { return result_; }

 private:
  CheckResult result_;
};

/// Throws NotCSemigroup unless check_c_semigroup passes.
void require_c_semigroup(const AffineSemigroup& s);

}  // namespace csg
