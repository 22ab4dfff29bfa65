#pragma once

#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "csg/decomposition.hpp"
#include "csg/invariants.hpp"
#include "csg/semigroup.hpp"

// Brute-force cross-checks behind `csg --verify`. Desk scale only: every
// check enumerates all points of N^p up to a 1-norm bound.

namespace csg {

/// Membership in the monoid spanned by `gens`, tabulated for every point of
/// N^p with 1-norm <= norm_bound by the recurrence
/// P ∈ S iff P = 0 or P - g ∈ S for some generator g.
class BruteForceMembership {
 public:
  BruteForceMembership(std::span<const IntVec> gens, const Int& norm_bound);

  /// Throws std::out_of_range for points beyond the tabulated bound.
  bool contains(const IntVec& p) const;
  const Int& norm_bound() const { return bound_; }
  /// Tabulated points, canonically sorted.
  const std::vector<IntVec>& points() const { return points_; }

 private:
  Int bound_;
  std::vector<IntVec> points_;
  std::unordered_set<IntVec, IntVecHash> members_;
};

struct VerifyReport {
  std::vector<std::string> checks;    // what was compared
  std::vector<std::string> failures;  // empty when everything agreed
  bool ok() const { return failures.empty(); }
  void merge(const VerifyReport& other);
};

/// Cone points of 1-norm <= max gap norm + max generator norm that the
/// tabulated membership rejects must be exactly `gaps`.
VerifyReport verify_gaps(const AffineSemigroup& s, std::span<const IntVec> gaps);

/// PF and SG recomputed from their definitions on the tabulated membership.
VerifyReport verify_special_gaps(const AffineSemigroup& s, std::span<const IntVec> gaps,
                                 std::span<const IntVec> pf, std::span<const IntVec> sg);

/// e(S) >= bound, and the Λ' / coverage terms recomputed directly.
VerifyReport verify_bound(const AffineSemigroup& s, const BoundReport& report);

/// Irreducibility, gap containment, union, and the generators/gaps round trip
/// of every component.
VerifyReport verify_decomposition(const AffineSemigroup& s, std::span<const IntVec> gaps,
                                  std::span<const Component> components);

}  // namespace csg
