#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <unordered_set>
#include <vector>

#include "csg/cone.hpp"
#include "csg/semigroup.hpp"

namespace csg {

/// A C-semigroup described by its cone and its finite gap set, S' = C \ H'.
///
/// Construction checks that H' ⊂ C \ {0} and that C \ H' is closed under
/// addition: every decomposition h = u + v of a gap into nonzero cone points
/// has a gap among u, v.
class GapSemigroup {
 public:
  GapSemigroup(Cone cone, std::vector<IntVec> gaps);
  GapSemigroup(std::shared_ptr<const Cone> cone, std::vector<IntVec> gaps);

  const Cone& cone() const { return *cone_; }
  const std::shared_ptr<const Cone>& shared_cone() const { return cone_; }
  const std::vector<IntVec>& gaps() const { return gaps_; }

  bool contains(const IntVec& x) const;

  /// S' ∪ {a} for a special gap a. No revalidation: adjoining a special gap
  /// always yields a semigroup.
  GapSemigroup adjoin_special_gap(const IntVec& a) const;

 private:
  struct Unchecked {};
  GapSemigroup(std::shared_ptr<const Cone> cone, std::vector<IntVec> gaps, Unchecked);

  std::shared_ptr<const Cone> cone_;
  std::vector<IntVec> gaps_;
  std::unordered_set<IntVec, IntVecHash> lookup_;
};

inline bool gap_member(const GapSemigroup& g, const IntVec& x) { return g.contains(x); }

/// Special gaps computed from the gap set alone: a ∈ H' with h - a never a
/// nonzero member for h ∈ H', and 2a a member.
std::vector<IntVec> sg_from_gaps(const GapSemigroup& g);

/// |SG| <= 1.
bool is_irreducible(const GapSemigroup& g);

/// Minimal generating set of C \ H', canonically sorted.
std::vector<IntVec> generators_from_gaps(const GapSemigroup& g);

struct Component {
  std::vector<IntVec> gaps;
  std::vector<IntVec> generators;
};

/// Decomposition of a C-semigroup into irreducible C-semigroups containing
/// it, found by repeatedly adjoining special gaps. Components are sorted by
/// gap list; no component contains another. Throws NotCSemigroup on input
/// that is not a C-semigroup.
std::vector<Component> decompose(const AffineSemigroup& s);
std::vector<Component> decompose(std::span<const IntVec> gens);

/// The search itself, from a gap-set description. `rounds` receives the
/// number of frontier expansions when non-null.
std::vector<GapSemigroup> decompose_gaps(const GapSemigroup& start, std::size_t* rounds = nullptr);

}  // namespace csg
