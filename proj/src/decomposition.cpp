#include "csg/decomposition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "csg/check.hpp"
#include "csg/gaps.hpp"
#include "csg/kernels.hpp"

namespace csg {

GapSemigroup::GapSemigroup(Cone cone, std::vector<IntVec> gaps)
    : GapSemigroup(std::make_shared<const Cone>(std::move(cone)), std::move(gaps)) {}

GapSemigroup::GapSemigroup(std::shared_ptr<const Cone> cone, std::vector<IntVec> gaps)
    : GapSemigroup(std::move(cone), std::move(gaps), Unchecked{}) {
  for (const IntVec& h : gaps_) {
    if (h.dim() != cone_->dim()) throw std::invalid_argument("gap " + h.to_string() + ": dimension mismatch");
    if (h.is_zero()) throw std::invalid_argument("0 cannot be a gap");
    if (!cone_->contains(h)) throw std::invalid_argument("gap " + h.to_string() + " lies outside the cone");
  }
  for (const IntVec& h : gaps_) {
    const std::size_t n = kernels::box_size(h);
    for (std::size_t k = 1; k < n; ++k) {
      IntVec u = kernels::box_point(h, k);
      if (u == h || lookup_.contains(u) || !cone_->contains(u)) continue;
      IntVec v = h - u;
      if (!lookup_.contains(v) && cone_->contains(v)) {
        throw std::invalid_argument("complement of the gap set is not closed: " + h.to_string() + " = " +
                                    u.to_string() + " + " + v.to_string());
      }
    }
  }
}

GapSemigroup::GapSemigroup(std::shared_ptr<const Cone> cone, std::vector<IntVec> gaps, Unchecked)
    : cone_(std::move(cone)), gaps_(canonical_set(std::move(gaps))), lookup_(gaps_.begin(), gaps_.end()) {}

bool GapSemigroup::contains(const IntVec& x) const { return cone_->contains(x) && !lookup_.contains(x); }

GapSemigroup GapSemigroup::adjoin_special_gap(const IntVec& a) const {
  std::vector<IntVec> rest;
  rest.reserve(gaps_.size());
  for (const IntVec& h : gaps_) {
    if (h != a) rest.push_back(h);
  }
  return GapSemigroup(cone_, std::move(rest), Unchecked{});
}

std::vector<IntVec> sg_from_gaps(const GapSemigroup& g) {
  std::vector<IntVec> out;
  for (const IntVec& a : g.gaps()) {
    const bool pseudo_frobenius = std::none_of(g.gaps().begin(), g.gaps().end(), [&](const IntVec& h) {
      const IntVec diff = h - a;
      return !diff.is_zero() && g.contains(diff);
    });
    if (pseudo_frobenius && g.contains(Int(2) * a)) out.push_back(a);
  }
  return out;
}

bool is_irreducible(const GapSemigroup& g) { return sg_from_gaps(g).size() <= 1; }

std::vector<IntVec> generators_from_gaps(const GapSemigroup& g) {
  const Cone& cone = g.cone();
  const Int slack = Int(static_cast<unsigned long long>(g.gaps().size())) + 2;

  // A minimal generator x = sum lambda_i a_i has lambda_i < c_i + |H'| + 2 on
  // every ray: otherwise one of the |H'| + 1 splittings
  // x = (c_i + j) a_i + rest, 1 <= j <= |H'| + 1, has rest outside H'.
  IntVec upper = IntVec::zero(cone.dim());
  for (std::size_t i = 0; i < cone.ray_count(); ++i) {
    const IntVec& a = cone.ray(i);
    std::size_t pivot = 0;
    while (a[pivot].is_zero()) ++pivot;
    Int conductor = 0;
    for (const IntVec& h : g.gaps()) {
      if (cone.on_ray(i, h)) conductor = std::max<Int>(conductor, h[pivot] / a[pivot] + 1);
    }
    upper += (conductor + slack) * a;
  }
  const std::vector<IntVec> candidates =
      kernels::filter_box(upper, [&](const IntVec& p) { return !p.is_zero() && g.contains(p); });

  // x is a minimal generator iff x - s is never a nonzero member for an
  // already found generator s; every s involved has smaller 1-norm, so each
  // norm level only depends on earlier levels.
  std::vector<IntVec> gens;
  std::size_t begin = 0;
  while (begin < candidates.size()) {
    const Int level = candidates[begin].norm1();
    std::size_t end = begin;
    while (end < candidates.size() && candidates[end].norm1() == level) ++end;
    std::vector<char> minimal(end - begin, 0);
    kernels::for_each_index(end - begin, [&](std::size_t k) {
      const IntVec& x = candidates[begin + k];
      minimal[k] = std::none_of(gens.begin(), gens.end(), [&](const IntVec& s) {
                     if (!dominated_by(s, x)) return false;
                     const IntVec rest = x - s;
                     return !rest.is_zero() && g.contains(rest);
                   })
                       ? 1
                       : 0;
    });
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (minimal[k]) gens.push_back(candidates[begin + k]);
    }
    begin = end;
  }
  return gens;
}

std::vector<GapSemigroup> decompose_gaps(const GapSemigroup& start, std::size_t* rounds) {
  if (rounds) *rounds = 0;
  if (is_irreducible(start)) return {start};

  std::vector<GapSemigroup> irreducible;
  std::vector<GapSemigroup> frontier{start};
  while (!frontier.empty()) {
    if (rounds) ++*rounds;
    std::vector<std::vector<IntVec>> special(frontier.size());
    kernels::for_each_index(frontier.size(), [&](std::size_t k) { special[k] = sg_from_gaps(frontier[k]); });

    // Keyed by gap list: deduplicates and fixes the processing order.
    std::map<std::vector<IntVec>, GapSemigroup> expanded;
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      for (const IntVec& a : special[k]) {
        GapSemigroup next = frontier[k].adjoin_special_gap(a);
        std::vector<IntVec> key = next.gaps();
        expanded.try_emplace(std::move(key), std::move(next));
      }
    }
    // Drop S' containing some already irreducible S̄, i.e. H' ⊆ H̄.
    std::erase_if(expanded, [&](const auto& entry) {
      const auto& gaps = entry.first;
      return std::any_of(irreducible.begin(), irreducible.end(), [&](const GapSemigroup& done) {
        return std::includes(done.gaps().begin(), done.gaps().end(), gaps.begin(), gaps.end());
      });
    });

    std::vector<const GapSemigroup*> ordered;
    for (const auto& entry : expanded) ordered.push_back(&entry.second);
    std::vector<char> irreducible_flag(ordered.size(), 0);
    kernels::for_each_index(ordered.size(), [&](std::size_t k) { irreducible_flag[k] = is_irreducible(*ordered[k]); });

    std::vector<GapSemigroup> next_frontier;
    for (std::size_t k = 0; k < ordered.size(); ++k) {
      if (irreducible_flag[k]) {
        irreducible.push_back(*ordered[k]);
      } else {
        next_frontier.push_back(*ordered[k]);
      }
    }
    frontier = std::move(next_frontier);
  }

  // A component containing another one is redundant in the intersection.
  std::vector<GapSemigroup> kept;
  for (std::size_t i = 0; i < irreducible.size(); ++i) {
    const auto& gi = irreducible[i].gaps();
    const bool redundant = std::any_of(irreducible.begin(), irreducible.end(), [&](const GapSemigroup& other) {
      const auto& go = other.gaps();
      return &other != &irreducible[i] && go.size() > gi.size() && std::includes(go.begin(), go.end(), gi.begin(), gi.end());
    });
    if (!redundant) kept.push_back(irreducible[i]);
  }
  std::sort(kept.begin(), kept.end(), [](const GapSemigroup& x, const GapSemigroup& y) { return x.gaps() < y.gaps(); });
  return kept;
}

std::vector<Component> decompose(const AffineSemigroup& s) {
  const std::vector<IntVec> gaps = compute_gaps(s);
  const GapSemigroup start(s.cone(), gaps);
  std::vector<Component> out;
  for (const GapSemigroup& part : decompose_gaps(start)) {
    out.push_back(Component{part.gaps(), generators_from_gaps(part)});
  }
  return out;
}

std::vector<Component> decompose(std::span<const IntVec> gens) {
  return decompose(AffineSemigroup(std::vector<IntVec>(gens.begin(), gens.end())));
}

}  // namespace csg
