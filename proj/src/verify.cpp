#include "csg/verify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "csg/gaps.hpp"
#include "csg/kernels.hpp"

namespace csg {

namespace {

Int max_norm(std::span<const IntVec> vs) {
  Int m = 0;
  for (const IntVec& v : vs) m = std::max(m, v.norm1());
  return m;
}

std::string list_string(std::span<const IntVec> vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += vs[i].to_string();
  }
  return out + "}";
}

void compare(VerifyReport& report, const std::string& what, std::vector<IntVec> expected,
             std::vector<IntVec> actual) {
  report.checks.push_back(what);
  expected = canonical_set(std::move(expected));
  actual = canonical_set(std::move(actual));
  if (expected != actual) {
    report.failures.push_back(what + ": brute force gives " + list_string(expected) + ", algorithm gave " +
                              list_string(actual));
  }
}

}  // namespace

BruteForceMembership::BruteForceMembership(std::span<const IntVec> gens, const Int& norm_bound) : bound_(norm_bound) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  const std::size_t p = gens.front().dim();
  IntVec upper(std::vector<Int>(p, norm_bound));
  points_ = kernels::filter_box(upper, [&](const IntVec& v) { return v.norm1() <= norm_bound; });
  // Canonical order lists P - g before P.
  for (const IntVec& point : points_) {
    const bool member = point.is_zero() || std::any_of(gens.begin(), gens.end(), [&](const IntVec& g) {
                          return dominated_by(g, point) && members_.contains(point - g);
                        });
    if (member) members_.insert(point);
  }
}

bool BruteForceMembership::contains(const IntVec& p) const {
  if (!p.is_nonnegative()) return false;
  if (p.norm1() > bound_) throw std::out_of_range("point " + p.to_string() + " beyond the tabulated norm bound");
  return members_.contains(p);
}

void VerifyReport::merge(const VerifyReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

VerifyReport verify_gaps(const AffineSemigroup& s, std::span<const IntVec> gaps) {
  const Int bound = max_norm(gaps) + max_norm(s.generators());
  const BruteForceMembership table(s.generators(), bound);
  std::vector<IntVec> brute;
  for (const IntVec& p : table.points()) {
    if (s.cone().contains(p) && !table.contains(p)) brute.push_back(p);
  }
  VerifyReport report;
  compare(report, "gaps up to norm " + bound.str(), std::move(brute), std::vector<IntVec>(gaps.begin(), gaps.end()));
  return report;
}

VerifyReport verify_special_gaps(const AffineSemigroup& s, std::span<const IntVec> gaps, std::span<const IntVec> pf,
                                 std::span<const IntVec> sg) {
  const Int bound = 2 * max_norm(gaps) + max_norm(s.generators());
  const BruteForceMembership table(s.generators(), bound);
  std::vector<IntVec> brute_pf;
  std::vector<IntVec> brute_sg;
  for (const IntVec& a : gaps) {
    // a + (S \ {0}) ⊆ S reduces to a + g ∈ S for the minimal generators g.
    const bool is_pf = std::all_of(s.generators().begin(), s.generators().end(),
                                   [&](const IntVec& g) { return table.contains(a + g); });
    if (!is_pf) continue;
    brute_pf.push_back(a);
    if (table.contains(Int(2) * a)) brute_sg.push_back(a);
  }
  VerifyReport report;
  compare(report, "pseudo-Frobenius elements", brute_pf, std::vector<IntVec>(pf.begin(), pf.end()));
  compare(report, "special gaps", brute_sg, std::vector<IntVec>(sg.begin(), sg.end()));
  return report;
}

VerifyReport verify_bound(const AffineSemigroup& s, const BoundReport& r) {
  VerifyReport report;
  report.checks.push_back("bound arithmetic");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < r.ray_semigroup_dims.size(); ++i) {
    total += static_cast<std::int64_t>(r.ray_semigroup_dims[i] + r.gamma_dims[i]);
  }
  total += static_cast<std::int64_t>(r.unit_generators.size());
  total -= static_cast<std::int64_t>(std::accumulate(r.coverage.begin(), r.coverage.end(), std::size_t{0}));
  if (total != r.bound) report.failures.push_back("bound terms add up to " + std::to_string(total));

  report.checks.push_back("embedding dimension at least the bound");
  if (static_cast<std::int64_t>(s.embedding_dimension()) < r.bound) {
    report.failures.push_back("e(S) = " + std::to_string(s.embedding_dimension()) + " below the bound " +
                              std::to_string(r.bound));
  }

  report.checks.push_back("ray semigroup embedding dimensions");
  for (std::size_t i = 0; i < s.cone().ray_count(); ++i) {
    // Minimal generators on the ray are the minimal generators of S_i.
    const std::size_t on_ray = static_cast<std::size_t>(std::count_if(
        s.generators().begin(), s.generators().end(), [&](const IntVec& g) { return s.cone().on_ray(i, g); }));
    if (i >= r.ray_semigroup_dims.size() || on_ray != r.ray_semigroup_dims[i]) {
      report.failures.push_back("ray " + std::to_string(i + 1) + " carries " + std::to_string(on_ray) +
                                " minimal generators");
    }
  }
  return report;
}

VerifyReport verify_decomposition(const AffineSemigroup& s, std::span<const IntVec> gaps,
                                  std::span<const Component> components) {
  VerifyReport report;
  const std::vector<IntVec> all(gaps.begin(), gaps.end());
  std::vector<IntVec> covered;
  for (std::size_t k = 0; k < components.size(); ++k) {
    const Component& c = components[k];
    const std::string name = "component " + std::to_string(k + 1);
    const GapSemigroup g(s.cone(), c.gaps);

    report.checks.push_back(name + " irreducible");
    if (!is_irreducible(g)) report.failures.push_back(name + " has " + std::to_string(sg_from_gaps(g).size()) + " special gaps");

    report.checks.push_back(name + " contains S");
    if (!std::includes(all.begin(), all.end(), c.gaps.begin(), c.gaps.end())) {
      report.failures.push_back(name + " has a gap outside H(S)");
    }
    covered.insert(covered.end(), c.gaps.begin(), c.gaps.end());

    const AffineSemigroup part(c.generators);
    VerifyReport round_trip = verify_gaps(part, c.gaps);
    for (auto& check : round_trip.checks) check = name + " " + check;
    for (auto& failure : round_trip.failures) failure = name + " " + failure;
    report.merge(round_trip);
  }
  compare(report, "union of component gaps", all, covered);
  return report;
}

}  // namespace csg
