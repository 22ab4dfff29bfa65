#include "csg/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_set>

#include "csg/error.hpp"

namespace csg {

namespace {

// Numerical semigroup routines index tables by generator values.
constexpr std::size_t kMaxTableSize = std::size_t{1} << 26;

std::size_t table_index(const Int& v) {
  if (v.sign() < 0 || v >= kMaxTableSize) throw DomainError("numerical semigroup generator too large: " + v.str());
  return v.convert_to<std::size_t>();
}

// Depth-first search from x towards 0 by subtracting generators. A residual
// is expanded once; `admissible` prunes residuals that cannot be members.
bool search_monoid(std::span<const IntVec> gens, const IntVec& x,
                   const std::function<bool(const IntVec&)>& admissible) {
  if (x.is_zero()) return true;
  if (!x.is_nonnegative() || !admissible(x)) return false;
  std::unordered_set<IntVec, IntVecHash> seen{x};
  std::vector<IntVec> stack{x};
  while (!stack.empty()) {
    IntVec r = std::move(stack.back());
    stack.pop_back();
    // Ascending order pushes the largest generators last, so they are tried
    // first.
    for (const IntVec& g : gens) {
      if (!dominated_by(g, r)) continue;
      IntVec next = r - g;
      if (next.is_zero()) return true;
      if (!admissible(next)) continue;
      if (seen.insert(next).second) stack.push_back(std::move(next));
    }
  }
  return false;
}

}  // namespace

std::vector<Int> minimal_numerical_generators(std::vector<Int> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.empty()) return gens;
  if (gens.front().sign() <= 0) throw std::invalid_argument("numerical semigroup generators must be positive");
  const std::size_t top = table_index(gens.back());
  std::vector<char> reachable(top + 1, 0);
  reachable[0] = 1;
  std::vector<Int> kept;
  for (const Int& g : gens) {
    const std::size_t v = table_index(g);
    if (reachable[v]) continue;
    kept.push_back(g);
    for (std::size_t k = v; k <= top; ++k) {
      if (reachable[k - v]) reachable[k] = 1;
    }
  }
  return kept;
}

NumericalSemigroup::NumericalSemigroup(std::vector<Int> gens) {
  gens_ = minimal_numerical_generators(std::move(gens));
  if (gens_.empty()) throw std::invalid_argument("numerical semigroup needs generators");
  Int g = 0;
  for (const Int& x : gens_) g = gcd(g, x);
  if (g != 1) throw DomainError("ray gaps infinite");

  const std::size_t m = table_index(gens_.front());
  std::vector<std::optional<Int>> apery(m);
  apery[0] = Int(0);
  for (std::size_t i = 1; i < gens_.size(); ++i) {
    const Int& a = gens_[i];
    const std::size_t a_mod = (a % m).convert_to<std::size_t>();
    const std::size_t d = std::gcd(a_mod, m);
    for (std::size_t r = 0; r < d; ++r) {
      std::optional<Int> best;
      for (std::size_t q = r; q < m; q += d) {
        if (apery[q] && (!best || *apery[q] < *best)) best = apery[q];
      }
      if (!best) continue;
      Int current = *best;
      for (std::size_t step = 0; step + 1 < m / d; ++step) {
        current += a;
        const std::size_t slot = (current % m).convert_to<std::size_t>();
        if (apery[slot] && *apery[slot] < current) current = *apery[slot];
        apery[slot] = current;
      }
    }
  }
  apery_.reserve(m);
  Int largest = 0;
  for (auto& w : apery) {
    // gcd 1 guarantees every residue class is reached.
    apery_.push_back(*w);
    if (*w > largest) largest = *w;
  }
  frobenius_ = largest - gens_.front();
}

bool NumericalSemigroup::contains(const Int& n) const {
  if (n.sign() < 0) return false;
  const std::size_t slot = (n % gens_.front()).convert_to<std::size_t>();
  return n >= apery_[slot];
}

bool in_monoid(std::span<const IntVec> gens, const IntVec& x) {
  return search_monoid(gens, x, [](const IntVec&) { return true; });
}

std::vector<IntVec> minimalize(std::vector<IntVec> gens) {
  std::vector<IntVec> cleaned;
  for (IntVec& g : gens) {
    if (!g.is_nonnegative()) throw std::invalid_argument("generator " + g.to_string() + " has a negative entry");
    if (!g.is_zero()) cleaned.push_back(std::move(g));
  }
  std::vector<IntVec> kept = canonical_set(std::move(cleaned));
  // Descending canonical order. Dropping a redundant element leaves the
  // generated semigroup unchanged, so earlier keep decisions stay valid.
  for (std::size_t i = kept.size(); i-- > 0;) {
    std::vector<IntVec> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) others.push_back(kept[j]);
    }
    if (in_monoid(others, kept[i])) kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return kept;
}

AffineSemigroup::AffineSemigroup(std::vector<IntVec> gens) : AffineSemigroup(from_minimal(minimalize(std::move(gens)))) {}

AffineSemigroup AffineSemigroup::from_minimal(std::vector<IntVec> gens) {
  std::erase_if(gens, [](const IntVec& g) { return g.is_zero(); });
  gens = canonical_set(std::move(gens));
  Cone cone = Cone::from_generators(gens);
  return AffineSemigroup(std::move(gens), std::move(cone));
}

bool AffineSemigroup::contains(const IntVec& x) const {
  if (x.dim() != dim()) throw std::invalid_argument("membership: dimension mismatch");
  return search_monoid(gens_, x, [this](const IntVec& r) { return cone_.contains(r); });
}

std::vector<Int> ray_multiples(const AffineSemigroup& s, std::size_t ray) {
  const IntVec& a = s.cone().ray(ray);
  std::size_t pivot = 0;
  while (a[pivot].is_zero()) ++pivot;
  std::vector<Int> out;
  for (const IntVec& g : s.generators()) {
    if (s.cone().on_ray(ray, g)) out.push_back(g[pivot] / a[pivot]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

NumericalSemigroup ray_numerical_semigroup(const AffineSemigroup& s, std::size_t ray) {
  std::vector<Int> multiples = ray_multiples(s, ray);
  if (multiples.empty()) throw DomainError("ray uncovered");
  return NumericalSemigroup(std::move(multiples));
}

IntVec conductor_vector(const AffineSemigroup& s, std::size_t ray) {
  return ray_numerical_semigroup(s, ray).conductor() * s.cone().ray(ray);
}

std::vector<GammaSet> gamma_sets(const Cone& c) {
  const std::vector<IntVec> unit_points = unit_zonotope(c);
  return gamma_sets(c, unit_points);
}

std::vector<GammaSet> gamma_sets(const Cone& c, std::span<const IntVec> unit_points) {
  std::vector<GammaSet> out(c.ray_count());
  for (std::size_t i = 0; i < c.ray_count(); ++i) {
    std::vector<IntVec> images;
    for (const IntVec& q : unit_points) {
      IntVec image = c.upsilon(i, q);
      if (!image.is_zero()) images.push_back(std::move(image));
    }
    out[i].t_generators = canonical_set(std::move(images));
    out[i].gamma = minimalize(out[i].t_generators);
  }
  return out;
}

}  // namespace csg
