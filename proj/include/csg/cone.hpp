#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "csg/int_vec.hpp"

namespace csg {

/// An extremal ray of the cone: its primitive generator and the p-1 facet
/// indices whose common kernel is the ray.
struct RayData {
  IntVec a;
  std::vector<std::size_t> facets;  // ascending

  bool operator==(const RayData&) const = default;
};

/// The real cone spanned by a finite set of generators in N^p, described by
/// its facets and extremal rays. Membership is for the integer cone
/// L(S) ∩ N^p.
///
/// Facets are sorted canonically by primitive normal and rays canonically by
/// primitive generator, so indices are independent of generator order.
/// Ray and facet indices are 0-based throughout the library.
class Cone {
 public:
  /// Throws DomainError("degenerate cone") unless the generators span R^p,
  /// and std::invalid_argument on empty input, zero or negative generators,
  /// or ragged dimensions.
  static Cone from_generators(std::span<const IntVec> gens);

  std::size_t dim() const { return dim_; }
  const std::vector<Hyperplane>& facets() const { return facets_; }
  const std::vector<RayData>& rays() const { return rays_; }
  std::size_t ray_count() const { return rays_.size(); }
  const IntVec& ray(std::size_t i) const;

  /// P ∈ N^p and every facet is nonnegative at P.
  bool contains(const IntVec& point) const;

  /// (h_j(P))_{j in J_i}, in ascending facet index order.
  IntVec upsilon(std::size_t ray, const IntVec& point) const;

  /// True iff P lies on the ray (all facets of J_i vanish at P).
  bool on_ray(std::size_t ray, const IntVec& point) const;

  std::vector<IntVec> ray_vectors() const;

  friend bool operator==(const Cone&, const Cone&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Hyperplane> facets_;
  std::vector<RayData> rays_;
};

inline Cone cone_from_generators(std::span<const IntVec> gens) { return Cone::from_generators(gens); }
inline bool cone_member(const Cone& c, const IntVec& p) { return c.contains(p); }
inline IntVec upsilon(const Cone& c, std::size_t ray, const IntVec& p) { return c.upsilon(ray, p); }

/// Lattice points of the zonotope { sum lambda_i columns_i : 0 <= lambda_i <= 1 },
/// canonically sorted. Always contains 0 and every column.
std::vector<IntVec> zonotope_lattice_points(std::span<const IntVec> columns);

/// The set A: lattice points of the zonotope spanned by the primitive ray
/// generators.
std::vector<IntVec> unit_zonotope(const Cone& c);

}  // namespace csg
