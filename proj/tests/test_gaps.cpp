#include <doctest.h>

#include <random>

#include "common.hpp"
#include "csg/gaps.hpp"
#include "oracle.hpp"

using csg::AffineSemigroup;
using csg::Int;
using csg::IntVec;
using fixtures::kRunning;

namespace {

const csg::RayAnchor& anchor_of(const csg::GapComputation& g, const csg::Cone& c, const IntVec& a) {
  const std::size_t i = fixtures::ray_index(c, a);
  REQUIRE(i < g.anchors.size());
  return g.anchors[i];
}

}  // namespace

TEST_CASE("gaps of the running example") {
  const AffineSemigroup s(kRunning);
  CHECK(csg::compute_gaps(s) == csg::canonical_set(fixtures::kRunningGaps));
  CHECK(csg::compute_gaps(kRunning) == csg::canonical_set(fixtures::kRunningGaps));
}

TEST_CASE("intermediate data of the gap computation") {
  const AffineSemigroup s(kRunning);
  const auto g = csg::gap_computation(s);
  CHECK(g.d_points.size() == 24);
  CHECK(oracle::to_set(g.d_points) == oracle::zonotope_points({{2, 0, 0}, {4, 2, 4}, {0, 1, 0}}));

  const auto& x = anchor_of(g, s.cone(), {1, 0, 0});
  const auto& d = anchor_of(g, s.cone(), {2, 1, 2});
  const auto& y = anchor_of(g, s.cone(), {0, 1, 0});
  CHECK(x.bound == 13);
  CHECK(d.bound == 24);
  CHECK(y.bound == 12);
  CHECK(x.anchor == IntVec{14, 0, 0});
  CHECK(d.anchor == IntVec{10, 5, 10});
  CHECK(y.anchor == IntVec{0, 13, 0});
  CHECK(x.conductor == IntVec{2, 0, 0});
  CHECK(d.conductor == IntVec{4, 2, 4});
  CHECK(y.conductor == IntVec{0, 0, 0});

  CHECK(x.line_minima ==
        csg::canonical_set({{0, 1, 0}, {3, 1, 1}, {3, 1, 2}, {3, 2, 2}, {3, 2, 3}, {4, 2, 4}, {4, 3, 4}}));
  CHECK(d.line_minima ==
        csg::canonical_set({{0, 1, 0}, {3, 1, 2}, {1, 1, 0}, {3, 2, 3}, {2, 0, 0}, {2, 1, 0}, {6, 3, 5}, {3, 1, 1}}));
  // A commonly quoted list for this ray has 13 points and no point with
  // (z, x - z) = (3, 2), although D contains (5,2,3). That line starts at
  // (5,2,3): it is (3,2,3) + (2,0,0), and (5,1,3) violates 2y >= z.
  CHECK(s.contains(IntVec{5, 2, 3}));
  CHECK_FALSE(s.cone().contains(IntVec{5, 1, 3}));
  CHECK(y.line_minima == csg::canonical_set({{1, 1, 0}, {1, 2, 1}, {2, 0, 0}, {2, 3, 1}, {2, 4, 2}, {3, 1, 1},
                                             {3, 1, 2}, {3, 2, 3}, {4, 2, 2}, {4, 3, 3}, {4, 2, 4}, {5, 3, 4},
                                             {6, 2, 4}, {5, 2, 3}}));
}

TEST_CASE("line search") {
  const AffineSemigroup s(kRunning);
  const std::size_t x = fixtures::ray_index(s.cone(), {1, 0, 0});
  // The line through (1,1,1) along (1,0,0): (1,1,1) and (2,1,1) are gaps.
  CHECK(csg::line_minimal_member(s, x, {1, 1, 1}, Int(10)) == IntVec{3, 1, 1});
  // Witnesses may start outside the cone: first cone point on the line is used.
  CHECK(csg::line_minimal_member(s, x, {-5, 1, 1}, Int(10)) == IntVec{3, 1, 1});
  CHECK_THROWS_AS(csg::line_minimal_member(s, x, {1, 1, 1}, Int(0)), csg::DomainError);
  CHECK_THROWS_AS(csg::line_minimal_member(s, x, {0, 0, 1}, Int(10)), std::invalid_argument);
}

TEST_CASE("gaps of small planar semigroups") {
  CHECK(csg::compute_gaps(std::vector<IntVec>{{2, 0}, {3, 0}, {0, 1}, {1, 1}}) == std::vector<IntVec>{{1, 0}});
  CHECK(csg::compute_gaps(std::vector<IntVec>{{1, 0}, {0, 1}}).empty());
  CHECK(csg::compute_gaps(std::vector<IntVec>{{2}, {3}}) == std::vector<IntVec>{{1}});
  CHECK(csg::compute_gaps(std::vector<IntVec>{{3}, {5}}) == std::vector<IntVec>{{1}, {2}, {4}, {7}});
}

TEST_CASE("gaps agree with the planar enumeration oracle") {
  std::mt19937_64 rng(211);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 60; ++trial) {
    const auto gens = oracle::random_2d(rng);
    const auto ints = oracle::to_int_vecs(gens);
    if (!csg::is_c_semigroup(ints).is_c_semigroup) continue;
    ++checked;
    const auto expected = oracle::gaps2(gens);
    REQUIRE(expected.has_value());
    const auto gaps = csg::compute_gaps(ints);
    CHECK(std::is_sorted(gaps.begin(), gaps.end()));
    CHECK(oracle::to_set(gaps) == *expected);
  }
  CHECK(checked == 60);
}

TEST_CASE("gap computation refuses non-C-semigroups") {
  auto gens = kRunning;
  gens.erase(std::find(gens.begin(), gens.end(), IntVec{1, 1, 0}));
  CHECK_THROWS_AS(csg::compute_gaps(gens), csg::NotCSemigroup);
  CHECK_THROWS_AS(csg::compute_gaps(std::vector<IntVec>{{2, 0}, {4, 0}, {0, 1}, {1, 1}}), csg::NotCSemigroup);
}
