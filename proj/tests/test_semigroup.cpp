#include <doctest.h>

#include <random>

#include "common.hpp"
#include "csg/error.hpp"
#include "csg/semigroup.hpp"
#include "oracle.hpp"

using csg::AffineSemigroup;
using csg::Int;
using csg::IntVec;
using csg::NumericalSemigroup;
using fixtures::kRunning;

TEST_CASE("numerical semigroups") {
  const NumericalSemigroup s({Int(3), Int(5)});
  CHECK(s.frobenius() == 7);
  CHECK(s.conductor() == 8);
  CHECK(s.multiplicity() == 3);
  CHECK(s.contains(Int(8)));
  CHECK_FALSE(s.contains(Int(7)));
  CHECK(s.contains(Int(0)));

  const NumericalSemigroup n({Int(1), Int(4)});
  CHECK(n.frobenius() == -1);
  CHECK(n.conductor() == 0);
  CHECK(n.generators() == std::vector<Int>{1});

  CHECK(NumericalSemigroup({Int(6), Int(4), Int(9), Int(8)}).generators() == std::vector<Int>{4, 6, 9});
  CHECK_THROWS_AS(NumericalSemigroup({Int(4), Int(6)}), csg::DomainError);
}

TEST_CASE("Frobenius numbers agree with direct search") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long long> entry(2, 30);
  int checked = 0;
  while (checked < 200) {
    std::vector<long long> gens(2 + checked % 3);
    for (auto& g : gens) g = entry(rng);
    long long g = 0;
    for (long long x : gens) g = std::gcd(g, x);
    if (g != 1) continue;
    ++checked;
    const NumericalSemigroup s(std::vector<Int>(gens.begin(), gens.end()));
    CHECK(s.frobenius() == oracle::frobenius(gens));
    std::vector<oracle::V> line;
    for (long long x : gens) line.push_back({x});
    oracle::Members brute(line);
    for (long long n = 0; n < 80; ++n) CHECK(s.contains(Int(n)) == brute.contains({n}));
  }
}

TEST_CASE("minimalization of the running example") {
  auto gens = kRunning;
  gens.push_back(IntVec{4, 0, 0});
  gens.push_back(IntVec{3, 2, 1});
  gens.push_back(IntVec{0, 0, 0});
  const AffineSemigroup s(gens);
  CHECK(s.generators() == csg::canonical_set(kRunning));
  CHECK(s.embedding_dimension() == 11);
  CHECK(s.dim() == 3);
}

TEST_CASE("minimalization and membership agree with brute force") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long long> entry(0, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t p = 2 + trial % 2;
    std::vector<oracle::V> gens;
    for (int k = 0; k < 3 + trial % 5; ++k) {
      oracle::V v(p);
      for (auto& x : v) x = entry(rng);
      gens.push_back(v);
    }
    const auto expected = oracle::minimal_generators(gens);
    const auto mins = csg::minimalize(oracle::to_int_vecs(gens));
    CHECK(oracle::to_set(mins) == expected);
    CHECK(std::is_sorted(mins.begin(), mins.end()));

    oracle::Members brute(gens);
    oracle::V point(p, 0);
    while (true) {
      const auto as_int = oracle::to_int_vec(point);
      CHECK(csg::in_monoid(mins, as_int) == brute.contains(point));
      std::size_t i = 0;
      while (i < p && point[i] == 7) point[i++] = 0;
      if (i == p) break;
      ++point[i];
    }
  }
}

TEST_CASE("membership in the running example") {
  const AffineSemigroup s(kRunning);
  for (const IntVec& h : fixtures::kRunningGaps) CHECK_FALSE(s.contains(h));
  CHECK(s.contains({0, 0, 0}));
  CHECK(s.contains({2, 0, 0}));
  CHECK(s.contains({6, 3, 5}));
  CHECK(s.contains({9, 4, 8}));
  CHECK_FALSE(s.contains({0, 0, 1}));
  CHECK(csg::member(s, {100, 60, 100}));
}

TEST_CASE("ray semigroups and conductors of the running example") {
  const AffineSemigroup s(kRunning);
  const auto& c = s.cone();
  const std::size_t x = fixtures::ray_index(c, {1, 0, 0});
  const std::size_t d = fixtures::ray_index(c, {2, 1, 2});
  const std::size_t y = fixtures::ray_index(c, {0, 1, 0});
  CHECK(csg::ray_multiples(s, x) == std::vector<Int>{2, 3});
  CHECK(csg::ray_multiples(s, d) == std::vector<Int>{2, 3});
  CHECK(csg::ray_multiples(s, y) == std::vector<Int>{1});
  CHECK(csg::conductor_vector(s, x) == IntVec{2, 0, 0});
  CHECK(csg::conductor_vector(s, d) == IntVec{4, 2, 4});
  CHECK(csg::conductor_vector(s, y) == IntVec{0, 0, 0});
  CHECK(csg::ray_numerical_semigroup(s, x).frobenius() == 1);
}

TEST_CASE("ray with multiples of common divisor") {
  const AffineSemigroup s(std::vector<IntVec>{{2, 0}, {4, 0}, {0, 1}, {1, 1}});
  const std::size_t x = fixtures::ray_index(s.cone(), {1, 0});
  CHECK(csg::ray_multiples(s, x) == std::vector<Int>{2});
  CHECK_THROWS_AS(csg::ray_numerical_semigroup(s, x), csg::DomainError);
}

TEST_CASE("invalid generator sets") {
  CHECK_THROWS_AS(AffineSemigroup(std::vector<IntVec>{{1, -1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(AffineSemigroup(std::vector<IntVec>{{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(AffineSemigroup(std::vector<IntVec>{{1, 1}, {2, 2}}), csg::DomainError);
}
