#pragma once

#include <algorithm>
#include <vector>

#include "csg/cone.hpp"
#include "csg/int_vec.hpp"

namespace fixtures {

using csg::IntVec;

inline const std::vector<IntVec> kRunning{{2, 0, 0}, {4, 2, 4}, {0, 1, 0}, {3, 0, 0}, {6, 3, 6}, {3, 1, 1},
                                          {4, 1, 1}, {3, 1, 2}, {1, 1, 0}, {3, 2, 3}, {1, 2, 1}};

inline const std::vector<IntVec> kRunningGaps{{1, 0, 0}, {1, 1, 1}, {2, 1, 1}, {2, 1, 2}, {2, 2, 1}, {2, 2, 2},
                                              {2, 3, 2}, {4, 1, 2}, {4, 2, 3}, {5, 2, 4}, {5, 3, 5}, {8, 4, 7}};

inline const std::vector<IntVec> kTightEleven{{2, 0, 0}, {4, 2, 4}, {0, 2, 0}, {3, 0, 0}, {6, 3, 6}, {0, 3, 0},
                                              {3, 1, 1}, {3, 1, 2}, {1, 1, 0}, {3, 2, 3}, {1, 2, 1}};

inline const std::vector<IntVec> kTightThirteen{{2, 0, 0}, {4, 2, 4}, {0, 2, 0}, {3, 0, 0}, {6, 3, 6},
                                                {0, 3, 0}, {3, 1, 1}, {4, 1, 2}, {5, 2, 4}, {2, 1, 0},
                                                {1, 2, 0}, {3, 2, 3}, {1, 2, 1}};

/// The six irreducible oversemigroups listed for the running example.
inline const std::vector<std::vector<IntVec>> kSixComponents{
    {{3, 0, 0}, {2, 0, 0}, {1, 1, 0}, {0, 1, 0}, {4, 1, 1}, {3, 1, 1}, {3, 1, 2}, {4, 1, 2}, {1, 2, 1}, {2, 2, 1},
     {2, 2, 2}, {3, 2, 3}, {4, 2, 4}, {6, 3, 6}},
    {{3, 0, 0}, {2, 0, 0}, {1, 1, 0}, {0, 1, 0}, {4, 1, 1}, {3, 1, 1}, {2, 1, 2}, {3, 1, 2}, {1, 2, 1}, {2, 2, 1},
     {3, 2, 3}},
    {{1, 0, 0}, {0, 1, 0}, {2, 1, 1}, {3, 1, 2}, {1, 2, 1}, {3, 2, 3}, {4, 2, 4}, {5, 3, 5}, {6, 3, 6}},
    {{3, 0, 0}, {2, 0, 0}, {1, 1, 0}, {0, 1, 0}, {2, 1, 1}, {1, 1, 1}, {3, 1, 2}, {4, 1, 2}, {3, 2, 3}, {4, 2, 4},
     {6, 3, 6}},
    {{3, 0, 0}, {2, 0, 0}, {1, 1, 0}, {0, 1, 0}, {2, 1, 1}, {1, 1, 1}, {3, 1, 2}, {3, 2, 3}, {4, 2, 4}, {5, 2, 4},
     {6, 3, 6}},
    {{3, 0, 0}, {2, 0, 0}, {1, 1, 0}, {0, 1, 0}, {4, 1, 1}, {3, 1, 1}, {2, 1, 2}, {3, 1, 2}, {1, 2, 1}, {3, 2, 3},
     {4, 2, 3}},
};

/// Index of the ray with primitive vector `a`; rays are numbered in
/// canonical order, so tests look them up by vector.
inline std::size_t ray_index(const csg::Cone& c, const IntVec& a) {
  const auto rays = c.ray_vectors();
  return static_cast<std::size_t>(std::find(rays.begin(), rays.end(), a) - rays.begin());
}

}  // namespace fixtures
