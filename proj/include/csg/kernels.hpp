#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "csg/int_vec.hpp"

// Data-parallel loops shared by the algorithm modules.
//
// Every kernel has a serial reference and an OpenMP version with identical
// results: outputs are canonically sorted (or index-aligned), never in
// completion order. The dispatching entry points pick the serial path when
// the worker cap is 1.

namespace csg::kernels {

using PointPredicate = std::function<bool(const IntVec&)>;

/// Caps OpenMP workers for the dispatching kernels; n < 1 restores the
/// default (all available processors).
void set_max_workers(int n);
int max_workers();

/// Number of integer points in the box [0, upper]; throws DomainError when it
/// does not fit the enumeration limit.
std::size_t box_size(const IntVec& upper);

/// i-th point of the box [0, upper] in mixed-radix order (first coordinate
/// fastest).
IntVec box_point(const IntVec& upper, std::size_t index);

namespace serial {
std::vector<IntVec> filter_box(const IntVec& upper, const PointPredicate& keep);
std::vector<IntVec> filter_points(std::span<const IntVec> points, const PointPredicate& keep);
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body);
}  // namespace serial

namespace parallel {
std::vector<IntVec> filter_box(const IntVec& upper, const PointPredicate& keep, int workers);
std::vector<IntVec> filter_points(std::span<const IntVec> points, const PointPredicate& keep, int workers);
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body, int workers);
}  // namespace parallel

/// Integer points P with 0 <= P <= upper and keep(P), canonically sorted.
std::vector<IntVec> filter_box(const IntVec& upper, const PointPredicate& keep);

/// Elements of `points` satisfying keep, canonically sorted.
std::vector<IntVec> filter_points(std::span<const IntVec> points, const PointPredicate& keep);

/// Runs body(i) for i in [0, n). Bodies must write only to slot i of
/// caller-owned storage.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace csg::kernels
