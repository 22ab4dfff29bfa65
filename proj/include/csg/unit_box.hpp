#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "csg/int_vec.hpp"

namespace csg {

/// Decides, for many targets against one fixed column set, whether
/// target = sum_i lambda_i * column_i has a rational solution with every
/// lambda_i in [0, 1].
///
/// The column matrix is reduced once to row echelon form over Q. Each query
/// then solves for the pivot coefficients in terms of the free ones and runs
/// Fourier-Motzkin elimination on the free coefficients (skipped entirely when
/// the columns are independent, which is the simplicial-cone case).
class UnitBoxFeasibility {
 public:
  explicit UnitBoxFeasibility(std::vector<IntVec> columns);

  bool feasible(const IntVec& target) const;

  std::size_t dim() const { return dim_; }
  std::size_t column_count() const { return columns_.size(); }

 private:
  std::size_t dim_ = 0;
  std::vector<IntVec> columns_;
  // transform_ * M = reduced_, reduced_ in reduced row echelon form.
  std::vector<std::vector<Rational>> transform_;
  std::vector<std::vector<Rational>> reduced_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<std::size_t> free_cols_;
};

/// One-shot form of UnitBoxFeasibility. With no columns the only feasible
/// target is 0.
bool feasible_unit_box(std::span<const IntVec> columns, const IntVec& target);

}  // namespace csg
