#include "csg/unit_box.hpp"

#include <stdexcept>
#include <utility>

namespace csg {

namespace {

struct Inequality {
  std::vector<Rational> coeffs;  // coeffs . x <= bound
  Rational bound;
};

// Fourier-Motzkin: true iff the system has a rational solution.
bool fourier_motzkin_feasible(std::vector<Inequality> system, std::size_t vars) {
  for (std::size_t v = 0; v < vars; ++v) {
    std::vector<Inequality> pos, neg, next;
    for (Inequality& ineq : system) {
      const int s = ineq.coeffs[v].sign();
      if (s > 0) {
        pos.push_back(std::move(ineq));
      } else if (s < 0) {
        neg.push_back(std::move(ineq));
      } else {
        next.push_back(std::move(ineq));
      }
    }
    for (const Inequality& p : pos) {
      for (const Inequality& n : neg) {
        // p / p_v + n / |n_v| cancels x_v.
        const Rational wp = 1 / p.coeffs[v];
        const Rational wn = -1 / n.coeffs[v];
        Inequality combined{std::vector<Rational>(vars), p.bound * wp + n.bound * wn};
        for (std::size_t k = 0; k < vars; ++k) combined.coeffs[k] = p.coeffs[k] * wp + n.coeffs[k] * wn;
        combined.coeffs[v] = 0;
        next.push_back(std::move(combined));
      }
    }
    system = std::move(next);
  }
  for (const Inequality& ineq : system) {
    if (ineq.bound.sign() < 0) return false;
  }
  return true;
}

}  // namespace

UnitBoxFeasibility::UnitBoxFeasibility(std::vector<IntVec> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) return;
  dim_ = columns_.front().dim();
  for (const IntVec& c : columns_) {
    if (c.dim() != dim_) throw std::invalid_argument("unit box: columns of different dimension");
  }
  const std::size_t rows = dim_;
  const std::size_t cols = columns_.size();
  reduced_.assign(rows, std::vector<Rational>(cols));
  transform_.assign(rows, std::vector<Rational>(rows));
  for (std::size_t r = 0; r < rows; ++r) {
    transform_[r][r] = 1;
    for (std::size_t c = 0; c < cols; ++c) reduced_[r][c] = Rational(columns_[c][r]);
  }

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (r == rows) {
      free_cols_.push_back(c);
      continue;
    }
    std::size_t pivot = r;
    while (pivot < rows && reduced_[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) {
      free_cols_.push_back(c);
      continue;
    }
    std::swap(reduced_[r], reduced_[pivot]);
    std::swap(transform_[r], transform_[pivot]);
    const Rational inv = 1 / reduced_[r][c];
    for (Rational& x : reduced_[r]) x *= inv;
    for (Rational& x : transform_[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || reduced_[i][c].is_zero()) continue;
      const Rational f = reduced_[i][c];
      for (std::size_t k = 0; k < cols; ++k) reduced_[i][k] -= f * reduced_[r][k];
      for (std::size_t k = 0; k < rows; ++k) transform_[i][k] -= f * transform_[r][k];
    }
    pivot_cols_.push_back(c);
    ++r;
  }
}

bool UnitBoxFeasibility::feasible(const IntVec& target) const {
  if (columns_.empty()) return target.is_zero();
  if (target.dim() != dim_) throw std::invalid_argument("unit box: target dimension mismatch");

  std::vector<Rational> rhs(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Rational acc = 0;
    for (std::size_t k = 0; k < dim_; ++k) {
      if (!transform_[i][k].is_zero() && !target[k].is_zero()) acc += transform_[i][k] * Rational(target[k]);
    }
    rhs[i] = std::move(acc);
  }
  const std::size_t rk = pivot_cols_.size();
  for (std::size_t i = rk; i < dim_; ++i) {
    if (!rhs[i].is_zero()) return false;
  }

  if (free_cols_.empty()) {
    for (std::size_t i = 0; i < rk; ++i) {
      if (rhs[i].sign() < 0 || rhs[i] > 1) return false;
    }
    return true;
  }

  const std::size_t vars = free_cols_.size();
  std::vector<Inequality> system;
  system.reserve(2 * (vars + rk));
  for (std::size_t f = 0; f < vars; ++f) {
    Inequality lower{std::vector<Rational>(vars), 0};
    lower.coeffs[f] = -1;
    Inequality upper{std::vector<Rational>(vars), 1};
    upper.coeffs[f] = 1;
    system.push_back(std::move(lower));
    system.push_back(std::move(upper));
  }
  for (std::size_t i = 0; i < rk; ++i) {
    // pivot value = rhs_i - sum_f reduced_[i][free_f] x_f, constrained to [0, 1].
    Inequality nonneg{std::vector<Rational>(vars), rhs[i]};
    Inequality at_most_one{std::vector<Rational>(vars), 1 - rhs[i]};
    for (std::size_t f = 0; f < vars; ++f) {
      nonneg.coeffs[f] = reduced_[i][free_cols_[f]];
      at_most_one.coeffs[f] = -reduced_[i][free_cols_[f]];
    }
    system.push_back(std::move(nonneg));
    system.push_back(std::move(at_most_one));
  }
  return fourier_motzkin_feasible(std::move(system), vars);
}

bool feasible_unit_box(std::span<const IntVec> columns, const IntVec& target) {
  return UnitBoxFeasibility(std::vector<IntVec>(columns.begin(), columns.end())).feasible(target);
}

}  // namespace csg
