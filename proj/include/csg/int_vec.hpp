#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace csg {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A point of Z^p with arbitrary-precision entries.
///
/// The comparison operators implement the canonical order used for every
/// vector list in the library: 1-norm ascending, then lexicographic.
class IntVec {
 public:
  IntVec() = default;
  IntVec(std::initializer_list<long long> entries);
  explicit IntVec(std::vector<Int> entries) : entries_(std::move(entries)) {}

  static IntVec zero(std::size_t dim) { return IntVec(std::vector<Int>(dim)); }

  std::size_t dim() const { return entries_.size(); }
  const Int& operator[](std::size_t i) const { return entries_[i]; }
  Int& operator[](std::size_t i) { return entries_[i]; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Int>& entries() const { return entries_; }

  Int norm1() const;
  bool is_zero() const;
  bool is_nonnegative() const;

  IntVec& operator+=(const IntVec& other);
  IntVec& operator-=(const IntVec& other);
  IntVec& operator*=(const Int& factor);

  friend IntVec operator+(IntVec a, const IntVec& b) { return a += b; }
  friend IntVec operator-(IntVec a, const IntVec& b) { return a -= b; }
  friend IntVec operator*(const Int& k, IntVec a) { return a *= k; }
  friend IntVec operator-(IntVec a) { return a *= Int(-1); }

  friend bool operator==(const IntVec& a, const IntVec& b) = default;
  friend std::strong_ordering operator<=>(const IntVec& a, const IntVec& b);

  /// "(1,0,2)"
  std::string to_string() const;

 private:
  std::vector<Int> entries_;
};

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept;
};

/// Componentwise a <= b.
bool dominated_by(const IntVec& a, const IntVec& b);

Int dot(const IntVec& a, const IntVec& b);

/// gcd of the absolute values of the entries; 0 for the zero vector.
Int content(const IntVec& v);

/// v divided by the gcd of its entries. Throws std::invalid_argument
/// ("zero direction") on the zero vector.
IntVec primitive(const IntVec& v);

/// Sorted canonically with duplicates removed.
std::vector<IntVec> canonical_set(std::vector<IntVec> vs);

/// Inward-oriented supporting hyperplane {x : normal . x >= 0} with a
/// primitive integer normal.
struct Hyperplane {
  IntVec normal;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// normal . point; throws std::invalid_argument on dimension mismatch.
Int evaluate(const Hyperplane& h, const IntVec& point);

/// Rank of the matrix whose rows are `rows` (fraction-free elimination).
std::size_t rank(std::span<const IntVec> rows);

/// Determinant of a square integer matrix given by rows (Bareiss).
Int determinant(std::vector<IntVec> rows);

/// Integer normal of the hyperplane spanned by p-1 vectors in Z^p, via the
/// signed maximal minors. Zero iff the vectors are linearly dependent.
IntVec orthogonal_complement(std::span<const IntVec> rows);

}  // namespace csg
