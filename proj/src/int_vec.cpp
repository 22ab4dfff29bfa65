#include "csg/int_vec.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace csg {

namespace {

void require_same_dim(const IntVec& a, const IntVec& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
}

}  // namespace

IntVec::IntVec(std::initializer_list<long long> entries) {
  entries_.reserve(entries.size());
  for (long long e : entries) entries_.emplace_back(e);
}

Int IntVec::norm1() const {
  Int total = 0;
  for (const Int& e : entries_) total += abs(e);
  return total;
}

bool IntVec::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Int& e) { return e.is_zero(); });
}

bool IntVec::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Int& e) { return e.sign() >= 0; });
}

IntVec& IntVec::operator+=(const IntVec& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

IntVec& IntVec::operator-=(const IntVec& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

IntVec& IntVec::operator*=(const Int& factor) {
  for (Int& e : entries_) e *= factor;
  return *this;
}

std::strong_ordering operator<=>(const IntVec& a, const IntVec& b) {
  const Int na = a.norm1();
  const Int nb = b.norm1();
  if (na != nb) return na < nb ? std::strong_ordering::less : std::strong_ordering::greater;
  const std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.dim() <=> b.dim();
}

std::string IntVec::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += entries_[i].str();
  }
  return out + ")";
}

std::size_t IntVecHash::operator()(const IntVec& v) const noexcept {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  std::size_t seed = v.dim();
  for (const Int& e : v) {
    std::size_t h;
    if (e >= lo && e <= hi) {
      h = std::hash<long long>{}(e.convert_to<long long>());
    } else {
      h = std::hash<std::string>{}(e.str());
    }
    seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}

bool dominated_by(const IntVec& a, const IntVec& b) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Int dot(const IntVec& a, const IntVec& b) {
  require_same_dim(a, b);
  Int total = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) total += a[i] * b[i];
  return total;
}

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& e : v) g = gcd(g, abs(e));
  return g;
}

IntVec primitive(const IntVec& v) {
  const Int g = content(v);
  if (g.is_zero()) throw std::invalid_argument("zero direction");
  std::vector<Int> out(v.begin(), v.end());
  for (Int& e : out) e /= g;
  return IntVec(std::move(out));
}

std::vector<IntVec> canonical_set(std::vector<IntVec> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

Int evaluate(const Hyperplane& h, const IntVec& point) { return dot(h.normal, point); }

std::size_t rank(std::span<const IntVec> rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<Int>> m;
  m.reserve(rows.size());
  const std::size_t cols = rows.front().dim();
  for (const IntVec& r : rows) {
    if (r.dim() != cols) throw std::invalid_argument("rank: ragged matrix");
    m.emplace_back(r.begin(), r.end());
  }
  std::size_t r = 0;
  Int prev_pivot = 1;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev_pivot;
      }
      m[i][c] = 0;
    }
    prev_pivot = m[r][c];
    ++r;
  }
  return r;
}

Int determinant(std::vector<IntVec> rows) {
  const std::size_t n = rows.size();
  if (n == 0) return 1;
  std::vector<std::vector<Int>> m;
  m.reserve(n);
  for (const IntVec& r : rows) {
    if (r.dim() != n) throw std::invalid_argument("determinant: matrix not square");
    m.emplace_back(r.begin(), r.end());
  }
  Int sign = 1;
  Int prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev_pivot;
      }
    }
    prev_pivot = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntVec orthogonal_complement(std::span<const IntVec> rows) {
  if (rows.empty()) throw std::invalid_argument("orthogonal_complement: no rows");
  const std::size_t p = rows.front().dim();
  if (rows.size() + 1 != p) throw std::invalid_argument("orthogonal_complement: need p-1 rows in Z^p");
  std::vector<Int> normal(p);
  for (std::size_t k = 0; k < p; ++k) {
    std::vector<IntVec> minor;
    minor.reserve(rows.size());
    for (const IntVec& r : rows) {
      std::vector<Int> entries;
      entries.reserve(p - 1);
      for (std::size_t j = 0; j < p; ++j) {
        if (j != k) entries.push_back(r[j]);
      }
      minor.emplace_back(std::move(entries));
    }
    Int d = determinant(std::move(minor));
    normal[k] = (k % 2 == 0) ? d : Int(-d);
  }
  return IntVec(std::move(normal));
}

}  // namespace csg
