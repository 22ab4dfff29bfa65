#include "csg/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>

#include <omp.h>

#include "csg/error.hpp"

namespace csg::kernels {

namespace {

std::atomic<int> worker_cap{0};

constexpr std::size_t kMaxBoxPoints = std::size_t{1} << 32;

// Holds the first exception thrown inside a parallel region so it can be
// rethrown on the calling thread.
class ExceptionSlot {
 public:
  template <typename F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow_if_set() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

std::vector<IntVec> sorted(std::vector<IntVec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

void set_max_workers(int n) { worker_cap.store(n < 1 ? 0 : n); }

int max_workers() {
  const int cap = worker_cap.load();
  return cap > 0 ? cap : std::max(1, omp_get_num_procs());
}

std::size_t box_size(const IntVec& upper) {
  if (!upper.is_nonnegative()) throw std::invalid_argument("box upper corner must be nonnegative");
  std::size_t total = 1;
  for (const Int& u : upper) {
    if (u >= kMaxBoxPoints) throw DomainError("enumeration box too large");
    const std::size_t side = u.convert_to<std::size_t>() + 1;
    if (total > kMaxBoxPoints / side) throw DomainError("enumeration box too large");
    total *= side;
  }
  return total;
}

IntVec box_point(const IntVec& upper, std::size_t index) {
  std::vector<Int> coords(upper.dim());
  for (std::size_t j = 0; j < upper.dim(); ++j) {
    const std::size_t side = upper[j].convert_to<std::size_t>() + 1;
    coords[j] = index % side;
    index /= side;
  }
  return IntVec(std::move(coords));
}

namespace serial {

std::vector<IntVec> filter_box(const IntVec& upper, const PointPredicate& keep) {
  const std::size_t n = box_size(upper);
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec p = box_point(upper, i);
    if (keep(p)) out.push_back(std::move(p));
  }
  return sorted(std::move(out));
}

std::vector<IntVec> filter_points(std::span<const IntVec> points, const PointPredicate& keep) {
  std::vector<IntVec> out;
  for (const IntVec& p : points) {
    if (keep(p)) out.push_back(p);
  }
  return sorted(std::move(out));
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body) {
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace serial

namespace parallel {

std::vector<IntVec> filter_box(const IntVec& upper, const PointPredicate& keep, int workers) {
  const auto n = static_cast<long long>(box_size(upper));
  std::vector<std::vector<IntVec>> per_thread(static_cast<std::size_t>(std::max(1, workers)));
  ExceptionSlot slot;
#pragma omp parallel num_threads(workers)
  {
    auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 256)
    for (long long i = 0; i < n; ++i) {
      slot.run([&] {
        IntVec p = box_point(upper, static_cast<std::size_t>(i));
        if (keep(p)) local.push_back(std::move(p));
      });
    }
  }
  slot.rethrow_if_set();
  std::vector<IntVec> out;
  for (auto& part : per_thread) std::move(part.begin(), part.end(), std::back_inserter(out));
  return sorted(std::move(out));
}

std::vector<IntVec> filter_points(std::span<const IntVec> points, const PointPredicate& keep, int workers) {
  std::vector<char> flags(points.size(), 0);
  for_each_index(points.size(), [&](std::size_t i) { flags[i] = keep(points[i]) ? 1 : 0; }, workers);
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (flags[i]) out.push_back(points[i]);
  }
  return sorted(std::move(out));
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body, int workers) {
  const auto count = static_cast<long long>(n);
  ExceptionSlot slot;
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    slot.run([&] { body(static_cast<std::size_t>(i)); });
  }
  slot.rethrow_if_set();
}

}  // namespace parallel

std::vector<IntVec> filter_box(const IntVec& upper, const PointPredicate& keep) {
  const int w = max_workers();
  return w == 1 ? serial::filter_box(upper, keep) : parallel::filter_box(upper, keep, w);
}

std::vector<IntVec> filter_points(std::span<const IntVec> points, const PointPredicate& keep) {
  const int w = max_workers();
  return w == 1 ? serial::filter_points(points, keep) : parallel::filter_points(points, keep, w);
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body) {
  const int w = max_workers();
  if (w == 1) {
    serial::for_each_index(n, body);
  } else {
    parallel::for_each_index(n, body, w);
  }
}

}  // namespace csg::kernels
