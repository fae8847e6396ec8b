#ifndef COXAN_EXEC_HPP
#define COXAN_EXEC_HPP

#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coxan {

// Execution policy for the data-parallel kernels. Results are required to be
// bit-identical across policies and thread counts; only wall time may differ.
enum class Exec { serial, parallel };

// Runs fn(i) for i in [0, n). With Exec::parallel the iterations are spread
// over OpenMP threads; fn must only write to per-index state. The first
// exception thrown by fn is rethrown after the loop joins.
template <typename Fn>
void for_each_index(std::size_t n, Exec exec, Fn&& fn) {
#ifdef _OPENMP
  if (exec == Exec::parallel) {
    std::exception_ptr error;
    std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

// Keeps the indices i in [0, n) with pred(i) true, in increasing order.
// The predicate runs under `exec`; the collection pass is serial so the
// output order never depends on scheduling.
template <typename Pred>
std::vector<std::size_t> filter_indices(std::size_t n, Exec exec, Pred&& pred) {
  std::vector<char> keep(n, 0);
  for_each_index(n, exec, [&](std::size_t i) { keep[i] = pred(i) ? 1 : 0; });
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (keep[i]) out.push_back(i);
  return out;
}

}  // namespace coxan

#endif
