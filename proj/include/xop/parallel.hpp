#ifndef XOP_PARALLEL_HPP_
#define XOP_PARALLEL_HPP_

#include <cstddef>
#include <vector>

namespace xop {

/// serial is the reference path; parallel fans independent grid points out
/// over OpenMP threads (or runs serially when built without OpenMP).
enum class Execution { serial, parallel };

/// out[i] = task(i) for i in [0, count). Results land in index order, so the
/// output is identical for both execution modes. task must not throw.
template <class Result, class Task>
std::vector<Result> map_indices(std::size_t count, Task&& task, Execution exec) {
  std::vector<Result> out(count);
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = task(i);
    return out;
  }
  const auto n = static_cast<long>(count);
#if defined(XOP_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = task(static_cast<std::size_t>(i));
  return out;
}

}  // namespace xop

#endif  // XOP_PARALLEL_HPP_
