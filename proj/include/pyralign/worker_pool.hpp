#pragma once

#include <cstddef>
#include <functional>

namespace pyralign {

/// Fixed-size set of workers for index-parallel loops. Callers write results
/// into slots keyed by index, so collection order never depends on timing.
class WorkerPool {
 public:
  explicit WorkerPool(std::size_t workers);

  std::size_t size() const noexcept { return workers_; }

  /// Runs fn(i) for every i in [0, count). If any calls throw, the exception
  /// from the lowest index is rethrown after all workers finish.
  void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) const;

  static std::size_t hardware_workers();

 private:
  std::size_t workers_;
};

/// Runs on the pool when there is one, inline otherwise.
void for_each_index(WorkerPool* pool, std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace pyralign
