#include "pyralign/worker_pool.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "pyralign/error.hpp"

namespace pyralign {

WorkerPool::WorkerPool(std::size_t workers) : workers_(workers) {
  if (workers_ == 0) throw Error(ErrorCode::InvalidConfig, "worker count must be at least 1");
}

std::size_t WorkerPool::hardware_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

void WorkerPool::parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) const {
  if (count == 0) return;
  const std::size_t threads = std::min(workers_, count);
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::size_t failed_index = count;
  std::exception_ptr failure;

  auto drain = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (i < failed_index) {
          failed_index = i;
          failure = std::current_exception();
        }
      }
    }
  };

  {
    std::vector<std::jthread> helpers;
    helpers.reserve(threads - 1);
    for (std::size_t t = 1; t < threads; ++t) helpers.emplace_back(drain);
    drain();
  }
  if (failure) std::rethrow_exception(failure);
}

void for_each_index(WorkerPool* pool, std::size_t count, const std::function<void(std::size_t)>& fn) {
  if (pool) {
    pool->parallel_for(count, fn);
  } else {
    for (std::size_t i = 0; i < count; ++i) fn(i);
  }
}

}  // namespace pyralign
