#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fibsum {

/// Runs `work(stripe, stripe_count)` on `workers` threads and concatenates the
/// returned vectors in stripe order. The first exception thrown by any worker
/// is rethrown on the calling thread after all workers have joined.
template <class Work>
auto run_striped(std::size_t workers, Work&& work) {
  using Batch = decltype(work(std::size_t{0}, std::size_t{1}));
  if (workers <= 1) return work(0, 1);

  std::vector<Batch> batches(workers);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          batches[w] = work(w, workers);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);

  Batch merged;
  for (auto& b : batches) merged.insert(merged.end(), b.begin(), b.end());
  return merged;
}

}  // namespace fibsum
