// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace zetalab {

// Deterministic work splitter: index i is always handled by worker
// i % n_workers and each body(i) writes only its own preallocated slot, so
// results are bit-identical for any worker count.  The first exception
// thrown by a body is rethrown on the caller thread after join.
inline void parallel_for(int n, int n_workers, const std::function<void(int)>& body) {
  if (n <= 0) return;
  if (n_workers < 1) n_workers = 1;
  if (n_workers == 1 || n == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  if (n_workers > n) n_workers = n;

  std::mutex err_mutex;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(n_workers));
  for (int w = 0; w < n_workers; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (int i = w; i < n; i += n_workers) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace zetalab
