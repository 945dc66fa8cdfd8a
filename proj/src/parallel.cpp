//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file parallel.cpp
//  \brief worker pool sizing and the static-partition loop

#include "bgk/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bgk {

int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char *env = std::getenv("BGK_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return n;
}

void parallel_for(int begin, int end, const std::function<void(int)> &fn) {
  const int n = end - begin;
  if (n <= 0) return;

  const int workers = std::min(worker_count(), n);
  // Thread spawn costs ~10us each; don't bother below a few thousand items.
  if (workers == 1 || n < 4096) {
    for (int i = begin; i < end; ++i) fn(i);
    return;
  }

  // A worker that throws would std::terminate the process, so each block
  // traps its first exception and the caller rethrows it after the join.
  std::exception_ptr first_error = nullptr;
  std::mutex error_mutex;
  auto run_block = [&fn, &first_error, &error_mutex](int lo, int hi) {
    try {
      for (int i = lo; i < hi; ++i) fn(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  const int chunk = (n + workers - 1) / workers;
  for (int w = 1; w < workers; ++w) {
    const int lo = begin + w * chunk;
    const int hi = std::min(lo + chunk, end);
    if (lo >= hi) break;
    pool.emplace_back(run_block, lo, hi);
  }
  run_block(begin, std::min(begin + chunk, end));
  for (auto &t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace bgk
