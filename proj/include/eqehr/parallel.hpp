#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace eqehr {

// Worker count from EQEHR_THREADS (default 1).
inline unsigned thread_count() {
  const char* env = std::getenv("EQEHR_THREADS");
  if (!env) return 1;
  try {
    long n = std::stol(env);
    return n < 1 ? 1u : static_cast<unsigned>(n);
  } catch (const std::exception&) {
    return 1;
  }
}

// Runs body(i) for i in [0, n); the first exception is rethrown after all workers finish.
template <class Body>
void parallel_for(std::size_t n, Body body) {
  const unsigned workers = std::min<std::size_t>(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::mutex mu;
  std::size_t next = 0;
  std::exception_ptr error;
  auto run = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard lock(mu);
        if (next >= n || error) return;
        i = next++;
      }
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace eqehr
