#pragma once

// Strided parallel map over an index range. Results come back in index order, so any
// reduction over them is independent of the number of worker threads.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace latcurve {

/// Worker count used by the library; 0 restores the hardware default.
void set_thread_count(unsigned threads);
unsigned thread_count();

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  const std::size_t workers = std::min<std::size_t>(thread_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace latcurve
