#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace wallcross {

// Worker count: WALLCROSS_THREADS when set, else hardware concurrency capped at 8.
inline int thread_budget() {
  if (const char* env = std::getenv("WALLCROSS_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v > 64 ? 64 : v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) return 1;
  return hw > 8 ? 8 : int(hw);
}

// out[i] = fn(i) for i in [0, count); result order is by index, so the output
// is deterministic no matter how work is scheduled.
template <class T, class Fn>
std::vector<T> parallel_map(int count, Fn fn) {
  std::vector<T> out(size_t(count < 0 ? 0 : count));
  int workers = thread_budget();
  if (workers > count) workers = count;
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) out[size_t(i)] = fn(i);
    return out;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(size_t(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        if (failed.load()) return;
        try {
          out[size_t(i)] = fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(error);
  return out;
}

}  // namespace wallcross
