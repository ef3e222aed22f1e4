#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hypspec {

// Runs fn(i) for i in [0, count) on a small worker pool.  Tasks must be
// independent; the first exception is rethrown on the calling thread after
// all workers join.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn, unsigned threads = 0) {
  if (count == 0) return;
  unsigned hw = threads ? threads : std::thread::hardware_concurrency();
  if (hw < 2 || count == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  hw = static_cast<unsigned>(std::min<std::size_t>(hw, count));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(hw);
  for (unsigned k = 0; k < hw; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace hypspec
