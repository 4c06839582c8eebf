#pragma once

// Fan-out over independent work items.  Results land in input order, so the
// output never depends on the number of workers or on scheduling.

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace charsum::experiments {

/// out[i] = fn(items[i]).  If any call throws, the exception from the
/// smallest failing index is rethrown after all workers stop.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, unsigned threads, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, const T&>> {
  using R = std::invoke_result_t<Fn&, const T&>;
  std::vector<R> out(items.size());
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::size_t err_index = items.size();
  std::exception_ptr err;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      try {
        out[i] = fn(items[i]);
      } catch (...) {
        const std::lock_guard lock(err_mu);
        if (i < err_index) {
          err_index = i;
          err = std::current_exception();
        }
      }
    }
  };
  const unsigned n = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(items.size())));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace charsum::experiments
