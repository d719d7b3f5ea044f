#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace krk0 {

/// Number of workers for a requested parallelism (0 = hardware concurrency).
inline unsigned resolve_parallelism(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// results[i] = fn(items[i]), evaluated by up to `workers` threads pulling
/// indices from a shared counter. Output order is the input order whatever
/// the schedule; the first exception thrown by fn is rethrown.
template <typename Item, typename Fn>
auto parallel_map(const std::vector<Item>& items, Fn fn, unsigned workers)
    -> std::vector<decltype(fn(items.front()))> {
  using Result = decltype(fn(items.front()));
  std::vector<Result> results(items.size());
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(items.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < items.size(); i = next++) results[i] = fn(items[i]);
      } catch (...) {
        errors[w] = std::current_exception();
        next = items.size();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace krk0
