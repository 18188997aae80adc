#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace tubefsi {

/// Evaluates task(i) for i in [0, count) on up to `jobs` threads and returns
/// the results in index order. The first exception (lowest index) is
/// rethrown after all workers finish.
template <typename Task>
auto run_jobs(std::size_t count, int jobs, Task&& task) {
  using Result = decltype(task(std::size_t{0}));
  std::vector<std::optional<Result>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(task(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const auto threads = std::size_t(std::clamp<long>(jobs, 1, long(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Result> results;
  results.reserve(count);
  for (auto& s : slots) results.push_back(std::move(*s));
  return results;
}

}  // namespace tubefsi
