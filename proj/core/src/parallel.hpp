#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace possat::detail {

/// Splits [0, count) into at most `threads` contiguous ranges and evaluates
/// fn(begin, end) on each. Results come back in range order, so merging them
/// front to back gives the same answer as a single-threaded run.
template <typename Fn>
auto map_ranges(std::size_t count, int threads, Fn&& fn) {
  using Result = decltype(fn(std::size_t{}, std::size_t{}));
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count));
  std::vector<Result> results(workers);
  if (workers == 1) {
    results[0] = fn(std::size_t{0}, count);
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = count * w / workers;
      const std::size_t end = count * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        try {
          results[w] = fn(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace possat::detail
