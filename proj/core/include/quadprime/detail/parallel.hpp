#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace quadprime::detail {

// Splits [first, last] into at most `workers` contiguous chunks, runs
// fn(lo, hi) on each (hi inclusive) and returns the results in chunk order.
template <typename Fn>
auto run_chunks(std::uint64_t first, std::uint64_t last, unsigned workers, Fn fn) {
  using Result = decltype(fn(first, last));
  std::vector<Result> results;
  if (last < first) return results;
  const std::uint64_t span = last - first + 1;
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, span));
  results.resize(chunks);
  auto bounds = [&](std::uint64_t i) { return first + span * i / chunks; };
  if (chunks == 1) {
    results[0] = fn(first, last);
    return results;
  }
  {
    std::vector<std::jthread> pool;
    pool.reserve(chunks);
    for (std::uint64_t i = 0; i < chunks; ++i) {
      pool.emplace_back([&, i] { results[i] = fn(bounds(i), bounds(i + 1) - 1); });
    }
  }
  return results;
}

}  // namespace quadprime::detail
