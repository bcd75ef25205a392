#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace shiish {

template <class Body>
void for_each_word_parallel(int n, int workers, Body&& body) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(n);
  const auto shards = static_cast<std::uint64_t>(std::max(1, workers));
  auto run = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t r = lo; r < hi; ++r) body(word_unrank(n, r));
  };
  if (shards == 1) {
    run(0, total);
    return;
  }
  std::vector<std::jthread> pool;
  const std::uint64_t step = (total + shards - 1) / shards;
  for (std::uint64_t lo = 0; lo < total; lo += step) pool.emplace_back(run, lo, std::min(total, lo + step));
}

}  // namespace shiish
