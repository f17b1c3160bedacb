#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace rlab::detail {

// Splits [begin, end) into one contiguous block per worker, folds each block
// with `fold(acc, lo, hi)` and merges the partial results left to right with
// `merge(acc, part)`. Output is independent of the worker count as long as
// `merge` is associative and commutative on the values it compares.
template <class T, class Fold, class Merge>
T parallel_reduce(std::uint64_t begin, std::uint64_t end, unsigned threads, T init,
                  Fold fold, Merge merge) {
  const std::uint64_t total = end > begin ? end - begin : 0;
  const unsigned workers = static_cast<unsigned>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total / 4096 + 1)));
  if (workers == 1) {
    T acc = init;
    fold(acc, begin, end);
    return acc;
  }
  std::vector<T> parts(workers, init);
  std::vector<std::thread> pool;
  const std::uint64_t step = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = begin + std::min<std::uint64_t>(total, step * w);
    const std::uint64_t hi = begin + std::min<std::uint64_t>(total, step * (w + 1));
    pool.emplace_back([&, w, lo, hi] { fold(parts[w], lo, hi); });
  }
  for (auto& t : pool) t.join();
  T acc = init;
  for (auto& p : parts) merge(acc, p);
  return acc;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  const unsigned workers =
      static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(threads, count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace rlab::detail
