#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <future>
#include <thread>
#include <vector>

namespace hspec::detail {

// Runs fn(i) for i in [0, count) on up to hardware_concurrency threads and
// returns the results in index order, so any reduction over them is
// independent of completion order.
template <typename Fn>
auto parallel_map(std::size_t count, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<R> out;
  out.reserve(count);
  const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
    return out;
  }
  std::deque<std::future<R>> pending;
  for (std::size_t i = 0; i < count; ++i) {
    if (pending.size() >= workers) {
      out.push_back(pending.front().get());
      pending.pop_front();
    }
    pending.push_back(std::async(std::launch::async, fn, i));
  }
  while (!pending.empty()) {
    out.push_back(pending.front().get());
    pending.pop_front();
  }
  return out;
}

}  // namespace hspec::detail
