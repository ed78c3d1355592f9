// algkit — deterministic parallel scanning.
//
// Verification walks basis-index tuples in lexicographic order. With T
// threads the range is split into contiguous chunks; each chunk reports
// its first hit and the reduce keeps the globally smallest index, so the
// result is byte-identical for any thread count.

#ifndef ALGKIT_PARALLEL_HPP
#define ALGKIT_PARALLEL_HPP

#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

namespace algkit {

// Worker count: explicit override, else ALGKIT_THREADS, else 1.
unsigned effective_threads();
void set_thread_override(unsigned t);  // 0 clears the override

// First index in [0, total) for which check returns a payload, with the
// payload; lexicographic scan order.
template <class Check>
auto scan_first(std::size_t total, Check&& check)
    -> decltype(check(std::size_t{0})) {
  using Result = decltype(check(std::size_t{0}));
  const unsigned threads = effective_threads();
  if (threads <= 1 || total < 2 * threads) {
    for (std::size_t i = 0; i < total; ++i)
      if (auto hit = check(i)) return hit;
    return std::nullopt;
  }
  struct Slot {
    std::size_t index = 0;
    Result payload;
  };
  std::vector<Slot> slots(threads);
  std::vector<std::thread> workers;
  const std::size_t chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(total, begin + chunk);
    workers.emplace_back([&, t, begin, end] {
      for (std::size_t i = begin; i < end; ++i) {
        if (auto hit = check(i)) {
          slots[t].index = i;
          slots[t].payload = std::move(hit);
          return;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& s : slots)
    if (s.payload) return std::move(s.payload);
  return std::nullopt;
}

}  // namespace algkit

#endif
