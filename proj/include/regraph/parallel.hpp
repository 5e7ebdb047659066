#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

#include "regraph/error.hpp"
#include "regraph/rng.hpp"

namespace regraph {

// Runs fn(rng, i) for i in [0, count) with rng = make_stream(seed, offset + i)
// and returns the results in index order. The output depends on seed,
// offset and count only, so any worker count gives the same vector.
template <class Fn>
auto run_replicas(std::uint64_t seed, std::uint64_t offset, std::size_t count, int workers, Fn&& fn) {
  using Result = std::decay_t<std::invoke_result_t<Fn&, Rng&, std::size_t>>;
  if (workers < 1) throw InvalidInput("workers must be >= 1");
  std::vector<std::optional<Result>> slots(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        Rng rng = make_stream(seed, offset + i);
        slots[i].emplace(fn(rng, i));
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  const auto threads = static_cast<std::size_t>(std::min<std::size_t>(static_cast<std::size_t>(workers), std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<Result> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// Default worker count: hardware threads, at least 1.
inline int default_workers() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

}  // namespace regraph
