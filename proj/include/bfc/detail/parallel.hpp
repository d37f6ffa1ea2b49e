#ifndef BFC_DETAIL_PARALLEL_HPP
#define BFC_DETAIL_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace bfc::detail {

/// Worker cap from BFC_LAB_THREADS; 0 or unset means auto.
inline unsigned thread_budget() {
  if (const char* env = std::getenv("BFC_LAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Least index in [0, count) where `ok` is false, or nullopt. Deterministic
/// regardless of the worker count: every worker scans a contiguous range
/// ascending and may stop only once a strictly smaller witness is known.
/// make_ok builds one predicate per worker, so predicates may keep scratch.
template <class MakeOk>
std::optional<std::uint64_t> least_failure(std::uint64_t count, MakeOk&& make_ok) {
  const unsigned budget = thread_budget();
  if (budget <= 1 || count < 4096) {
    auto ok = make_ok();
    for (std::uint64_t i = 0; i < count; ++i)
      if (!ok(i)) return i;
    return std::nullopt;
  }

  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(budget, count));
  std::atomic<std::uint64_t> best{UINT64_MAX};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      auto ok = make_ok();
      const std::uint64_t lo = count * w / workers;
      const std::uint64_t hi = count * (w + 1) / workers;
      for (std::uint64_t i = lo; i < hi; ++i) {
        if (best.load(std::memory_order_relaxed) <= lo) return;  // someone below us already failed
        if (!ok(i)) {
          std::uint64_t cur = best.load(std::memory_order_relaxed);
          while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
          }
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  const std::uint64_t found = best.load();
  if (found == UINT64_MAX) return std::nullopt;
  return found;
}

}  // namespace bfc::detail

#endif  // BFC_DETAIL_PARALLEL_HPP
