#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace zpw {

// Process-wide worker-thread cap, settable from the CLI (--threads).
inline std::atomic<int>& worker_threads() {
  static std::atomic<int> n{0};  // 0 means use hardware concurrency
  return n;
}

inline void set_worker_threads(int n) { worker_threads().store(n); }

inline int effective_threads() {
  int n = worker_threads().load();
  if (n > 0) return n;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Splits [0, count) into contiguous chunks, one per worker. Each chunk is
// processed by fn(begin, end). Chunk boundaries depend only on count and the
// thread cap, so any per-chunk accumulation merged in chunk order is
// deterministic.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  if (count == 0) return;
  const int nt_req = effective_threads();
  const std::size_t nt =
      std::min<std::size_t>(static_cast<std::size_t>(nt_req), count);
  if (nt <= 1) {
    fn(std::size_t{0}, count);
    return;
  }
  const std::size_t chunk = (count + nt - 1) / nt;
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::atomic<bool> failed{false};
  for (std::size_t t = 0; t < nt; ++t) {
    const std::size_t b = t * chunk;
    const std::size_t e = std::min(count, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&, b, e] {
      try {
        fn(b, e);
      } catch (...) {
        if (!failed.exchange(true)) err = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace zpw
