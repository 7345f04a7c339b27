#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace legsum {

/// Worker count: LEGSUM_THREADS if set and positive, else hardware concurrency.
inline unsigned default_threads() {
  if (const char* env = std::getenv("LEGSUM_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, n) into fixed chunks of `chunk` indices and evaluates
/// `body(begin, end)` for each chunk on up to `threads` workers.
///
/// The chunk boundaries depend only on n and chunk, never on the thread
/// count, and results come back in chunk order. Reducing the returned vector
/// sequentially therefore gives bit-identical floating sums for any number of
/// threads.
template <class Result, class Body>
std::vector<Result> map_chunks(std::size_t n, std::size_t chunk, unsigned threads, Body&& body) {
  chunk = std::max<std::size_t>(chunk, 1);
  const std::size_t chunks = (n + chunk - 1) / chunk;
  std::vector<Result> out(chunks);
  if (chunks == 0) return out;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        const std::size_t begin = c * chunk;
        out[c] = body(begin, std::min(n, begin + chunk));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(chunks);
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace legsum
