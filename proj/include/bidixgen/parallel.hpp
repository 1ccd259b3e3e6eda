#ifndef BIDIXGEN_PARALLEL_HPP
#define BIDIXGEN_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bidixgen {

/// Resolves a requested worker count; 0 means hardware concurrency.
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(state, i) for i in [0, n) on up to `threads` workers. Each worker
/// owns one state from make_state(). Indices are handed out dynamically, so
/// callers must write results by index to stay deterministic. The first
/// exception thrown by any worker is rethrown on the calling thread.
template <typename MakeState, typename Body>
void parallel_for(std::size_t n, unsigned threads, MakeState make_state, Body body) {
  threads = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    auto state = make_state();
    for (std::size_t i = 0; i < n; ++i) body(state, i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::atomic<bool> stop{false};
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        try {
          auto state = make_state();
          for (std::size_t i = next++; i < n && !stop; i = next++) body(state, i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          stop = true;
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace bidixgen

#endif  // BIDIXGEN_PARALLEL_HPP
