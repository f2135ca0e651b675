#pragma once

// Minimal data-parallel helper. Results never depend on the thread count:
// callers only use parallel_for for element-pure loops or for per-chunk
// buffers that are merged afterwards in index order.

#include <cstddef>
#include <exception>
#include <functional>

namespace kco {

// Worker count: explicit override > KCO_THREADS environment variable >
// std::thread::hardware_concurrency().
std::size_t thread_count();

// 0 restores the environment/hardware default.
void set_thread_count(std::size_t t);

namespace detail {
void parallel_chunks(std::size_t n, std::size_t grain,
                     const std::function<void(std::size_t, std::size_t)>& body);
}

// Runs body(begin, end) over a partition of [0, n). Serial when the range is
// small or one worker is configured.
template <typename F>
void parallel_for(std::size_t n, std::size_t grain, F&& body) {
  detail::parallel_chunks(n, grain, std::function<void(std::size_t, std::size_t)>(body));
}

}  // namespace kco
