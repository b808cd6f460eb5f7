#pragma once

#include <cstddef>
#include <functional>

namespace hhbv {

/// Worker count: HHBV_THREADS when set to a positive integer, else the hardware concurrency.
std::size_t thread_count();

/// Runs body(i) for i in [0, n), split into contiguous chunks over thread_count() threads.
/// body(i, worker) receives the worker index in [0, workers). Returns the worker count used.
std::size_t parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace hhbv
