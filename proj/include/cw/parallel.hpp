#pragma once

#include <cstddef>
#include <functional>

namespace cw {

// Worker count: min(hardware_concurrency, CONSTWIDTH_THREADS when set to a
// positive integer). Read once per process.
std::size_t max_threads();

// Runs fn(begin, end) over a static partition of [0, count). fn must be
// thread-safe and write only to disjoint output slots. Calls from inside a
// parallel region run inline (no nested pools).
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace cw
