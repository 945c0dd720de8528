#pragma once

#include <cstddef>
#include <functional>

namespace genfourier {

// Worker count: GENFOURIER_THREADS if set, else hardware concurrency (capped).
int thread_count();

// Runs fn(i) for i in [0, count). Each index writes only its own slots, so the
// result is deterministic regardless of the worker count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace genfourier
