#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace rncdr {

// Worker count: CRNCDR_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

// Runs body(i) for i in [0, n). Exceptions propagate (first one wins).
void parallel_for(size_t n, const std::function<void(size_t)>& body);

// Smallest i in [0, n) with pred(i) true, identical to a sequential scan.
std::optional<size_t> parallel_find_first(size_t n, const std::function<bool(size_t)>& pred);

}  // namespace rncdr
