#pragma once

#include <cstddef>
#include <functional>

namespace dressian {

/// Worker count used by the data-parallel sweeps. Defaults to 1; results never
/// depend on it.
void set_worker_threads(int count);
int worker_threads();

/// Runs body(i) for i in [0, count) on the configured workers.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace dressian
