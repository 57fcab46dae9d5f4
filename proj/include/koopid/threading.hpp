#pragma once

#include <cstddef>
#include <functional>

namespace koopid {

/// Worker cap taken from the KOOPID_THREADS environment variable
/// (hardware concurrency when unset, minimum 1).
int max_workers();

/// Runs fn(i) for i in [0, count). Work items must be independent; results
/// must not depend on scheduling (callers seed per item via mix_seed).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace koopid
