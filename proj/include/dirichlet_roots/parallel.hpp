#pragma once

#include <cstddef>
#include <functional>

namespace dirichlet_roots {

/// Resolves a requested worker count: 0 means "all hardware threads".
unsigned resolve_threads(unsigned requested) noexcept;

/// Runs body(i) for every i in [0, count) on up to `threads` workers.
/// Work items are claimed dynamically, so body must only write to state owned
/// by index i. The first exception thrown by any item is rethrown here.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace dirichlet_roots
