#pragma once

#include <cstddef>
#include <functional>

namespace rgg {

/// Worker count: RGG_THREADS when set (clamped to hardware), else 1.
int worker_count();

/// Runs fn(i) for i in [0, n) over worker_count() threads in fixed chunks.
/// fn must write only to its own index's slots, so results are identical for
/// any worker count.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace rgg
