#pragma once

#include <cstddef>
#include <functional>

namespace mourre::util {

/// Worker cap: MOURRE_LAB_THREADS when set (clamped to >= 1), otherwise the
/// hardware concurrency.
int thread_cap();

/// Runs fn(0..count-1), possibly on several threads.  Results must be written
/// by index; the decomposition never changes observable output.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace mourre::util
