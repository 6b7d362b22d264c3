#pragma once

#include <cstddef>
#include <functional>

namespace maniplex {

/// Worker threads used by the subset sweeps in the polytopality checks.
/// Results never depend on this value. Defaults to 1.
void set_thread_count(unsigned threads);
unsigned thread_count();

/// Runs body(i) for i in [0, count), split across thread_count() workers.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace maniplex
