#pragma once

#include <cstddef>
#include <functional>

namespace hodge {

// Worker count from HODGE_THREADS (unset, empty or 0 means hardware
// concurrency). Invalid values throw std::invalid_argument.
int thread_count();

// Runs body(i) for i in [0, count). Each index must write only its own
// output slot so results do not depend on the schedule.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body);

} // namespace hodge
