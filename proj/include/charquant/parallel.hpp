#pragma once

#include <cstddef>
#include <functional>

namespace charquant {

/// Worker bound from CHARQUANT_THREADS (positive integer), else hardware
/// concurrency, else 1.
int worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Each index
/// writes only its own output slot, so results merge in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace charquant
