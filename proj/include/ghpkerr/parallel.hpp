#pragma once

#include <cstddef>
#include <functional>

namespace ghpkerr {

/// Worker count: min(hardware, GHPKERR_THREADS) when the variable is set to
/// a positive integer, else hardware concurrency.
int worker_count();

/// Runs fn(i) for i in [0, n) across workers. Callers write results into
/// index-addressed slots and reduce sequentially afterwards, so the outcome
/// is independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace ghpkerr
