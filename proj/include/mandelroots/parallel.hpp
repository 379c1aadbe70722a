#ifndef MANDELROOTS_PARALLEL_HPP
#define MANDELROOTS_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace mandelroots {

/// Worker cap from MANDELROOTS_THREADS (0 or unset = hardware concurrency).
std::size_t worker_count();

/// Runs fn(begin, end) over a static contiguous partition of [0, n). Each
/// index is owned by exactly one chunk, so results are identical for any
/// thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace mandelroots

#endif
