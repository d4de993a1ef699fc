#pragma once

#include <cstddef>
#include <functional>

namespace vacpol
{
/*!
 * Run body(i) for i in [0, count) on up to \c threads workers.
 *
 * Work is split into contiguous blocks; every index is processed exactly once
 * so results written to preallocated slots do not depend on the thread count.
 * The first exception thrown by any worker is rethrown on the caller.
 */
void parallel_for(std::size_t count,
                  unsigned threads,
                  std::function<void(std::size_t)> const& body);
}  // namespace vacpol
