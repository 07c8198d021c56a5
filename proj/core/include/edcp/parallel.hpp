#pragma once

#include <cstdint>
#include <functional>

namespace edcp {

/// Number of worker threads implied by a `threads` argument: values <= 0 mean
/// "use the hardware concurrency".
int resolve_threads(int threads);

/// Run fn(i) for i in [0, count). Work is split across threads by index
/// interleaving (thread t handles i = t, t+P, t+2P, ...), so each index is
/// processed exactly once and results written to slot i are identical for any
/// thread count. The first exception thrown by any worker is rethrown.
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& fn,
                  int threads = 0);

} // namespace edcp
