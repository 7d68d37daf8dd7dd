#pragma once

#include <functional>

namespace cantorh {

// Worker count used for independent solves.  Reads the CANTORH_THREADS
// environment variable (clamped to [1, 256]); falls back to the hardware
// concurrency when unset or unparsable.
int thread_count();

// Runs fn(i) for i in [0, count) on up to thread_count() workers.  Tasks must
// be independent; exceptions are collected and the first one is rethrown.
void parallel_for(int count, const std::function<void(int)>& fn);

} // namespace cantorh
