#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace sl3 {

/// Worker count used by parallel_for; 1 runs everything inline.
void set_thread_count(int n);
int thread_count();

/// Runs fn(0..n-1) on the worker pool; the first exception is rethrown.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace sl3
