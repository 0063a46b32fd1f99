#pragma once

#include <cstddef>
#include <functional>

namespace vstr {

// worker count from VIRTSTRING_THREADS, default hardware concurrency
int thread_count();
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace vstr
