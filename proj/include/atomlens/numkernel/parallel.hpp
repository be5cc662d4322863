#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace atomlens::numkernel {

/// Calls body(i) for i in [0, n) on up to `threads` worker threads. Indices
/// are split into contiguous blocks, so a body that writes only slot i gives
/// results independent of the thread count. If bodies throw, the exception
/// from the lowest failing block is rethrown after all workers join.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

/// Explicit request, else ATOMLENS_THREADS, else the hardware concurrency.
/// Throws std::invalid_argument for zero or unparsable values.
unsigned resolve_thread_count(std::optional<unsigned> requested);

}  // namespace atomlens::numkernel
