#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace prg {

// Global worker cap. 0 means "use hardware concurrency". The CLI sets this
// from --threads or PRG_THREADS. Results never depend on the value: work is
// split into fixed chunks and reductions happen per chunk, so only wall
// clock time changes.
void set_thread_limit(unsigned n);
unsigned thread_limit();

// Runs fn(chunk) for chunk = 0..chunks-1 on up to thread_limit() workers.
// Chunks are claimed dynamically; fn must only touch per-chunk state.
void parallel_for_chunks(uint64_t chunks, const std::function<void(uint64_t)>& fn);

// Convenience: splits [0, total) into roughly even ranges, one per chunk.
struct Range {
    uint64_t begin;
    uint64_t end;
};

Range chunk_range(uint64_t total, uint64_t chunks, uint64_t chunk);

} // namespace prg
