#include "parallel.hpp"

#include <cstdlib>

namespace prg {

namespace {
std::atomic<unsigned> g_thread_limit{0};

unsigned env_threads() {
    const char* env = std::getenv("PRG_THREADS");
    if (!env) return 0;
    long v = std::strtol(env, nullptr, 10);
    return v > 0 ? static_cast<unsigned>(v) : 0;
}
} // namespace

void set_thread_limit(unsigned n) { g_thread_limit.store(n); }

unsigned thread_limit() {
    unsigned n = g_thread_limit.load();
    if (n == 0) n = env_threads();
    if (n == 0) n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    return n;
}

void parallel_for_chunks(uint64_t chunks, const std::function<void(uint64_t)>& fn) {
    if (chunks == 0) return;
    unsigned workers = thread_limit();
    if (workers > chunks) workers = static_cast<unsigned>(chunks);
    if (workers <= 1) {
        for (uint64_t c = 0; c < chunks; ++c) fn(c);
        return;
    }
    std::atomic<uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr first_error = nullptr;
    std::atomic<bool> failed{false};
    std::atomic<int> error_guard{0};
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                uint64_t c = next.fetch_add(1);
                if (c >= chunks || failed.load()) return;
                try {
                    fn(c);
                } catch (...) {
                    if (error_guard.fetch_add(1) == 0) first_error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failed.load() && first_error) std::rethrow_exception(first_error);
}

Range chunk_range(uint64_t total, uint64_t chunks, uint64_t chunk) {
    uint64_t per = total / chunks;
    uint64_t rem = total % chunks;
    uint64_t begin = chunk * per + (chunk < rem ? chunk : rem);
    uint64_t len = per + (chunk < rem ? 1 : 0);
    return {begin, begin + len};
}

} // namespace prg
