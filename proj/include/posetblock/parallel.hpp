#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace posetblock {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Splits [0, total) into contiguous chunks, runs `work(chunk, begin, end)` on
/// each chunk and returns once all are done. Chunk c always covers the same
/// range for a given (total, chunks), so reductions over chunk results in
/// chunk order are schedule-independent. Rethrows the first worker exception.
template <class Work>
void parallel_chunks(std::size_t total, unsigned chunks, Work&& work) {
    chunks = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(chunks, total)));
    if (chunks <= 1) {
        work(0U, std::size_t{0}, total);
        return;
    }
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    for (unsigned c = 0; c < chunks; ++c) {
        const std::size_t begin = total * c / chunks;
        const std::size_t end = total * (c + 1) / chunks;
        pool.emplace_back([&, c, begin, end] {
            try {
                work(c, begin, end);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace posetblock
