#ifndef FQT_PARALLEL_HPP
#define FQT_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace fqt {

/// Runs fn(chunk, begin, end) over `threads` contiguous chunks of [0, n).
/// Chunk boundaries depend only on n and the chunk count, and callers merge
/// per-chunk results in chunk order, so output does not depend on scheduling.
template <class Fn>
void parallel_chunks(std::size_t n, unsigned threads, Fn&& fn) {
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(threads == 0 ? 1 : threads, n));
    if (chunks == 1) {
        fn(std::size_t{0}, std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t begin = n * c / chunks, end = n * (c + 1) / chunks;
        pool.emplace_back([&, c, begin, end] {
            try {
                fn(c, begin, end);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

inline std::size_t chunk_count(std::size_t n, unsigned threads) {
    return std::max<std::size_t>(1, std::min<std::size_t>(threads == 0 ? 1 : threads, n));
}

}  // namespace fqt

#endif  // FQT_PARALLEL_HPP
