#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace posetblock {

/// Enumeration limits shared by all modules. Every exhaustive routine checks
/// the relevant cap before starting and throws ExplosionError past it.
struct Caps {
    int max_elements = 24;                    // ground set size of a poset
    std::size_t max_ideals = std::size_t{1} << 22;
    std::size_t max_arrangements = 1'000'000; // per partition
    std::uint64_t max_space = 10'000'000;     // q^N for exhaustive sweeps
    std::uint64_t max_codewords = 1'000'000;  // q^k for materialized codes
    unsigned threads = 0;                     // 0 = hardware concurrency

    /// Defaults, with the oracle space cap taken from POSETBLOCK_CAP_SPACE when set.
    static Caps from_env() {
        Caps caps;
        if (const char* env = std::getenv("POSETBLOCK_CAP_SPACE")) {
            try {
                caps.max_space = std::stoull(env);
            } catch (...) {
                // unparsable value: keep the default
            }
        }
        return caps;
    }
};

}  // namespace posetblock
