#pragma once

// Bounded integer partitions and their distinct orderings ("arrangements").

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "caps.hpp"
#include "errors.hpp"

namespace posetblock {

/// Non-increasing parts in [1, M_w] summing to `target`.
struct BoundedPartition {
    std::vector<int> parts;
    int target = 0;

    int part_count() const { return static_cast<int>(parts.size()); }
    friend bool operator==(const BoundedPartition&, const BoundedPartition&) = default;
};

/// Distinct part values (descending) with their multiplicities.
struct Multiplicities {
    std::vector<int> values;
    std::vector<int> counts;
};

inline Multiplicities multiplicities(const BoundedPartition& b) {
    Multiplicities m;
    for (int p : b.parts) {
        if (!m.values.empty() && m.values.back() == p) {
            ++m.counts.back();
        } else {
            m.values.push_back(p);
            m.counts.push_back(1);
        }
    }
    return m;
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, int parts_left, std::vector<int>& cur,
                           int target, std::vector<BoundedPartition>& out) {
    if (remaining == 0) {
        if (!cur.empty()) out.push_back({cur, target});
        return;
    }
    if (parts_left == 0) return;
    // Prune: even all-max parts can't reach the remainder.
    if (static_cast<long long>(max_part) * parts_left < remaining) return;
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, parts_left - 1, cur, target, out);
        cur.pop_back();
    }
}

}  // namespace detail

/// Partitions of r - c*M_w into 1..max_parts parts, each in [1, M_w], in
/// descending lexicographic order. A non-positive target yields no partitions
/// unless `allow_empty` is set and the target is exactly 0.
inline std::vector<BoundedPartition> enumerate_partitions(int r, int c, int M_w, int max_parts,
                                                          bool allow_empty = false) {
    if (r < 0 || c < 0 || M_w < 1 || max_parts < 0)
        throw BoundsError("enumerate_partitions: negative or zero-width arguments");
    const long long target = static_cast<long long>(r) - static_cast<long long>(c) * M_w;
    std::vector<BoundedPartition> out;
    if (target < 0) return out;
    if (target == 0) {
        if (allow_empty) out.push_back({{}, 0});
        return out;
    }
    std::vector<int> cur;
    detail::partitions_rec(static_cast<int>(target), M_w, max_parts, cur, static_cast<int>(target), out);
    return out;
}

/// Partitions of `target` into exactly `parts` parts in [1, M_w].
inline std::vector<BoundedPartition> partitions_with_parts(int target, int parts, int M_w) {
    std::vector<BoundedPartition> out;
    if (parts <= 0 || target < parts || target > parts * M_w) return out;
    for (auto& b : enumerate_partitions(target, 0, M_w, parts))
        if (b.part_count() == parts) out.push_back(std::move(b));
    return out;
}

/// t! / (r_1! ... r_l!)
inline BigInt arrangement_count(const BoundedPartition& b) {
    BigInt result = factorial(b.part_count());
    for (int c : multiplicities(b).counts) result /= factorial(c);
    return result;
}

/// Distinct permutations of the parts in ascending lexicographic order.
inline std::vector<std::vector<int>> enumerate_arrangements(const BoundedPartition& b,
                                                            const Caps& caps = {}) {
    if (arrangement_count(b) > caps.max_arrangements)
        throw ExplosionError("partition has more than " + std::to_string(caps.max_arrangements) +
                             " arrangements");
    std::vector<int> cur = b.parts;
    std::sort(cur.begin(), cur.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(cur);
    } while (std::next_permutation(cur.begin(), cur.end()));
    return out;
}

/// Partitions grouped by part count, so callers can pick exactly j parts
/// without rescanning. Entry [j] lists partitions with j parts.
inline std::vector<std::vector<BoundedPartition>> partitions_by_part_count(int target, int M_w,
                                                                           int max_parts) {
    std::vector<std::vector<BoundedPartition>> out(static_cast<std::size_t>(max_parts) + 1);
    if (target <= 0) return out;
    for (auto& b : enumerate_partitions(target, 0, M_w, max_parts))
        out[static_cast<std::size_t>(b.part_count())].push_back(std::move(b));
    return out;
}

}  // namespace posetblock
