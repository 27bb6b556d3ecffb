#pragma once

// Finite posets on [n], their order ideals and structural classification.
//
// Elements are 0-indexed internally and 1-indexed at every I/O boundary.
// Subsets of the ground set are 64-bit masks; bit i stands for element i+1.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "caps.hpp"
#include "errors.hpp"

namespace posetblock {

using Mask = std::uint64_t;

inline constexpr int kMaxGroundSet = 63;

inline constexpr Mask bit(int i) { return Mask{1} << i; }
inline int popcount(Mask m) { return std::popcount(m); }

/// Elements of a mask in ascending order (0-indexed).
inline std::vector<int> elements_of(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(m)));
    while (m != 0) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

/// Partial order on [n] stored as per-element down-sets and up-sets.
class Poset {
public:
    Poset() = default;

    int size() const { return n_; }

    /// i ⪯ j (0-indexed).
    bool leq(int i, int j) const { return (down_[j] & bit(i)) != 0; }

    /// {i : i ⪯ j}
    Mask down_set(int j) const { return down_[j]; }
    /// {j : i ⪯ j}
    Mask up_set(int i) const { return up_[i]; }

    Mask ground() const { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }

    /// Strict comparabilities (a,b) with a ≺ b, 1-indexed, ascending.
    std::vector<std::pair<int, int>> relations() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (a != b && leq(a, b)) out.emplace_back(a + 1, b + 1);
        return out;
    }

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.n_ == b.n_ && a.down_ == b.down_;
    }

    friend Poset build_poset(int n, const std::vector<std::pair<int, int>>& pairs,
                             const Caps& caps);
    friend Poset dual_poset(const Poset& p);

private:
    int n_ = 0;
    std::vector<Mask> down_;
    std::vector<Mask> up_;

    void derive_up_sets() {
        up_.assign(static_cast<std::size_t>(n_), 0);
        for (int j = 0; j < n_; ++j)
            for (int i : elements_of(down_[j])) up_[i] |= bit(j);
    }
};

/// Reflexive-transitive closure of 1-indexed pairs (a,b) meaning a ⪯ b.
/// Throws BoundsError for labels outside [n] and CycleError when the closure
/// identifies two distinct elements.
inline Poset build_poset(int n, const std::vector<std::pair<int, int>>& pairs,
                         const Caps& caps = {}) {
    if (n < 1 || n > std::min(caps.max_elements, kMaxGroundSet))
        throw BoundsError("poset size " + std::to_string(n) + " outside [1, " +
                          std::to_string(std::min(caps.max_elements, kMaxGroundSet)) + "]");
    Poset p;
    p.n_ = n;
    p.down_.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) p.down_[i] = bit(i);
    for (auto [a, b] : pairs) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw BoundsError("relation (" + std::to_string(a) + "," + std::to_string(b) +
                              ") has an element outside [1," + std::to_string(n) + "]");
        p.down_[b - 1] |= bit(a - 1);
    }
    // Warshall on down-set masks: if k ⪯ j then down(k) ⊆ down(j).
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            if (p.down_[j] & bit(k)) p.down_[j] |= p.down_[k];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((p.down_[j] & bit(i)) && (p.down_[i] & bit(j)))
                throw CycleError("relations force " + std::to_string(i + 1) + " and " +
                                 std::to_string(j + 1) + " to be equal");
    p.derive_up_sets();
    return p;
}

inline Poset chain_poset(int n) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i < n; ++i) rel.emplace_back(i, i + 1);
    return build_poset(n, rel);
}

inline Poset antichain_poset(int n) { return build_poset(n, {}); }

/// Order ideal with its maximal elements.
struct Ideal {
    Mask members = 0;
    Mask maximals = 0;

    int size() const { return popcount(members); }
    int max_count() const { return popcount(maximals); }
    Mask non_maximals() const { return members & ~maximals; }

    friend bool operator==(const Ideal&, const Ideal&) = default;
};

inline Mask maximals_of(const Poset& p, Mask members) {
    Mask out = 0;
    for (int j : elements_of(members))
        if ((p.up_set(j) & members) == bit(j)) out |= bit(j);
    return out;
}

inline bool is_ideal(const Poset& p, Mask s) {
    for (int j : elements_of(s))
        if ((p.down_set(j) & ~s) != 0) return false;
    return true;
}

/// Smallest ideal containing s.
inline Ideal ideal_closure(const Poset& p, Mask s) {
    if ((s & ~p.ground()) != 0) throw BoundsError("subset has elements outside the ground set");
    Mask members = 0;
    for (int j : elements_of(s)) members |= p.down_set(j);
    return Ideal{members, maximals_of(p, members)};
}

/// All ideals of P grouped by (cardinality, number of maximal elements).
/// The empty ideal is included under key (0,0).
struct IdealFamily {
    std::vector<Ideal> all;                            // ascending by member mask
    std::map<std::pair<int, int>, std::vector<Ideal>> by_card_and_max;
    std::vector<std::size_t> totals;                   // totals[i] = |I^i|, i = 0..n

    const std::vector<Ideal>& family(int card, int max_count) const {
        static const std::vector<Ideal> empty;
        auto it = by_card_and_max.find({card, max_count});
        return it == by_card_and_max.end() ? empty : it->second;
    }

    std::vector<Ideal> of_size(int card) const {
        std::vector<Ideal> out;
        for (const auto& I : all)
            if (I.size() == card) out.push_back(I);
        return out;
    }

    std::size_t count() const { return all.size(); }
};

/// Breadth-first walk of the ideal lattice: an ideal I extends to I ∪ {e}
/// whenever every element strictly below e already lies in I.
inline IdealFamily enumerate_ideals(const Poset& p, const Caps& caps = {}) {
    const int n = p.size();
    std::unordered_set<Mask> seen{0};
    std::vector<Mask> frontier{0};
    std::vector<Mask> found{0};
    while (!frontier.empty()) {
        std::vector<Mask> next;
        for (Mask I : frontier) {
            for (int e = 0; e < n; ++e) {
                if (I & bit(e)) continue;
                if ((p.down_set(e) & ~bit(e) & ~I) != 0) continue;
                Mask J = I | bit(e);
                if (seen.insert(J).second) {
                    if (seen.size() > caps.max_ideals)
                        throw ExplosionError("poset has more than " +
                                             std::to_string(caps.max_ideals) + " ideals");
                    next.push_back(J);
                    found.push_back(J);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(found.begin(), found.end());

    IdealFamily fam;
    fam.totals.assign(static_cast<std::size_t>(n) + 1, 0);
    fam.all.reserve(found.size());
    for (Mask m : found) {
        Ideal I{m, maximals_of(p, m)};
        fam.all.push_back(I);
        fam.by_card_and_max[{I.size(), I.max_count()}].push_back(I);
        ++fam.totals[static_cast<std::size_t>(I.size())];
    }
    return fam;
}

/// Order reversal: i ⪯' j iff j ⪯ i.
inline Poset dual_poset(const Poset& p) {
    Poset d;
    d.n_ = p.n_;
    d.down_ = p.up_;
    d.up_ = p.down_;
    return d;
}

struct LevelDecomposition {
    std::vector<int> heights;            // heights[i] for element i, starting at 1
    std::vector<Mask> levels;            // levels[h-1] = elements of height h
    std::vector<int> level_sizes;

    int height() const { return static_cast<int>(levels.size()); }
};

struct Classification {
    bool is_chain = false;
    bool is_antichain = false;
    bool is_hierarchical = false;
    LevelDecomposition levels;
};

inline LevelDecomposition level_decomposition(const Poset& p) {
    const int n = p.size();
    LevelDecomposition ld;
    ld.heights.assign(static_cast<std::size_t>(n), 0);
    // Strict predecessors have strictly smaller down-sets, so processing by
    // down-set size visits them first.
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return popcount(p.down_set(a)) < popcount(p.down_set(b));
    });
    int h_max = 0;
    for (int j : order) {
        int h = 0;
        for (int i : elements_of(p.down_set(j) & ~bit(j))) h = std::max(h, ld.heights[i]);
        ld.heights[j] = h + 1;
        h_max = std::max(h_max, h + 1);
    }
    ld.levels.assign(static_cast<std::size_t>(h_max), 0);
    for (int i = 0; i < n; ++i) ld.levels[ld.heights[i] - 1] |= bit(i);
    for (Mask lv : ld.levels) ld.level_sizes.push_back(popcount(lv));
    return ld;
}

inline Classification classify(const Poset& p) {
    Classification c;
    c.levels = level_decomposition(p);
    const auto& lv = c.levels.levels;
    c.is_hierarchical = true;
    for (std::size_t a = 0; a < lv.size() && c.is_hierarchical; ++a)
        for (std::size_t b = a + 1; b < lv.size() && c.is_hierarchical; ++b)
            for (int j : elements_of(lv[b]))
                if ((p.down_set(j) & lv[a]) != lv[a]) {
                    c.is_hierarchical = false;
                    break;
                }
    c.is_antichain = c.levels.height() == 1;
    c.is_chain = c.is_hierarchical &&
                 std::all_of(c.levels.level_sizes.begin(), c.levels.level_sizes.end(),
                             [](int s) { return s == 1; });
    return c;
}

inline std::string poset_class_name(const Classification& c) {
    if (c.is_antichain) return "antichain";
    if (c.is_chain) return "chain";
    if (c.is_hierarchical) return "hierarchical";
    return "general";
}

/// True iff every comparability of p also holds in p2.
inline bool is_finer(const Poset& p, const Poset& p2) {
    if (p.size() != p2.size())
        throw DimensionError("posets have different ground sets (" + std::to_string(p.size()) +
                             " vs " + std::to_string(p2.size()) + ")");
    for (int j = 0; j < p.size(); ++j)
        if ((p.down_set(j) & ~p2.down_set(j)) != 0) return false;
    return true;
}

/// Converts 1-indexed labels to a mask.
inline Mask mask_from_labels(const std::vector<int>& labels, int n) {
    Mask m = 0;
    for (int l : labels) {
        if (l < 1 || l > n)
            throw BoundsError("element " + std::to_string(l) + " outside [1," + std::to_string(n) + "]");
        m |= bit(l - 1);
    }
    return m;
}

inline std::vector<int> labels_from_mask(Mask m) {
    std::vector<int> out;
    for (int i : elements_of(m)) out.push_back(i + 1);
    return out;
}

}  // namespace posetblock
