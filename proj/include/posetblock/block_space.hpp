#pragma once

// Z_q^N viewed as n labeled blocks, and the (P,w,π) weight on it.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "poset.hpp"
#include "weight_model.hpp"

namespace posetblock {

using Symbol = std::uint32_t;

/// Block lengths (k_1..k_n) with prefix-sum addressing into a flat vector.
class LabelMap {
public:
    LabelMap() = default;
    explicit LabelMap(std::vector<int> k) : k_(std::move(k)) {
        if (k_.empty()) throw BoundsError("label map needs at least one block");
        offsets_.reserve(k_.size() + 1);
        offsets_.push_back(0);
        for (int ki : k_) {
            if (ki < 1) throw BoundsError("block lengths must be positive");
            offsets_.push_back(offsets_.back() + ki);
        }
    }

    static LabelMap uniform(int n, int k) {
        return LabelMap(std::vector<int>(static_cast<std::size_t>(n), k));
    }

    int blocks() const { return static_cast<int>(k_.size()); }
    int total_length() const { return offsets_.back(); }  // N
    int length(int i) const { return k_[i]; }
    int offset(int i) const { return offsets_[i]; }
    const std::vector<int>& lengths() const { return k_; }

    /// Σ_{i∈I} k_i
    int length_of(Mask blocks) const {
        int s = 0;
        for (int i : elements_of(blocks)) s += k_[i];
        return s;
    }

    /// Common block length, or 0 if the blocks differ.
    int uniform_length() const {
        return std::all_of(k_.begin(), k_.end(), [&](int v) { return v == k_[0]; }) ? k_[0] : 0;
    }

    friend bool operator==(const LabelMap& a, const LabelMap& b) { return a.k_ == b.k_; }

private:
    std::vector<int> k_;
    std::vector<int> offsets_;
};

/// Element of Z_q^N; block i is entries[offset_i, offset_i + k_i).
class BlockVector {
public:
    BlockVector() = default;
    explicit BlockVector(std::vector<Symbol> entries) : entries_(std::move(entries)) {}
    static BlockVector zero(int N) { return BlockVector(std::vector<Symbol>(static_cast<std::size_t>(N), 0)); }

    std::size_t size() const { return entries_.size(); }
    Symbol operator[](std::size_t i) const { return entries_[i]; }
    Symbol& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<Symbol>& entries() const { return entries_; }

    std::span<const Symbol> block(const LabelMap& pi, int i) const {
        return std::span<const Symbol>(entries_).subspan(static_cast<std::size_t>(pi.offset(i)),
                                                         static_cast<std::size_t>(pi.length(i)));
    }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](Symbol s) { return s == 0; });
    }

    friend bool operator==(const BlockVector&, const BlockVector&) = default;
    friend auto operator<=>(const BlockVector&, const BlockVector&) = default;

private:
    std::vector<Symbol> entries_;
};

inline BlockVector subtract_mod(const BlockVector& x, const BlockVector& y, int q) {
    if (x.size() != y.size()) throw DimensionError("vectors have different lengths");
    std::vector<Symbol> d(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        d[i] = static_cast<Symbol>((x[i] + static_cast<Symbol>(q) - y[i]) % static_cast<Symbol>(q));
    return BlockVector(std::move(d));
}

inline BlockVector add_mod(const BlockVector& x, const BlockVector& y, int q) {
    if (x.size() != y.size()) throw DimensionError("vectors have different lengths");
    std::vector<Symbol> d(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        d[i] = static_cast<Symbol>((x[i] + y[i]) % static_cast<Symbol>(q));
    return BlockVector(std::move(d));
}

/// Poset, label map and symbol weight of one (P,w,π) space.
struct BlockSpace {
    Poset poset;
    LabelMap labels;
    WeightModel weight;

    BlockSpace(Poset p, LabelMap pi, WeightModel w)
        : poset(std::move(p)), labels(std::move(pi)), weight(std::move(w)) {
        if (poset.size() != labels.blocks())
            throw DimensionError("poset has " + std::to_string(poset.size()) +
                                 " elements but label map has " +
                                 std::to_string(labels.blocks()) + " blocks");
    }

    int q() const { return weight.q(); }
    int n() const { return poset.size(); }
    int N() const { return labels.total_length(); }
    int max_total_weight() const { return n() * weight.max_weight(); }
};

inline void check_vector(const BlockSpace& s, const BlockVector& x) {
    if (static_cast<int>(x.size()) != s.N())
        throw DimensionError("vector length " + std::to_string(x.size()) + " != N = " +
                             std::to_string(s.N()));
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] >= static_cast<Symbol>(s.q()))
            throw BoundsError("symbol " + std::to_string(x[i]) + " outside Z_" + std::to_string(s.q()));
}

/// Indices of nonzero blocks.
inline Mask pi_support(const LabelMap& pi, const BlockVector& x) {
    if (static_cast<int>(x.size()) != pi.total_length())
        throw DimensionError("vector length does not match label map");
    Mask m = 0;
    for (int i = 0; i < pi.blocks(); ++i) {
        auto blk = x.block(pi, i);
        if (std::any_of(blk.begin(), blk.end(), [](Symbol s) { return s != 0; })) m |= bit(i);
    }
    return m;
}

/// Largest symbol weight in a block.
inline int block_weight(const WeightModel& w, std::span<const Symbol> block) {
    int m = 0;
    for (Symbol s : block) m = std::max(m, w(s));
    return m;
}

/// Sum of block weights over the maximal elements of <supp_π(x)>, plus M_w for
/// each non-maximal element of that ideal.
inline int pwpi_weight(const BlockSpace& s, const BlockVector& x) {
    check_vector(s, x);
    const Ideal I = ideal_closure(s.poset, pi_support(s.labels, x));
    int total = s.weight.max_weight() * popcount(I.non_maximals());
    for (int i : elements_of(I.maximals)) total += block_weight(s.weight, x.block(s.labels, i));
    return total;
}

inline int pwpi_distance(const BlockSpace& s, const BlockVector& x, const BlockVector& y) {
    check_vector(s, x);
    check_vector(s, y);
    return pwpi_weight(s, subtract_mod(x, y, s.q()));
}

/// |<supp_π(x)>|, the (P,π) weight.
inline int ppi_weight(const BlockSpace& s, const BlockVector& x) {
    check_vector(s, x);
    return ideal_closure(s.poset, pi_support(s.labels, x)).size();
}

/// Evaluates the (P,w,π) weight from a support mask and per-block weights,
/// memoizing the ideal structure of each support for small n. Used by the hot
/// loops of exhaustive sweeps; must agree with pwpi_weight.
class SupportWeigher {
public:
    explicit SupportWeigher(const BlockSpace& s) : space_(&s) {
        const int n = s.n();
        if (n <= kMemoBits) {
            const std::size_t size = std::size_t{1} << n;
            max_of_.resize(size);
            nonmax_.resize(size);
            for (Mask m = 0; m < size; ++m) {
                const Ideal I = ideal_closure(s.poset, m);
                max_of_[m] = I.maximals;
                nonmax_[m] = static_cast<std::uint8_t>(popcount(I.non_maximals()));
            }
        }
    }

    int operator()(Mask support, std::span<const int> block_weights) const {
        Mask maxes;
        int nonmax;
        if (!max_of_.empty()) {
            maxes = max_of_[support];
            nonmax = nonmax_[support];
        } else {
            const Ideal I = ideal_closure(space_->poset, support);
            maxes = I.maximals;
            nonmax = popcount(I.non_maximals());
        }
        int total = nonmax * space_->weight.max_weight();
        while (maxes != 0) {
            total += block_weights[static_cast<std::size_t>(std::countr_zero(maxes))];
            maxes &= maxes - 1;
        }
        return total;
    }

    int weigh(const BlockVector& x) const {
        const auto& pi = space_->labels;
        std::vector<int> bw(static_cast<std::size_t>(pi.blocks()));
        Mask supp = 0;
        for (int i = 0; i < pi.blocks(); ++i) {
            bw[i] = block_weight(space_->weight, x.block(pi, i));
            if (bw[i] > 0) supp |= bit(i);
        }
        return (*this)(supp, bw);
    }

private:
    static constexpr int kMemoBits = 16;
    const BlockSpace* space_;
    std::vector<Mask> max_of_;
    std::vector<std::uint8_t> nonmax_;
};

}  // namespace posetblock
