#pragma once

// Odometer walk over Z_q^N with block weights maintained incrementally.

#include <cstdint>
#include <vector>

#include "bigint.hpp"
#include "block_space.hpp"
#include "caps.hpp"
#include "errors.hpp"
#include "parallel.hpp"

namespace posetblock {

/// Vector number `index` has its last coordinate as the fastest digit.
class SpaceWalker {
public:
    SpaceWalker(const BlockSpace& s, std::uint64_t index) : s_(&s), x_(static_cast<std::size_t>(s.N()), 0) {
        const auto q = static_cast<std::uint64_t>(s.q());
        for (int j = s.N() - 1; j >= 0; --j) {
            x_[j] = static_cast<Symbol>(index % q);
            index /= q;
        }
        block_of_.resize(x_.size());
        for (int i = 0; i < s.n(); ++i)
            for (int c = 0; c < s.labels.length(i); ++c) block_of_[s.labels.offset(i) + c] = i;
        bw_.assign(static_cast<std::size_t>(s.n()), 0);
        refresh_from(0);
    }

    /// Advances to the next vector. Every coordinate in [changed_from(), N)
    /// moved by +1 mod q.
    void step() {
        const int q = s_->q();
        int pos = static_cast<int>(x_.size()) - 1;
        while (pos >= 0 && x_[pos] == static_cast<Symbol>(q - 1)) {
            x_[pos] = 0;
            --pos;
        }
        if (pos < 0) {
            changed_from_ = 0;  // wrapped around to zero
        } else {
            ++x_[pos];
            changed_from_ = pos;
        }
        refresh_from(changed_from_);
    }

    const std::vector<Symbol>& vector() const { return x_; }
    const std::vector<int>& block_weights() const { return bw_; }
    Mask support() const { return support_; }
    int changed_from() const { return changed_from_; }

private:
    void refresh_from(int coord) {
        const auto& pi = s_->labels;
        for (int i = block_of_[coord]; i < pi.blocks(); ++i) {
            int m = 0;
            for (int c = pi.offset(i); c < pi.offset(i) + pi.length(i); ++c) m = std::max(m, s_->weight(x_[c]));
            bw_[i] = m;
            if (m > 0)
                support_ |= bit(i);
            else
                support_ &= ~bit(i);
        }
    }

    const BlockSpace* s_;
    std::vector<Symbol> x_;
    std::vector<int> block_of_;
    std::vector<int> bw_;
    Mask support_ = 0;
    int changed_from_ = 0;
};

/// q^N, or ExplosionError when it exceeds the space cap.
inline std::uint64_t checked_space_size(const BlockSpace& s, const Caps& caps) {
    const std::uint64_t size = pow_saturating(static_cast<std::uint64_t>(s.q()), static_cast<std::uint64_t>(s.N()));
    if (size > caps.max_space)
        throw ExplosionError("space has " + std::to_string(s.q()) + "^" + std::to_string(s.N()) +
                             " vectors, over the cap of " + std::to_string(caps.max_space));
    return size;
}

/// Runs `visit(chunk, walker)` on every vector, split into contiguous index
/// ranges across threads.
template <class Visit>
void walk_space(const BlockSpace& s, const Caps& caps, unsigned chunks, Visit&& visit) {
    const std::uint64_t total = checked_space_size(s, caps);
    parallel_chunks(total, chunks, [&](unsigned c, std::size_t begin, std::size_t end) {
        if (begin == end) return;
        SpaceWalker w(s, begin);
        for (std::size_t idx = begin;;) {
            visit(c, w);
            if (++idx == end) break;
            w.step();
        }
    });
}

}  // namespace posetblock
