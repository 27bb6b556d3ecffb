#pragma once

// Minimum distance, I-balls, perfectness, Singleton bound and duality for
// linear codes in a (P,w,π) space.

#include <algorithm>
#include <atomic>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "block_space.hpp"
#include "caps.hpp"
#include "distribution.hpp"
#include "errors.hpp"
#include "linear_code.hpp"
#include "parallel.hpp"
#include "poset.hpp"
#include "space_walk.hpp"

namespace posetblock {

inline void check_compatible(const LinearCode& C, const BlockSpace& s) {
    if (C.q() != s.q())
        throw DimensionError("code is over Z_" + std::to_string(C.q()) + " but the space is over Z_" +
                             std::to_string(s.q()));
    if (C.length() != s.N())
        throw DimensionError("code length " + std::to_string(C.length()) + " != N = " + std::to_string(s.N()));
}

/// Smallest e with q^e >= size.
inline int ceil_log_q(const BigInt& size, int q) {
    if (size < 1) throw BoundsError("ceil_log_q needs a positive size");
    int e = 0;
    BigInt p = 1;
    while (p < size) {
        p *= q;
        ++e;
    }
    return e;
}

struct MinDistance {
    int pwpi = 0;
    int ppi = 0;
};

inline MinDistance min_distance(const LinearCode& C, const BlockSpace& s, const Caps& caps = {}) {
    check_compatible(C, s);
    if (C.dimension() == 0) throw TrivialCodeError("minimum distance of the zero code is undefined");
    const auto words = C.codewords(caps);
    const SupportWeigher weigh(s);
    const unsigned chunks = resolve_threads(caps.threads);
    std::vector<MinDistance> best(chunks, {std::numeric_limits<int>::max(), std::numeric_limits<int>::max()});
    parallel_chunks(words.size(), chunks, [&](unsigned c, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            if (words[i].is_zero()) continue;
            best[c].pwpi = std::min(best[c].pwpi, weigh.weigh(words[i]));
            best[c].ppi = std::min(best[c].ppi, ideal_closure(s.poset, pi_support(s.labels, words[i])).size());
        }
    });
    MinDistance d = best[0];
    for (const auto& b : best) {
        d.pwpi = std::min(d.pwpi, b.pwpi);
        d.ppi = std::min(d.ppi, b.ppi);
    }
    return d;
}

/// x ∈ B_I(center) iff supp_π(center - x) ⊆ I.
inline bool i_ball_contains(const BlockSpace& s, Mask I, const BlockVector& center, const BlockVector& x) {
    check_vector(s, center);
    check_vector(s, x);
    return (pi_support(s.labels, subtract_mod(center, x, s.q())) & ~I) == 0;
}

/// |B_I(u)| = q^{Σ_{i∈I} k_i}
inline BigInt i_ball_size(const BlockSpace& s, Mask I) {
    return ipow(s.q(), static_cast<std::uint64_t>(s.labels.length_of(I)));
}

/// Number of codewords whose π-support lies inside `blocks`:
/// q^{k - rank(G restricted to the other coordinates)}.
inline BigInt codewords_supported_in(const LinearCode& C, const LabelMap& pi, Mask blocks) {
    const Mask outside = (bit(pi.blocks()) - 1) & ~blocks;
    const int rank = C.rank_on(coordinates_of(pi, outside));
    return ipow(C.q(), static_cast<std::uint64_t>(C.dimension() - rank));
}

/// Covering: Σ_{i∈I} k_i = N - k.  Packing: B_I(0) ∩ C = {0}.
inline bool is_I_perfect(const LinearCode& C, const BlockSpace& s, Mask I) {
    check_compatible(C, s);
    const bool covering = s.labels.length_of(I) == s.N() - C.dimension();
    const bool packing = codewords_supported_in(C, s.labels, I) == 1;
    return covering && packing;
}

struct CodeReport {
    std::optional<int> d_pwpi;  // empty for the zero code
    std::optional<int> d_ppi;
    int r_wtilde = 0;
    int singleton_lhs = 0;
    int singleton_rhs = 0;
    int ppi_lhs = 0;
    bool is_mds_pwpi = false;
    bool is_mds_ppi = false;
};

/// max over J ∈ I^card of Σ_{i∈J} k_i; 0 for card = 0.
inline int max_ideal_length(const IdealFamily& fam, const LabelMap& pi, int card) {
    int best = 0;
    for (const Ideal& I : fam.all)
        if (I.size() == card) best = std::max(best, pi.length_of(I.members));
    return best;
}

/// The zero code is treated as having infinite distance: r_wtilde = n, so it
/// meets the bound (lhs = N = rhs).
inline CodeReport singleton_report(const LinearCode& C, const BlockSpace& s, const Caps& caps = {}) {
    check_compatible(C, s);
    const IdealFamily fam = enumerate_ideals(s.poset, caps);
    CodeReport rep;
    rep.singleton_rhs = s.N() - ceil_log_q(C.size(), s.q());
    if (C.dimension() == 0) {
        rep.r_wtilde = s.n();
        rep.singleton_lhs = rep.ppi_lhs = s.N();
    } else {
        const MinDistance d = min_distance(C, s, caps);
        rep.d_pwpi = d.pwpi;
        rep.d_ppi = d.ppi;
        rep.r_wtilde = (d.pwpi - s.weight.min_weight()) / s.weight.max_weight();
        rep.singleton_lhs = max_ideal_length(fam, s.labels, rep.r_wtilde);
        rep.ppi_lhs = max_ideal_length(fam, s.labels, d.ppi - 1);
    }
    rep.is_mds_pwpi = rep.singleton_lhs == rep.singleton_rhs;
    rep.is_mds_ppi = rep.ppi_lhs == rep.singleton_rhs;
    return rep;
}

/// Exact census of the radius-r ball around 0 against the cosets of C.
/// Balls around codewords are pairwise disjoint iff no coset holds two ball
/// vectors, and they cover iff every coset holds one.
struct BallCensus {
    BigInt ball_size = 0;
    bool disjoint = true;
    bool covering = true;
};

inline BallCensus ball_coset_census(const LinearCode& C, const BlockSpace& s, int r, const Caps& caps = {}) {
    check_compatible(C, s);
    checked_space_size(s, caps);
    const int q = s.q();
    const int N = s.N();
    const Matrix H = C.parity_check();
    const int m = static_cast<int>(H.size());
    // suffix[j][i] = Σ_{c >= j} H[i][c] mod q
    std::vector<std::vector<int>> suffix(static_cast<std::size_t>(N) + 1, std::vector<int>(static_cast<std::size_t>(m), 0));
    for (int j = N - 1; j >= 0; --j)
        for (int i = 0; i < m; ++i) suffix[j][i] = (suffix[j + 1][i] + H[i][j]) % q;

    const std::uint64_t cosets = pow_saturating(q, m);
    std::vector<std::atomic<std::uint8_t>> hits(cosets);
    for (auto& h : hits) h.store(0, std::memory_order_relaxed);

    const SupportWeigher weigh(s);
    const unsigned chunks = resolve_threads(caps.threads);
    std::vector<std::vector<int>> syn(chunks);
    std::vector<std::uint64_t> in_ball(chunks, 0);
    walk_space(s, caps, chunks, [&](unsigned c, const SpaceWalker& w) {
        auto& sc = syn[c];
        if (sc.empty() && m > 0) {
            sc.assign(static_cast<std::size_t>(m), 0);
            const auto& x = w.vector();
            for (int i = 0; i < m; ++i) {
                long long acc = 0;
                for (int j = 0; j < N; ++j) acc += static_cast<long long>(H[i][j]) * x[j];
                sc[i] = static_cast<int>(acc % q);
            }
        } else {
            const auto& add = suffix[static_cast<std::size_t>(w.changed_from())];
            for (int i = 0; i < m; ++i) sc[i] = (sc[i] + add[i]) % q;
        }
        if (weigh(w.support(), w.block_weights()) > r) return;
        ++in_ball[c];
        std::uint64_t idx = 0;
        for (int i = m - 1; i >= 0; --i) idx = idx * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(sc[i]);
        auto& h = hits[idx];
        if (h.load(std::memory_order_relaxed) < 2) h.fetch_add(1, std::memory_order_relaxed);
    });

    BallCensus out;
    for (auto v : in_ball) out.ball_size += v;
    for (const auto& h : hits) {
        const auto v = h.load(std::memory_order_relaxed);
        if (v >= 2) out.disjoint = false;
        if (v == 0) out.covering = false;
    }
    return out;
}

enum class Verdict { Yes, No, Unknown };

/// Disjointness from the minimum distance alone: d > 2r suffices when the
/// distance is a metric, and d <= r puts a nonzero codeword in the ball at 0.
inline Verdict disjointness_from_distance(int d, int r, const WeightModel& w) {
    if (d <= r) return Verdict::No;
    if (d > 2 * r && w.warnings().empty()) return Verdict::Yes;
    return Verdict::Unknown;
}

namespace detail {

/// If radius-tM_w balls are disjoint, no nonzero codeword lies in B_{I∪J}
/// for I, J ∈ I^t. Throws InternalConsistencyError on a violation.
inline void check_union_ball_consequence(const LinearCode& C, const BlockSpace& s, int t, const Caps& caps) {
    if (t > s.n()) return;
    const IdealFamily fam = enumerate_ideals(s.poset, caps);
    const auto level = fam.of_size(t);
    if (level.size() * level.size() > caps.max_ideals) return;
    for (std::size_t a = 0; a < level.size(); ++a)
        for (std::size_t b = a; b < level.size(); ++b)
            if (codewords_supported_in(C, s.labels, level[a].members | level[b].members) != 1)
                throw InternalConsistencyError("radius " + std::to_string(t * s.weight.max_weight()) +
                                               " balls are disjoint but a codeword lies in a union of two "
                                               "ideal balls of size " + std::to_string(t));
}

}  // namespace detail

/// Radius-r balls around codewords pairwise disjoint. Exact when q^N is under
/// the space cap (and then cross-checked against the distance criterion);
/// otherwise decided by the distance criterion or ExplosionError.
inline bool is_r_error_correcting(const LinearCode& C, const BlockSpace& s, int r, const Caps& caps = {}) {
    check_compatible(C, s);
    if (r < 0) throw BoundsError("radius must be non-negative");
    if (C.dimension() == 0) return true;
    const Verdict fast = disjointness_from_distance(min_distance(C, s, caps).pwpi, r, s.weight);
    const bool under_cap = pow_saturating(s.q(), s.N()) <= caps.max_space;
    if (!under_cap) {
        if (fast == Verdict::Unknown)
            throw ExplosionError("distance criterion is inconclusive and the space is over the cap");
        return fast == Verdict::Yes;
    }
    const bool exact = ball_coset_census(C, s, r, caps).disjoint;
    if (fast != Verdict::Unknown && (fast == Verdict::Yes) != exact)
        throw InternalConsistencyError("distance criterion and exhaustive census disagree at radius " +
                                       std::to_string(r));
    if (exact && r % s.weight.max_weight() == 0)
        detail::check_union_ball_consequence(C, s, r / s.weight.max_weight(), caps);
    return exact;
}

/// Radius-r balls around codewords partition F_q^N.
inline bool is_r_perfect(const LinearCode& C, const BlockSpace& s, int r, const Caps& caps = {}) {
    check_compatible(C, s);
    if (r < 0) throw BoundsError("radius must be non-negative");
    const DistributionTable table = compute_distribution(s, Method::Auto, caps);
    const BigInt volume = ball_volume(table, std::min(r, table.max_weight()));
    const bool volume_ok = C.size() * volume == ipow(s.q(), static_cast<std::uint64_t>(s.N()));
    if (pow_saturating(s.q(), s.N()) > caps.max_space) {
        if (!volume_ok) return false;
        return is_r_error_correcting(C, s, r, caps);
    }
    const BallCensus census = ball_coset_census(C, s, r, caps);
    if (census.ball_size != volume)
        throw InternalConsistencyError("ball census and distribution table disagree on |B_" +
                                       std::to_string(r) + "|");
    const bool perfect = census.disjoint && census.covering;
    if (perfect != (census.disjoint && volume_ok))
        throw InternalConsistencyError("coset coverage and volume count disagree at radius " + std::to_string(r));
    if (C.dimension() > 0) {
        const Verdict fast = disjointness_from_distance(min_distance(C, s, caps).pwpi, r, s.weight);
        if (fast != Verdict::Unknown && (fast == Verdict::Yes) != census.disjoint)
            throw InternalConsistencyError("distance criterion and exhaustive census disagree at radius " +
                                           std::to_string(r));
    }
    return perfect;
}

inline LinearCode dual_code(const LinearCode& C) {
    return LinearCode(C.q(), C.length(), C.parity_check());
}

struct DualityCheck {
    Mask ideal = 0;          // the unique ideal of size n - k/s
    bool mds = false;        // C is MDS in (P,w,π)
    bool i_perfect = false;  // C is I-perfect
    bool dual_complement_perfect = false;  // C⊥ is I^c-perfect
    bool dual_mds = false;   // C⊥ is MDS in the dual poset

    bool all_agree() const {
        return mds == i_perfect && i_perfect == dual_complement_perfect && dual_complement_perfect == dual_mds;
    }
};

/// Evaluates the four statements that are equivalent when blocks have equal
/// length s, s | k and P has a single ideal of size n - k/s.
inline DualityCheck verify_duality(const LinearCode& C, const BlockSpace& s, const Caps& caps = {}) {
    check_compatible(C, s);
    const int len = s.labels.uniform_length();
    if (len == 0) throw HypothesisError("duality check needs blocks of equal length");
    if (C.dimension() % len != 0)
        throw HypothesisError("block length " + std::to_string(len) + " does not divide k = " +
                              std::to_string(C.dimension()));
    const int t = s.n() - C.dimension() / len;
    const auto level = enumerate_ideals(s.poset, caps).of_size(t);
    if (level.size() != 1)
        throw HypothesisError("poset has " + std::to_string(level.size()) + " ideals of size " +
                              std::to_string(t) + ", need exactly one");
    const BlockSpace dual_space(dual_poset(s.poset), s.labels, s.weight);
    const LinearCode D = dual_code(C);
    DualityCheck out;
    out.ideal = level.front().members;
    out.mds = singleton_report(C, s, caps).is_mds_pwpi;
    out.i_perfect = is_I_perfect(C, s, out.ideal);
    out.dual_complement_perfect = is_I_perfect(D, dual_space, s.poset.ground() & ~out.ideal);
    out.dual_mds = singleton_report(D, dual_space, caps).is_mds_pwpi;
    return out;
}

/// Span of the unit vectors at every coordinate of the blocks outside I.
inline LinearCode construct_I_perfect(const LabelMap& pi, Mask I, int q) {
    const Mask all = bit(pi.blocks()) - 1;
    if ((I & ~all) != 0) throw BoundsError("ideal mentions blocks outside [n]");
    Matrix G;
    for (int c : coordinates_of(pi, all & ~I)) {
        std::vector<int> row(static_cast<std::size_t>(pi.total_length()), 0);
        row[c] = 1;
        G.push_back(std::move(row));
    }
    return LinearCode(q, pi.total_length(), G);
}

/// Random I-perfect code: the generator restricted to the coordinates outside
/// I is a random invertible matrix, the rest is uniform.
template <class Rng>
LinearCode random_I_perfect_code(const BlockSpace& s, Mask I, Rng& rng) {
    const int q = s.q();
    const auto outside = coordinates_of(s.labels, s.poset.ground() & ~I);
    const int k = static_cast<int>(outside.size());
    std::uniform_int_distribution<int> sym(0, q - 1);
    Matrix M;
    do {
        M.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
        for (auto& row : M)
            for (auto& v : row) v = sym(rng);
    } while (k > 0 && rank_mod(M, q, k) != k);
    Matrix G(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(s.N())));
    for (int i = 0; i < k; ++i) {
        for (auto& v : G[i]) v = sym(rng);
        for (int j = 0; j < k; ++j) G[i][outside[j]] = M[i][j];
    }
    return LinearCode(q, s.N(), G);
}

/// |{c ∈ C : w(c) = r}| by enumerating codewords.
inline std::vector<BigInt> code_weight_distribution(const LinearCode& C, const BlockSpace& s, const Caps& caps = {}) {
    check_compatible(C, s);
    std::vector<BigInt> counts(static_cast<std::size_t>(s.max_total_weight()) + 1, 0);
    const SupportWeigher weigh(s);
    for (const auto& c : C.codewords(caps)) counts[static_cast<std::size_t>(weigh.weigh(c))] += 1;
    return counts;
}

struct MdsChainDistribution {
    int d = 0;
    std::vector<BigInt> counts;       // |A_r(C)|
    std::vector<BigInt> ball_counts;  // |B(0,r) ∩ C|
};

/// Codeword weight distribution of an MDS code on a chain with equal blocks
/// of length s, s | k: d = (n - k/s)M_w + m_w and
/// |A_r(C)| = |D_ℓ^s| q^{k + s(t - n)} for r = tM_w + ℓ >= d.
inline MdsChainDistribution mds_chain_distribution(const LinearCode& C, const BlockSpace& s, const Caps& caps = {}) {
    check_compatible(C, s);
    if (!classify(s.poset).is_chain) throw PreconditionError("poset is not a chain");
    const int len = s.labels.uniform_length();
    if (len == 0) throw PreconditionError("blocks must have equal length");
    const int k = C.dimension();
    if (k % len != 0)
        throw PreconditionError("block length " + std::to_string(len) + " does not divide k = " + std::to_string(k));
    if (!singleton_report(C, s, caps).is_mds_pwpi) throw PreconditionError("code is not MDS");

    const int n = s.n();
    const int M_w = s.weight.max_weight();
    const int t0 = n - k / len;
    const int q = s.q();
    MdsChainDistribution out;
    out.d = t0 * M_w + s.weight.min_weight();
    out.counts.assign(static_cast<std::size_t>(n * M_w) + 1, 0);
    out.ball_counts.assign(out.counts.size(), 0);
    out.counts[0] = 1;
    for (int r = out.d; r <= n * M_w; ++r) {
        const auto [t, l] = canonical_split(r, M_w);
        out.counts[static_cast<std::size_t>(r)] =
            block_class_size(s.weight, l, len) * ipow(q, static_cast<std::uint64_t>(k + len * (t - n)));
    }
    for (int r = 0; r <= n * M_w; ++r) {
        if (r <= M_w * t0) {
            out.ball_counts[static_cast<std::size_t>(r)] = 1;
            continue;
        }
        const auto [t, l] = canonical_split(r, M_w);
        if (l == M_w) {
            out.ball_counts[static_cast<std::size_t>(r)] = ipow(q, static_cast<std::uint64_t>(k - len * (n - t - 1)));
        } else {
            BigInt f = 1;
            for (int i = 1; i <= l; ++i) f += block_class_size(s.weight, i, len);
            out.ball_counts[static_cast<std::size_t>(r)] = f * ipow(q, static_cast<std::uint64_t>(k - len * (n - t)));
        }
    }
    return out;
}

}  // namespace posetblock
