#pragma once

// Exhaustive ground truth over Z_q^N. Nothing here consults the closed-form
// distribution code; every count comes from weighing actual vectors.

#include <chrono>
#include <cstdint>
#include <functional>
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
#include "space_walk.hpp"

namespace posetblock {

struct OracleResult {
    DistributionTable table;  // method "oracle"
    BigInt total = 0;
    std::chrono::milliseconds elapsed{0};
    std::string fingerprint;
};

inline std::string instance_fingerprint(const BlockSpace& s) {
    std::string f = "q=" + std::to_string(s.q()) + ";n=" + std::to_string(s.n()) + ";rel=";
    const auto rel = s.poset.relations();
    std::size_t h = 0;
    for (auto [a, b] : rel) h = h * 1000003U + static_cast<std::size_t>(a * 131 + b);
    f += std::to_string(h) + ";pi=";
    for (int k : s.labels.lengths()) f += std::to_string(k) + ",";
    std::size_t hw = 0;
    for (int v : s.weight.table()) hw = hw * 31U + static_cast<std::size_t>(v);
    f += ";w=" + std::to_string(hw);
    return f;
}

/// Histogram of (P,w,π)-weights over every vector in odometer order.
inline OracleResult oracle_distribution(const BlockSpace& s, const Caps& caps = {}) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t total = checked_space_size(s, caps);
    const unsigned chunks = resolve_threads(caps.threads);
    const std::size_t bins = static_cast<std::size_t>(s.max_total_weight()) + 1;
    std::vector<std::vector<std::uint64_t>> hist(chunks, std::vector<std::uint64_t>(bins, 0));
    const SupportWeigher weigh(s);
    walk_space(s, caps, chunks, [&](unsigned c, const SpaceWalker& w) {
        ++hist[c][static_cast<std::size_t>(weigh(w.support(), w.block_weights()))];
    });

    OracleResult out;
    out.table.q = s.q();
    out.table.N = s.N();
    out.table.method = "oracle";
    out.table.poset_class = poset_class_name(classify(s.poset));
    out.table.counts.assign(bins, 0);
    for (const auto& h : hist)
        for (std::size_t r = 0; r < bins; ++r) out.table.counts[r] += h[r];
    out.total = total;
    out.fingerprint = instance_fingerprint(s);
    out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return out;
}

/// Ball shape for oracle_perfectness: either B_I or the radius-r metric ball.
struct BallMode {
    bool use_ideal = false;
    Mask ideal = 0;
    int radius = 0;

    static BallMode ideal_ball(Mask I) { return {true, I, 0}; }
    static BallMode metric_ball(int r) { return {false, 0, r}; }
};

struct Perfectness {
    bool disjoint = true;
    bool covering = true;
};

/// For every vector x, counts the codewords c whose ball contains x.
/// Disjoint iff no count exceeds 1; covering iff none is 0.
inline Perfectness oracle_perfectness(const LinearCode& C, const BlockSpace& s, const BallMode& mode,
                                      const Caps& caps = {}) {
    if (C.q() != s.q() || C.length() != s.N()) throw DimensionError("code does not live in this space");
    const std::uint64_t space = checked_space_size(s, caps);
    const auto words = C.codewords(caps);
    if (words.size() > 0 && space > UINT64_MAX / words.size())
        throw ExplosionError("space times code size overflows");
    if (space * words.size() > caps.max_space * 100)
        throw ExplosionError("space times code size exceeds 100 times the space cap");

    const int q = s.q();
    const auto& pi = s.labels;
    const SupportWeigher weigh(s);
    const unsigned chunks = resolve_threads(caps.threads);
    std::vector<Perfectness> part(chunks);
    walk_space(s, caps, chunks, [&](unsigned c, const SpaceWalker& w) {
        const auto& x = w.vector();
        std::vector<int> bw(static_cast<std::size_t>(pi.blocks()));
        int hits = 0;
        for (const auto& cw : words) {
            Mask supp = 0;
            for (int i = 0; i < pi.blocks(); ++i) {
                int m = 0;
                for (int j = pi.offset(i); j < pi.offset(i) + pi.length(i); ++j) {
                    const auto d = static_cast<Symbol>((x[j] + static_cast<Symbol>(q) - cw[static_cast<std::size_t>(j)]) % static_cast<Symbol>(q));
                    m = std::max(m, s.weight(d));
                }
                bw[i] = m;
                if (m > 0) supp |= bit(i);
            }
            const bool inside = mode.use_ideal ? (supp & ~mode.ideal) == 0 : weigh(supp, bw) <= mode.radius;
            if (inside) ++hits;
        }
        if (hits > 1) part[c].disjoint = false;
        if (hits == 0) part[c].covering = false;
    });
    Perfectness out;
    for (const auto& p : part) {
        out.disjoint = out.disjoint && p.disjoint;
        out.covering = out.covering && p.covering;
    }
    return out;
}

struct MetricViolation {
    std::string axiom;  // "identity", "symmetry" or "triangle"
    BlockVector x, y, z;
    std::string detail;
};

struct MetricReport {
    std::uint64_t samples = 0;
    std::uint64_t violation_count = 0;
    std::vector<MetricViolation> violations;  // first few witnesses
};

/// Seeded random triples checked against identity, symmetry and the triangle
/// inequality of the (P,w,π) distance. At most `max_witnesses` are kept.
inline MetricReport oracle_metric_axioms(const BlockSpace& s, std::uint64_t samples, std::uint64_t seed,
                                         std::size_t max_witnesses = 16) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> sym(0, s.q() - 1);
    auto draw = [&] {
        std::vector<Symbol> v(static_cast<std::size_t>(s.N()));
        for (auto& e : v) e = static_cast<Symbol>(sym(rng));
        return BlockVector(std::move(v));
    };
    MetricReport rep;
    rep.samples = samples;
    auto record = [&](const char* axiom, const BlockVector& x, const BlockVector& y, const BlockVector& z,
                      std::string detail) {
        ++rep.violation_count;
        if (rep.violations.size() < max_witnesses) rep.violations.push_back({axiom, x, y, z, std::move(detail)});
    };
    for (std::uint64_t i = 0; i < samples; ++i) {
        const BlockVector x = draw(), y = draw(), z = draw();
        const int dxy = pwpi_distance(s, x, y);
        const int dyx = pwpi_distance(s, y, x);
        const int dyz = pwpi_distance(s, y, z);
        const int dxz = pwpi_distance(s, x, z);
        if (pwpi_distance(s, x, x) != 0 || ((dxy == 0) != (x == y)))
            record("identity", x, y, z, "d(x,y) = " + std::to_string(dxy));
        if (dxy != dyx)
            record("symmetry", x, y, z, "d(x,y) = " + std::to_string(dxy) + ", d(y,x) = " + std::to_string(dyx));
        if (dxz > dxy + dyz)
            record("triangle", x, y, z,
                   "d(x,z) = " + std::to_string(dxz) + " > " + std::to_string(dxy) + " + " + std::to_string(dyz));
    }
    return rep;
}

}  // namespace posetblock
