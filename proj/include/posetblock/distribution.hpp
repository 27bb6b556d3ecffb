#pragma once

// Weight distribution |A_r| of the (P,w,π) space and ball volumes.
//
// Every routine returns the same table on instances where its precondition
// holds; the general sum is the reference and the others are fast paths.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "block_space.hpp"
#include "caps.hpp"
#include "errors.hpp"
#include "parallel.hpp"
#include "partitions.hpp"
#include "poset.hpp"
#include "weight_model.hpp"

namespace posetblock {

enum class Method { Auto, General, EqualBlock, Hierarchical, Chain, Oracle };
enum class Specialization { PW, PPi, Pi, P };

inline std::string method_name(Method m) {
    switch (m) {
        case Method::Auto: return "auto";
        case Method::General: return "general";
        case Method::EqualBlock: return "equal-block";
        case Method::Hierarchical: return "hierarchical";
        case Method::Chain: return "chain";
        case Method::Oracle: return "oracle";
    }
    return "unknown";
}

inline std::string specialization_name(Specialization s) {
    switch (s) {
        case Specialization::PW: return "specialized-pw";
        case Specialization::PPi: return "specialized-ppi";
        case Specialization::Pi: return "specialized-pi";
        case Specialization::P: return "specialized-p";
    }
    return "unknown";
}

struct DistributionTable {
    int q = 0;
    int N = 0;
    std::vector<BigInt> counts;  // counts[r], r = 0..n*M_w
    std::string method;
    std::string poset_class;

    int max_weight() const { return static_cast<int>(counts.size()) - 1; }

    BigInt total() const {
        BigInt s = 0;
        for (const auto& c : counts) s += c;
        return s;
    }

    /// Counts only; metadata is ignored.
    bool same_counts(const DistributionTable& o) const { return counts == o.counts; }
};

/// r = t*M_w + a with a in [1, M_w]; the boundary r = t*M_w maps to (t-1, M_w).
inline std::pair<int, int> canonical_split(int r, int M_w) {
    if (r < 1) throw BoundsError("canonical_split needs r >= 1");
    const int t = (r + M_w - 1) / M_w - 1;
    return {t, r - t * M_w};
}

namespace detail {

inline DistributionTable empty_table(const BlockSpace& s, std::string method) {
    DistributionTable t;
    t.q = s.q();
    t.N = s.N();
    t.counts.assign(static_cast<std::size_t>(s.max_total_weight()) + 1, 0);
    t.counts[0] = 1;
    t.method = std::move(method);
    t.poset_class = poset_class_name(classify(s.poset));
    return t;
}

/// Σ_s over distinct part values of |D_{t_s}^k|^{r_s} * C(j - (r_1+..+r_{s-1}), r_s):
/// the arrangement sum for equal block length k without listing arrangements.
inline BigInt equal_block_term(const BoundedPartition& b, const BlockClassTable& D, int k) {
    const auto mult = multiplicities(b);
    BigInt term = 1;
    int used = 0;
    for (std::size_t s = 0; s < mult.values.size(); ++s) {
        term *= ipow(D(mult.values[s], k), static_cast<std::uint64_t>(mult.counts[s]));
        term *= binomial(b.part_count() - used, mult.counts[s]);
        used += mult.counts[s];
    }
    return term;
}

inline int max_block_length(const LabelMap& pi) {
    return *std::max_element(pi.lengths().begin(), pi.lengths().end());
}

}  // namespace detail

/// Sum over ideals I (with j maximal and i non-maximal elements), over bounded
/// partitions of r - i*M_w into exactly j parts, and over their arrangements of
/// Π |D_{b}^{k}| at the maximal blocks times q^{Σ k} over non-maximal blocks.
/// Maximal elements are matched to arrangement positions in ascending label order.
inline DistributionTable distribution_general(const BlockSpace& s, const Caps& caps = {}) {
    const IdealFamily fam = enumerate_ideals(s.poset, caps);
    const int M_w = s.weight.max_weight();
    const int n = s.n();
    const BlockClassTable D(s.weight, detail::max_block_length(s.labels));

    // arrangements[j][target] = all arrangements of all partitions of target into j parts
    std::vector<std::vector<std::vector<std::vector<int>>>> arrangements(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) {
        if (fam.by_card_and_max.end() ==
            std::find_if(fam.by_card_and_max.begin(), fam.by_card_and_max.end(),
                         [j](const auto& kv) { return kv.first.second == j; }))
            continue;
        arrangements[j].resize(static_cast<std::size_t>(j * M_w) + 1);
        for (int target = j; target <= j * M_w; ++target)
            for (const auto& b : partitions_with_parts(target, j, M_w))
                for (auto& a : enumerate_arrangements(b, caps))
                    arrangements[j][target].push_back(std::move(a));
    }

    const std::size_t ideal_count = fam.all.size();
    const unsigned chunks = resolve_threads(caps.threads);
    std::vector<std::vector<BigInt>> partial(chunks, std::vector<BigInt>(static_cast<std::size_t>(n * M_w) + 1));
    parallel_chunks(ideal_count, chunks, [&](unsigned c, std::size_t begin, std::size_t end) {
        auto& acc = partial[c];
        for (std::size_t idx = begin; idx < end; ++idx) {
            const Ideal& I = fam.all[idx];
            if (I.members == 0) continue;
            const std::vector<int> maxes = elements_of(I.maximals);
            const int j = static_cast<int>(maxes.size());
            const int i = I.size() - j;
            const BigInt free_part = ipow(s.q(), static_cast<std::uint64_t>(s.labels.length_of(I.non_maximals())));
            for (int target = j; target <= j * M_w; ++target) {
                const int r = target + i * M_w;
                BigInt sum = 0;
                for (const auto& arr : arrangements[j][target]) {
                    BigInt prod = 1;
                    for (int p = 0; p < j; ++p) prod *= D(arr[p], s.labels.length(maxes[p]));
                    sum += prod;
                }
                acc[r] += sum * free_part;
            }
        }
    });

    DistributionTable t = detail::empty_table(s, method_name(Method::General));
    for (const auto& acc : partial)
        for (std::size_t r = 1; r < acc.size(); ++r) t.counts[r] += acc[r];
    return t;
}

/// Equal block length k: each (ideal, partition) pair contributes
/// q^{k i} Π_s |D_{t_s}^k|^{r_s} C(j - (r_1+..+r_{s-1}), r_s); ideals enter only
/// through |I_j^{i+j}|.
inline DistributionTable distribution_equal_blocks(const BlockSpace& s, const Caps& caps = {}) {
    const int k = s.labels.uniform_length();
    if (k == 0) throw PreconditionError("equal-block method needs all block lengths equal");
    const IdealFamily fam = enumerate_ideals(s.poset, caps);
    const int M_w = s.weight.max_weight();
    const BlockClassTable D(s.weight, k);

    DistributionTable t = detail::empty_table(s, method_name(Method::EqualBlock));
    for (const auto& [key, ideals] : fam.by_card_and_max) {
        const auto [card, j] = key;
        if (card == 0) continue;
        const int i = card - j;
        const BigInt free_part = ipow(s.q(), static_cast<std::uint64_t>(k * i));
        for (int target = j; target <= j * M_w; ++target) {
            BigInt sum = 0;
            for (const auto& b : partitions_with_parts(target, j, M_w))
                sum += detail::equal_block_term(b, D, k);
            t.counts[static_cast<std::size_t>(target + i * M_w)] += sum * free_part * ideals.size();
        }
    }
    return t;
}

/// Hierarchical posets: an ideal is all levels below some level L plus a
/// nonempty subset S of level L, whose elements are exactly its maximals.
/// Equal blocks use |I_l^{t+l}| = C(n_L, l); otherwise the subsets of each
/// level are walked and their block polynomials multiplied.
inline DistributionTable distribution_hierarchical(const BlockSpace& s, const Caps& caps = {}) {
    const Classification cls = classify(s.poset);
    if (!cls.is_hierarchical) throw PreconditionError("poset is not hierarchical");
    const int M_w = s.weight.max_weight();
    const int k_eq = s.labels.uniform_length();
    const BlockClassTable D(s.weight, detail::max_block_length(s.labels));

    DistributionTable t = detail::empty_table(s, method_name(Method::Hierarchical));
    int below_count = 0;
    Mask below = 0;
    for (Mask level : cls.levels.levels) {
        const std::vector<int> elems = elements_of(level);
        const int nl = static_cast<int>(elems.size());
        const int offset = below_count * M_w;
        const BigInt free_part = ipow(s.q(), static_cast<std::uint64_t>(s.labels.length_of(below)));
        if (k_eq != 0) {
            for (int l = 1; l <= nl; ++l) {
                const BigInt ways = binomial(nl, l);
                for (int target = l; target <= l * M_w; ++target) {
                    BigInt sum = 0;
                    for (const auto& b : partitions_with_parts(target, l, M_w))
                        sum += detail::equal_block_term(b, D, k_eq);
                    t.counts[static_cast<std::size_t>(offset + target)] += ways * sum * free_part;
                }
            }
        } else {
            if (nl >= 63 || (std::size_t{1} << nl) > caps.max_ideals)
                throw ExplosionError("hierarchical level too wide to enumerate its subsets");
            for (Mask sub = 1; sub < (Mask{1} << nl); ++sub) {
                // poly[x] = number of block assignments on S with weight sum x
                std::vector<BigInt> poly{1};
                for (int idx : elements_of(sub)) {
                    const int k = s.labels.length(elems[idx]);
                    std::vector<BigInt> next(poly.size() + static_cast<std::size_t>(M_w));
                    for (std::size_t x = 0; x < poly.size(); ++x) {
                        if (poly[x] == 0) continue;
                        for (int b = 1; b <= M_w; ++b) next[x + b] += poly[x] * D(b, k);
                    }
                    poly = std::move(next);
                }
                for (std::size_t x = 1; x < poly.size(); ++x)
                    if (poly[x] != 0) t.counts[offset + x] += poly[x] * free_part;
            }
        }
        below |= level;
        below_count += nl;
    }
    return t;
}

/// Chains: weight t*M_w + a arises exactly when the support ideal is the
/// bottom t+1 elements and the top block has weight a.
inline DistributionTable distribution_chain(const BlockSpace& s) {
    const Classification cls = classify(s.poset);
    if (!cls.is_chain) throw PreconditionError("poset is not a chain");
    const int M_w = s.weight.max_weight();
    std::vector<int> by_height;  // element at height h+1
    for (Mask level : cls.levels.levels) by_height.push_back(elements_of(level).front());

    DistributionTable t = detail::empty_table(s, method_name(Method::Chain));
    int below_len = 0;
    for (int tt = 0; tt < s.n(); ++tt) {
        const int k_next = s.labels.length(by_height[tt]);
        const BigInt free_part = ipow(s.q(), static_cast<std::uint64_t>(below_len));
        for (int a = 1; a <= M_w; ++a)
            t.counts[static_cast<std::size_t>(tt * M_w + a)] = free_part * block_class_size(s.weight, a, k_next);
        below_len += k_next;
    }
    return t;
}

/// Closed forms of the four classical specializations:
///  PW  (all k_i = 1):  Σ_I Σ_b |D_{b_1}|..|D_{b_j}| q^i |ARG[b]|
///  PPi (Hamming):      Σ_{I ∈ I^r} Π_{max}(q^{k}-1) q^{Σ_{non-max} k}
///  Pi  (Hamming, antichain): e_r(q^{k_1}-1, .., q^{k_n}-1)
///  P   (Hamming, k_i = 1):   Σ_j |I_j^r| (q-1)^j q^{r-j}
inline DistributionTable distribution_specialized(Specialization kind, const BlockSpace& s,
                                                  const Caps& caps = {}) {
    const int q = s.q();
    const bool unit_blocks = s.labels.uniform_length() == 1;
    const bool hamming = s.weight.is_hamming();
    const Classification cls = classify(s.poset);
    DistributionTable t = detail::empty_table(s, specialization_name(kind));

    switch (kind) {
        case Specialization::PW: {
            if (!unit_blocks) throw PreconditionError("(P,w) specialization needs k_i = 1");
            const IdealFamily fam = enumerate_ideals(s.poset, caps);
            const int M_w = s.weight.max_weight();
            for (const auto& [key, ideals] : fam.by_card_and_max) {
                const auto [card, j] = key;
                if (card == 0) continue;
                const int i = card - j;
                for (int target = j; target <= j * M_w; ++target) {
                    BigInt sum = 0;
                    for (const auto& b : partitions_with_parts(target, j, M_w)) {
                        BigInt prod = arrangement_count(b);
                        for (int part : b.parts) prod *= s.weight.class_size(part);
                        sum += prod;
                    }
                    t.counts[static_cast<std::size_t>(target + i * M_w)] +=
                        sum * ipow(q, static_cast<std::uint64_t>(i)) * ideals.size();
                }
            }
            break;
        }
        case Specialization::PPi: {
            if (!hamming) throw PreconditionError("(P,π) specialization needs the Hamming weight");
            const IdealFamily fam = enumerate_ideals(s.poset, caps);
            for (const Ideal& I : fam.all) {
                if (I.members == 0) continue;
                BigInt term = ipow(q, static_cast<std::uint64_t>(s.labels.length_of(I.non_maximals())));
                for (int m : elements_of(I.maximals))
                    term *= ipow(q, static_cast<std::uint64_t>(s.labels.length(m))) - 1;
                t.counts[static_cast<std::size_t>(I.size())] += term;
            }
            break;
        }
        case Specialization::Pi: {
            if (!hamming || !cls.is_antichain)
                throw PreconditionError("π specialization needs the Hamming weight on an antichain");
            // elementary symmetric polynomials by the usual DP
            std::vector<BigInt> e(static_cast<std::size_t>(s.n()) + 1);
            e[0] = 1;
            for (int i = 0; i < s.n(); ++i) {
                const BigInt v = ipow(q, static_cast<std::uint64_t>(s.labels.length(i))) - 1;
                for (int r = i + 1; r >= 1; --r) e[r] += e[r - 1] * v;
            }
            for (int r = 1; r <= s.n(); ++r) t.counts[r] = e[r];
            break;
        }
        case Specialization::P: {
            if (!hamming || !unit_blocks)
                throw PreconditionError("P specialization needs the Hamming weight and k_i = 1");
            const IdealFamily fam = enumerate_ideals(s.poset, caps);
            for (const auto& [key, ideals] : fam.by_card_and_max) {
                const auto [r, j] = key;
                if (r == 0) continue;
                t.counts[static_cast<std::size_t>(r)] += ipow(q - 1, static_cast<std::uint64_t>(j)) *
                                                         ipow(q, static_cast<std::uint64_t>(r - j)) *
                                                         ideals.size();
            }
            break;
        }
    }
    return t;
}

/// Specializations whose preconditions the instance satisfies.
inline std::vector<Specialization> applicable_specializations(const BlockSpace& s) {
    std::vector<Specialization> out;
    const bool unit = s.labels.uniform_length() == 1;
    const bool ham = s.weight.is_hamming();
    if (unit) out.push_back(Specialization::PW);
    if (ham) out.push_back(Specialization::PPi);
    if (ham && classify(s.poset).is_antichain) out.push_back(Specialization::Pi);
    if (ham && unit) out.push_back(Specialization::P);
    return out;
}

/// Closed-form methods (other than General) whose preconditions hold.
inline std::vector<Method> applicable_methods(const BlockSpace& s) {
    const Classification c = classify(s.poset);
    std::vector<Method> out;
    if (c.is_chain) out.push_back(Method::Chain);
    if (c.is_hierarchical) out.push_back(Method::Hierarchical);
    if (s.labels.uniform_length() != 0) out.push_back(Method::EqualBlock);
    return out;
}

/// Dispatch: chain, then hierarchical, then equal-block, then general, unless forced.
inline DistributionTable compute_distribution(const BlockSpace& s, Method method = Method::Auto,
                                              const Caps& caps = {}) {
    if (method == Method::Auto) {
        const auto ms = applicable_methods(s);
        method = ms.empty() ? Method::General : ms.front();
    }
    switch (method) {
        case Method::General: return distribution_general(s, caps);
        case Method::EqualBlock: return distribution_equal_blocks(s, caps);
        case Method::Hierarchical: return distribution_hierarchical(s, caps);
        case Method::Chain: return distribution_chain(s);
        case Method::Oracle:
        case Method::Auto: break;
    }
    throw PreconditionError("compute_distribution: the oracle lives in oracle.hpp");
}

/// |B_r| = Σ_{t<=r} |A_t|
inline BigInt ball_volume(const DistributionTable& table, int r) {
    if (r < 0 || r > table.max_weight())
        throw BoundsError("radius " + std::to_string(r) + " outside [0, " +
                          std::to_string(table.max_weight()) + "]");
    BigInt v = 0;
    for (int t = 0; t <= r; ++t) v += table.counts[static_cast<std::size_t>(t)];
    return v;
}

}  // namespace posetblock
