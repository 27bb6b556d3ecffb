#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace posetblock;
using namespace testsupport;

namespace {

BlockSpace thirteen() { return BlockSpace(build_poset(5, {{1, 2}}), LabelMap({2, 3, 4, 2, 2}), lee_weight(7)); }

std::vector<BigInt> oracle_counts(const BlockSpace& s) { return oracle_distribution(s).table.counts; }

}  // namespace

TEST(DistributionGeneral, ThirteenDimensionalWeightThree) {
    EXPECT_EQ(distribution_general(thirteen()).counts[3], BigInt(35384));
}

TEST(DistributionGeneral, ThirteenDimensionalWeightFourteen) {
    EXPECT_EQ(distribution_general(thirteen()).counts[14], BigInt("22829377536"));
}

TEST(DistributionGeneral, ThirteenDimensionalTotalAndMetadata) {
    const auto t = distribution_general(thirteen());
    EXPECT_EQ(t.counts.size(), 16U);
    EXPECT_EQ(t.counts[0], 1);
    EXPECT_EQ(t.total(), ipow(7, 13));
    EXPECT_EQ(t.method, "general");
    EXPECT_EQ(t.q, 7);
    EXPECT_EQ(t.N, 13);
}

TEST(DistributionGeneral, SmallHammingChain) {
    const BlockSpace s(chain_poset(3), LabelMap::uniform(3, 1), hamming_weight(3));
    EXPECT_EQ(distribution_general(s).counts, big({1, 2, 6, 18}));
}

TEST(DistributionGeneral, FrozenTables) {
    EXPECT_EQ(distribution_general(BlockSpace(hierarchical_poset({2, 2}), LabelMap::uniform(4, 1), lee_weight(3))).counts,
              big({1, 4, 4, 36, 36}));
    EXPECT_EQ(distribution_general(BlockSpace(build_poset(3, {{1, 2}}), LabelMap::uniform(3, 2), lee_weight(7))).counts,
              big({1, 16, 96, 304, 1032, 4688, 14296, 31360, 37632, 28224}));
    EXPECT_EQ(distribution_general(BlockSpace(hierarchical_poset({2, 2}), LabelMap::uniform(4, 1), lee_weight(5))).counts,
              big({1, 4, 8, 8, 4, 100, 200, 200, 100}));
}

TEST(DistributionGeneral, MatchesOracleOnTruncatedSpace) {
    const BlockSpace s(build_poset(3, {{1, 2}}), LabelMap::uniform(3, 2), lee_weight(7));
    EXPECT_EQ(distribution_general(s).counts, oracle_counts(s));
}

TEST(DistributionGeneral, MatchesOracleOnRandomInstances) {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 24; ++i) {
        const Instance inst = random_instance(rng, i, 200'000);
        SCOPED_TRACE(inst.label);
        EXPECT_EQ(distribution_general(inst.space).counts, oracle_counts(inst.space));
    }
}

TEST(DistributionGeneral, IdealCapRaisesExplosion) {
    Caps caps;
    caps.max_ideals = 4;
    EXPECT_THROW(distribution_general(thirteen(), caps), ExplosionError);
}

TEST(DistributionGeneral, ArrangementCapRaisesExplosion) {
    Caps caps;
    caps.max_arrangements = 1;
    EXPECT_THROW(distribution_general(BlockSpace(antichain_poset(3), LabelMap({1, 2, 1}), lee_weight(5)), caps),
                 ExplosionError);
}

TEST(DistributionGeneral, ThreadCountDoesNotChangeResult) {
    Caps one, many;
    one.threads = 1;
    many.threads = 7;
    EXPECT_EQ(distribution_general(thirteen(), one).counts, distribution_general(thirteen(), many).counts);
    std::mt19937_64 rng(5);
    const BlockSpace s(random_poset(5, 0.3, rng), LabelMap({1, 2, 1, 1, 2}), lee_weight(5));
    EXPECT_EQ(oracle_distribution(s, one).table.counts, oracle_distribution(s, many).table.counts);
}

TEST(EqualBlocks, MatchesGeneralOnRandomPoset) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const BlockSpace s(random_poset(4, 0.4, rng), LabelMap::uniform(4, 2), lee_weight(5));
        EXPECT_EQ(distribution_equal_blocks(s).counts, distribution_general(s).counts);
        EXPECT_EQ(distribution_equal_blocks(s).counts, oracle_counts(s));
    }
}

TEST(EqualBlocks, TopWeightClosedForm) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const int q = 2 + trial % 6, k = 1 + trial % 3, n = 2 + trial % 4;
        for (const auto& w : {lee_weight(q), hamming_weight(q)}) {
            const BlockSpace s(random_poset(n, 0.4, rng), LabelMap::uniform(n, k), w);
            const int t = popcount(maximals_of(s.poset, s.poset.ground()));
            const BigInt top = w.class_size(w.max_weight());
            const BigInt expect = ipow(ipow(q, k) - ipow(BigInt(q) - top, k), t) * ipow(q, k * (n - t));
            EXPECT_EQ(distribution_equal_blocks(s).counts[n * w.max_weight()], expect);
        }
    }
}

TEST(EqualBlocks, HammingAntichainIsBinomial) {
    for (int q : {2, 3, 5})
        for (int n = 1; n <= 5; ++n)
            for (int k = 1; k <= 3; ++k) {
                const auto t = distribution_equal_blocks(BlockSpace(antichain_poset(n), LabelMap::uniform(n, k), hamming_weight(q)));
                for (int r = 0; r <= n; ++r) EXPECT_EQ(t.counts[r], binomial(n, r) * ipow(ipow(q, k) - 1, r));
            }
}

TEST(EqualBlocks, RejectsUnequalBlocks) {
    EXPECT_THROW(distribution_equal_blocks(thirteen()), PreconditionError);
}

TEST(Hierarchical, MatchesGeneralAndOracle) {
    const BlockSpace s(hierarchical_poset({2, 2}), LabelMap::uniform(4, 1), lee_weight(3));
    EXPECT_EQ(distribution_hierarchical(s).counts, distribution_general(s).counts);
    EXPECT_EQ(distribution_hierarchical(s).counts, oracle_counts(s));
    const BlockSpace u(hierarchical_poset({1, 3, 1}), LabelMap({2, 1, 2, 1, 1}), lee_weight(5));
    EXPECT_EQ(distribution_hierarchical(u).counts, oracle_counts(u));
}

TEST(Hierarchical, ChainAgreesWithChainMethod) {
    const BlockSpace s(chain_poset(4), LabelMap({1, 2, 1, 2}), lee_weight(5));
    EXPECT_EQ(distribution_hierarchical(s).counts, distribution_chain(s).counts);
}

TEST(Hierarchical, HammingClosedForm) {
    for (const auto& sizes : std::vector<std::vector<int>>{{2, 3}, {1, 2, 2}, {3, 1, 2}})
        for (int q : {2, 3})
            for (int k : {1, 2}) {
                int n = 0;
                for (int v : sizes) n += v;
                const auto t = distribution_hierarchical(BlockSpace(hierarchical_poset(sizes), LabelMap::uniform(n, k), hamming_weight(q)));
                int below = 0;
                for (int nj : sizes) {
                    for (int a = 1; a <= nj; ++a)
                        EXPECT_EQ(t.counts[below + a], binomial(nj, a) * ipow(ipow(q, k) - 1, a) * ipow(q, k * below));
                    below += nj;
                }
            }
}

TEST(Hierarchical, RejectsGeneralPoset) {
    EXPECT_THROW(distribution_hierarchical(thirteen()), PreconditionError);
}

TEST(Chain, UnitBlocksClosedForm) {
    for (const auto& w : {lee_weight(7), hamming_weight(5), custom_weight(5, {0, 2, 3, 3, 2})}) {
        const int n = 4, M = w.max_weight();
        const auto t = distribution_chain(BlockSpace(chain_poset(n), LabelMap::uniform(n, 1), w));
        for (int tt = 0; tt < n; ++tt)
            for (int a = 1; a <= M; ++a) EXPECT_EQ(t.counts[tt * M + a], ipow(w.q(), tt) * w.class_size(a));
    }
}

TEST(Chain, HammingClosedForm) {
    const std::vector<int> k{2, 1, 3, 1};
    const auto t = distribution_chain(BlockSpace(chain_poset(4), LabelMap(k), hamming_weight(3)));
    int below = 0;
    for (int r = 1; r <= 4; ++r) {
        EXPECT_EQ(t.counts[r], (ipow(3, k[r - 1]) - 1) * ipow(3, below));
        below += k[r - 1];
    }
}

TEST(Chain, LeeTableMatchesOracle) {
    const BlockSpace s(chain_poset(3), LabelMap({2, 1, 2}), lee_weight(7));
    EXPECT_EQ(distribution_chain(s).counts, big({1, 8, 16, 24, 98, 98, 98, 2744, 5488, 8232}));
    EXPECT_EQ(distribution_chain(s).counts, oracle_counts(s));
}

TEST(Chain, PermutedLabelsMatchOracle) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 6; ++trial) {
        const BlockSpace s(random_chain(4, rng), LabelMap({1, 2, 1, 2}), lee_weight(5));
        EXPECT_EQ(distribution_chain(s).counts, oracle_counts(s));
    }
}

TEST(Chain, GapsWithLargeMinimumWeightMatchOracle) {
    const BlockSpace s(chain_poset(3), LabelMap({1, 2, 1}), custom_weight(5, {0, 3, 2, 2, 3}));
    const auto t = distribution_chain(s);
    EXPECT_EQ(t.counts, oracle_counts(s));
    EXPECT_EQ(t.counts[1], 0);
    EXPECT_EQ(t.counts[4], 0);
}

TEST(Chain, RejectsNonChain) {
    EXPECT_THROW(distribution_chain(thirteen()), PreconditionError);
}

TEST(Specialized, HammingUnitChain) {
    const BlockSpace s(chain_poset(4), LabelMap::uniform(4, 1), hamming_weight(3));
    const auto t = distribution_specialized(Specialization::P, s);
    for (int r = 1; r <= 4; ++r) EXPECT_EQ(t.counts[r], ipow(3, r - 1) * 2);
}

TEST(Specialized, HammingAntichainBlocks) {
    const BlockSpace s(antichain_poset(3), LabelMap::uniform(3, 2), hamming_weight(2));
    const auto t = distribution_specialized(Specialization::Pi, s);
    for (int r = 0; r <= 3; ++r) EXPECT_EQ(t.counts[r], binomial(3, r) * ipow(3, r));
}

TEST(Specialized, WeightedUnitBlocksWithHammingCollapse) {
    std::mt19937_64 rng(41);
    const BlockSpace s(random_poset(5, 0.4, rng), LabelMap::uniform(5, 1), hamming_weight(3));
    EXPECT_EQ(distribution_specialized(Specialization::PW, s).counts, distribution_specialized(Specialization::P, s).counts);
}

TEST(Specialized, AgreeWithGeneralWhereApplicable) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 12; ++trial) {
        const int q = trial % 2 ? 3 : 5;
        const auto w = trial % 3 == 0 ? lee_weight(q) : hamming_weight(q);
        const Poset p = trial % 4 == 0 ? antichain_poset(4) : random_poset(4, 0.4, rng);
        const LabelMap pi = trial % 2 ? LabelMap::uniform(4, 1) : LabelMap({1, 2, 1, 2});
        const BlockSpace s(p, pi, w);
        for (Specialization sp : applicable_specializations(s))
            EXPECT_EQ(distribution_specialized(sp, s).counts, distribution_general(s).counts) << specialization_name(sp);
    }
}

TEST(Specialized, Preconditions) {
    const BlockSpace lee(chain_poset(3), LabelMap({1, 2, 1}), lee_weight(5));
    EXPECT_THROW(distribution_specialized(Specialization::PW, lee), PreconditionError);
    EXPECT_THROW(distribution_specialized(Specialization::PPi, lee), PreconditionError);
    const BlockSpace ham_chain(chain_poset(3), LabelMap({1, 2, 1}), hamming_weight(5));
    EXPECT_THROW(distribution_specialized(Specialization::Pi, ham_chain), PreconditionError);
    EXPECT_THROW(distribution_specialized(Specialization::P, ham_chain), PreconditionError);
}

TEST(Dispatch, PicksMostSpecificMethod) {
    EXPECT_EQ(compute_distribution(BlockSpace(chain_poset(3), LabelMap({1, 2, 1}), lee_weight(5))).method, "chain");
    EXPECT_EQ(compute_distribution(BlockSpace(hierarchical_poset({2, 1}), LabelMap({1, 2, 1}), lee_weight(5))).method,
              "hierarchical");
    EXPECT_EQ(compute_distribution(BlockSpace(build_poset(3, {{1, 2}}), LabelMap::uniform(3, 2), lee_weight(5))).method,
              "equal-block");
    EXPECT_EQ(compute_distribution(thirteen()).method, "general");
    EXPECT_EQ(compute_distribution(thirteen(), Method::General).method, "general");
    EXPECT_THROW(compute_distribution(thirteen(), Method::Oracle), PreconditionError);
}

TEST(Dispatch, AllMethodsAgreeOnRandomInstances) {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 40; ++i) {
        const Instance inst = random_instance(rng, i, 100'000);
        SCOPED_TRACE(inst.label);
        const auto ref = distribution_general(inst.space).counts;
        for (Method m : applicable_methods(inst.space)) EXPECT_EQ(compute_distribution(inst.space, m).counts, ref);
        for (Specialization sp : applicable_specializations(inst.space))
            EXPECT_EQ(distribution_specialized(sp, inst.space).counts, ref);
        BigInt total = 0;
        for (const auto& c : ref) total += c;
        EXPECT_EQ(total, ipow(inst.space.q(), inst.space.N()));
    }
}

TEST(CanonicalSplit, BoundaryGoesToFullBlock) {
    EXPECT_EQ(canonical_split(1, 3), std::make_pair(0, 1));
    EXPECT_EQ(canonical_split(3, 3), std::make_pair(0, 3));
    EXPECT_EQ(canonical_split(4, 3), std::make_pair(1, 1));
    EXPECT_EQ(canonical_split(6, 3), std::make_pair(1, 3));
    EXPECT_EQ(canonical_split(5, 1), std::make_pair(4, 1));
    EXPECT_THROW(canonical_split(0, 3), BoundsError);
}

TEST(BallVolume, EndpointsAndChainBoundaries) {
    const auto t = compute_distribution(thirteen());
    EXPECT_EQ(ball_volume(t, 0), 1);
    EXPECT_EQ(ball_volume(t, 15), ipow(7, 13));
    EXPECT_THROW(ball_volume(t, 16), BoundsError);
    EXPECT_THROW(ball_volume(t, -1), BoundsError);

    const std::vector<int> k{2, 1, 3};
    const BlockSpace s(chain_poset(3), LabelMap(k), lee_weight(5));
    const auto c = distribution_chain(s);
    int prefix = 0;
    for (int t2 = 1; t2 <= 3; ++t2) {
        prefix += k[t2 - 1];
        EXPECT_EQ(ball_volume(c, t2 * 2), ipow(5, prefix));
    }
}

TEST(BallVolume, MatchesCountedBall) {
    const BlockSpace s(build_poset(3, {{1, 3}}), LabelMap({1, 2, 1}), lee_weight(5));
    const auto t = distribution_general(s);
    std::vector<BigInt> counted(static_cast<std::size_t>(s.max_total_weight()) + 1, 0);
    std::mt19937_64 rng(1);
    const auto center = random_vector(s, rng);
    std::vector<Symbol> x(4, 0);
    for (int idx = 0; idx < 625; ++idx) {
        int v = idx;
        for (auto& e : x) {
            e = static_cast<Symbol>(v % 5);
            v /= 5;
        }
        const int d = pwpi_distance(s, BlockVector(x), center);
        for (int r = d; r <= s.max_total_weight(); ++r) counted[r] += 1;
    }
    for (int r = 0; r <= s.max_total_weight(); ++r) EXPECT_EQ(ball_volume(t, r), counted[r]);
}
