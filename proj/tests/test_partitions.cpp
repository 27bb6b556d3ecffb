#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "posetblock/partitions.hpp"

using namespace posetblock;

namespace {

std::vector<std::vector<int>> parts_of(const std::vector<BoundedPartition>& bs) {
    std::vector<std::vector<int>> out;
    for (const auto& b : bs) out.push_back(b.parts);
    return out;
}

// All compositions of `target` into parts in [1, M_w], at most max_parts of them.
std::vector<std::vector<int>> compositions(int target, int M_w, int max_parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            if (!cur.empty()) out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int p = 1; p <= std::min(left, M_w); ++p) {
            cur.push_back(p);
            rec(left - p);
            cur.pop_back();
        }
    };
    rec(target);
    return out;
}

BoundedPartition part(std::vector<int> p) {
    int s = 0;
    for (int v : p) s += v;
    return {std::move(p), s};
}

}  // namespace

TEST(Partitions, WeightEightWithOneFullBlock) {
    EXPECT_EQ(parts_of(enumerate_partitions(8, 1, 3, 4)),
              (std::vector<std::vector<int>>{{3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}}));
}

TEST(Partitions, WeightThree) {
    EXPECT_EQ(parts_of(enumerate_partitions(3, 0, 3, 5)), (std::vector<std::vector<int>>{{3}, {2, 1}, {1, 1, 1}}));
}

TEST(Partitions, WeightFourteenWithOneFullBlock) {
    EXPECT_EQ(parts_of(enumerate_partitions(14, 1, 3, 4)), (std::vector<std::vector<int>>{{3, 3, 3, 2}}));
}

TEST(Partitions, EmptyTarget) {
    EXPECT_TRUE(enumerate_partitions(3, 1, 3, 4).empty());
    EXPECT_EQ(enumerate_partitions(3, 1, 3, 4, true).size(), 1U);
    EXPECT_TRUE(enumerate_partitions(2, 1, 3, 4, true).empty());
}

TEST(Partitions, RejectsNegativeArguments) {
    EXPECT_THROW(enumerate_partitions(-1, 0, 3, 2), BoundsError);
    EXPECT_THROW(enumerate_partitions(3, 0, 0, 2), BoundsError);
}

TEST(Partitions, MatchSortedCompositions) {
    for (int M_w = 1; M_w <= 4; ++M_w)
        for (int target = 1; target <= 12; ++target)
            for (int max_parts = 1; max_parts <= 6; ++max_parts) {
                std::set<std::vector<int>> expect;
                for (auto c : compositions(target, M_w, max_parts)) {
                    std::sort(c.rbegin(), c.rend());
                    expect.insert(c);
                }
                const auto got = enumerate_partitions(target, 0, M_w, max_parts);
                std::set<std::vector<int>> seen;
                for (const auto& b : got) {
                    EXPECT_TRUE(std::is_sorted(b.parts.rbegin(), b.parts.rend()));
                    EXPECT_LE(b.part_count(), max_parts);
                    EXPECT_EQ(b.target, target);
                    int sum = 0;
                    for (int p : b.parts) {
                        EXPECT_GE(p, 1);
                        EXPECT_LE(p, M_w);
                        sum += p;
                    }
                    EXPECT_EQ(sum, target);
                    seen.insert(b.parts);
                }
                EXPECT_EQ(seen.size(), got.size());
                EXPECT_EQ(seen, expect);
            }
}

TEST(Partitions, ExactPartCount) {
    for (const auto& b : partitions_with_parts(9, 3, 4)) EXPECT_EQ(b.part_count(), 3);
    EXPECT_EQ(parts_of(partitions_with_parts(5, 2, 3)), (std::vector<std::vector<int>>{{3, 2}}));
    EXPECT_TRUE(partitions_with_parts(10, 3, 3).empty());
    const auto grouped = partitions_by_part_count(7, 3, 5);
    for (std::size_t j = 0; j < grouped.size(); ++j)
        EXPECT_EQ(grouped[j].size(), partitions_with_parts(7, static_cast<int>(j), 3).size());
}

TEST(Multiplicities, GroupsEqualParts) {
    const auto m = multiplicities(part({3, 3, 2, 1, 1, 1}));
    EXPECT_EQ(m.values, (std::vector<int>{3, 2, 1}));
    EXPECT_EQ(m.counts, (std::vector<int>{2, 1, 3}));
}

TEST(Arrangements, KnownCounts) {
    EXPECT_EQ(arrangement_count(part({3, 3, 3, 2})), 4);
    EXPECT_EQ(arrangement_count(part({3, 3, 3, 1, 1})), 10);
}

TEST(Arrangements, ListsDistinctOrderings) {
    EXPECT_EQ(enumerate_arrangements(part({2, 1})), (std::vector<std::vector<int>>{{1, 2}, {2, 1}}));
    EXPECT_EQ(enumerate_arrangements(part({3, 3, 3, 2})),
              (std::vector<std::vector<int>>{{2, 3, 3, 3}, {3, 2, 3, 3}, {3, 3, 2, 3}, {3, 3, 3, 2}}));
}

TEST(Arrangements, CountMatchesListAndCompositions) {
    for (int M_w = 1; M_w <= 3; ++M_w)
        for (int target = 1; target <= 9; ++target) {
            std::size_t total = 0;
            for (const auto& b : enumerate_partitions(target, 0, M_w, 6)) {
                const auto arr = enumerate_arrangements(b);
                EXPECT_EQ(BigInt(arr.size()), arrangement_count(b));
                EXPECT_EQ(std::set<std::vector<int>>(arr.begin(), arr.end()).size(), arr.size());
                total += arr.size();
            }
            EXPECT_EQ(total, compositions(target, M_w, 6).size());
        }
}

TEST(Arrangements, CapIsEnforced) {
    Caps caps;
    caps.max_arrangements = 5;
    EXPECT_THROW(enumerate_arrangements(part({3, 3, 3, 1, 1}), caps), ExplosionError);
}
