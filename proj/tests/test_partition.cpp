#include <gtest/gtest.h>

#include <fibperm/partition.hpp>

#include "oracles.hpp"

using namespace fibperm;

namespace {

SetPartition S(std::string_view s) { return parse_partition(s); }

using ArcList = std::vector<std::pair<int, int>>;

}  // namespace

TEST(Partition, Canonical) {
    SetPartition p({{5, 7}, {6}, {4, 2, 8}, {3, 1}});
    EXPECT_EQ(to_string(p), "1,3/2,4,8/5,7/6");
    EXPECT_EQ(p.size(), 8);
    EXPECT_THROW(SetPartition(std::vector<std::vector<int>>{{1, 3}}), Error);
    EXPECT_THROW(SetPartition({{1, 2}, {2}}), Error);
    EXPECT_THROW(SetPartition(std::vector<std::vector<int>>{{}}), Error);
}

TEST(Partition, Arcs) {
    EXPECT_EQ(arcs(S("1,3/2,4,8/5,7/6")).arcs, (ArcList{{1, 3}, {2, 4}, {4, 8}, {5, 7}}));
    EXPECT_TRUE(arcs(singletons(5)).arcs.empty());
    EXPECT_EQ(arcs(S("1,2,4,5,8/3/6/7")).arcs, (ArcList{{1, 2}, {2, 4}, {4, 5}, {5, 8}}));
}

TEST(Partition, CrossingsAndNestings) {
    auto d = arcs(S("1,3/2,4,8/5,7/6"));
    EXPECT_EQ(crossings(d), 1);
    EXPECT_EQ(nestings(d), 1);
    EXPECT_EQ(crossings(arcs(singletons(4))), 0);
    EXPECT_EQ(nestings(arcs(singletons(4))), 0);
    ArcDiagram nested{4, {{1, 4}, {2, 3}}};
    EXPECT_EQ(crossings(nested), 0);
    EXPECT_EQ(nestings(nested), 1);
}

TEST(Partition, IsNcn) {
    EXPECT_TRUE(is_ncn(S("1,2,4,5,8/3/6/7")));
    EXPECT_FALSE(is_ncn(S("1,3/2,4,8/5,7/6")));
    EXPECT_TRUE(is_ncn(singletons(6)));
}

TEST(Partition, Components) {
    auto parts = indecomposable_components(S("1,2,4/3/5/6,8/7"));
    ASSERT_EQ(parts.size(), 3u);
    EXPECT_EQ(parts[0], S("1,2,4/3"));
    EXPECT_EQ(parts[1], S("1"));
    EXPECT_EQ(parts[2], S("1,3/2"));
    EXPECT_EQ(concatenate(parts), S("1,2,4/3/5/6,8/7"));
    auto single = S("1,3,5/2/4");
    EXPECT_EQ(indecomposable_components(single), std::vector<SetPartition>{single});
    auto three = indecomposable_components(singletons(3));
    EXPECT_EQ(three, std::vector<SetPartition>(3, S("1")));
}

TEST(Partition, EnumerateSmall) {
    auto one = enumerate_ncn(1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], S("1"));
    EXPECT_EQ(enumerate_ncn(7).size(), 233u);
    EXPECT_THROW(enumerate_ncn(0), Error);
}

TEST(Partition, IndecomposableAtFive) {
    std::vector<std::string> got;
    for (const auto& p : enumerate_ncn(5))
        if (is_indecomposable(p)) got.push_back(to_string(p));
    std::sort(got.begin(), got.end());
    std::vector<std::string> want = {"1,2,3,4,5", "1,2,3,5/4", "1,2,4,5/3", "1,2,5/3/4",
                                     "1,3,4,5/2", "1,3,5/2/4", "1,4,5/2/3", "1,5/2/3/4"};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want);
}

TEST(Partition, EnumerationMatchesBellFilter) {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::vector<std::vector<int>>> want;
        for (const auto& b : oracle::all_partitions(n))
            if (oracle::ncn(b)) want.insert(b);
        std::set<std::vector<std::vector<int>>> got;
        for (const auto& p : enumerate_ncn(n)) got.insert(p.blocks());
        ASSERT_EQ(got, want) << "n=" << n;
        EXPECT_EQ(static_cast<std::int64_t>(got.size()), oracle::fibonacci(2 * n - 1));
    }
}

TEST(Partition, MStatistic) {
    EXPECT_EQ(m_statistic(S("1,2,4,5,8/3/6/7")), 3);
    EXPECT_EQ(m_statistic(S("1,2,3,4,5,6")), 6);
    int ones = 0;
    for (const auto& p : enumerate_ncn(5)) ones += m_statistic(p) == 1;
    EXPECT_EQ(ones, 13);
}

TEST(Partition, Text) {
    EXPECT_EQ(to_string(S("1,2,4,5,8/3/6/7")), "1,2,4,5,8/3/6/7");
    EXPECT_THROW(S(""), Error);
    EXPECT_THROW(S("1,/2"), Error);
    EXPECT_THROW(S("1;2"), Error);
    EXPECT_EQ(from_rgs({0, 0, 1, 0, 2}), S("1,2,4/3/5"));
    EXPECT_THROW(from_rgs({0, 2}), Error);
}
