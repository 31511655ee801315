//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file rng.test.cpp
//---------------------------------------------------------------------------//
#include "bellworlds/rng.hpp"

#include <array>
#include <cmath>
#include <set>

#include <gtest/gtest.h>

using namespace bellworlds;

TEST(RngStreamTest, same_seed_same_sequence)
{
    RngStream a{42};
    RngStream b{42};
    RngStream c{43};
    int differ = 0;
    for (int i = 0; i < 1000; ++i)
    {
        auto x = a.bits();
        EXPECT_EQ(x, b.bits());
        differ += x != c.bits();
    }
    EXPECT_GT(differ, 990);
}

TEST(RngStreamTest, substreams_are_distinct_and_stable)
{
    RngStream parent{7};
    std::set<std::uint64_t> firsts;
    for (std::uint64_t k = 0; k < 1000; ++k)
    {
        auto s = parent.substream(k);
        EXPECT_EQ(s.seed(), RngStream::derive_seed(7, k));
        firsts.insert(s.bits());
    }
    EXPECT_EQ(firsts.size(), 1000u);
    // Drawing from the parent does not move its sub-streams
    auto before = parent.substream(3).bits();
    parent.bits();
    EXPECT_EQ(parent.substream(3).bits(), before);
    EXPECT_NE(RngStream::derive_seed(1, 2), RngStream::derive_seed(2, 1));
}

TEST(RngStreamTest, ranges_and_balance)
{
    RngStream rng{99};
    std::array<int, 4> quarters{};
    int heads = 0;
    double sum = 0;
    int const n = 400000;
    for (int i = 0; i < n; ++i)
    {
        double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
        int q = rng.uniform4();
        ASSERT_GE(q, 0);
        ASSERT_LT(q, 4);
        ++quarters[q];
        heads += rng.coin();
    }
    EXPECT_NEAR(sum / n, 0.5, 3 * std::sqrt(1.0 / 12 / n));
    for (int q : quarters)
        EXPECT_NEAR(q / double(n), 0.25, 3 * std::sqrt(0.1875 / n));
    EXPECT_NEAR(heads / double(n), 0.5, 3 * std::sqrt(0.25 / n));
}

TEST(SplitMixTest, known_values)
{
    // Reference outputs of the SplitMix64 generator seeded with 0
    EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
}
