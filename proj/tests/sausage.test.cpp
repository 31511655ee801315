//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file sausage.test.cpp
//---------------------------------------------------------------------------//
#include "bellworlds/sausage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "bellworlds/harness.hpp"
#include "bellworlds/rng.hpp"
#include "oracles.hpp"

using namespace bellworlds;

namespace
{
//! Tabulated density that is not symmetric about pi/4.
DensityFn ramp(double budget)
{
    return DensityFn::tabulated({{0.0, 1.0}, {half_pi, 3.0}}, budget);
}
}  // namespace

TEST(SampleDrTest, reproducible)
{
    RngStream a{123};
    RngStream b{123};
    for (int i = 0; i < 1000; ++i)
        EXPECT_EQ(sample_dr(a).rho(), sample_dr(b).rho());
}

TEST(SampleDrTest, uniform_by_kolmogorov_smirnov)
{
    RngStream rng{8};
    std::size_t const n = 1000000;
    std::vector<double> u(n);
    double cos_sum = 0;
    for (auto& x : u)
    {
        double rho = sample_dr(rng).rho().value();
        cos_sum += std::cos(rho);
        x = rho / two_pi;
    }
    std::sort(u.begin(), u.end());
    EXPECT_LT(oracle::ks_uniform(u), oracle::ks_critical_1pct(n));
    EXPECT_NEAR(cos_sum / n, 0.0, 3 / std::sqrt(2.0 * n));
}

TEST(SausageRunTest, examples)
{
    auto c01 = AngleConfig::make(0, 1);
    EXPECT_EQ(sausage_run(DRVector{Angle{pi / 8}}, c01), (Outcome{0, 0}));
    auto c11 = AngleConfig::make(1, 1);
    RngStream rng{9};
    for (int i = 0; i < 10000; ++i)
        EXPECT_FALSE(sausage_run(sample_dr(rng), c11).is_equal());
}

TEST(VolumeCountersTest, examples)
{
    auto t = volume_counters(BellAngles{}, 160);
    EXPECT_NEAR(t.unequal(0, 1), 10.0, 1e-12);
    EXPECT_NEAR(t.equal(1, 2), 20.0, 1e-12);
    EXPECT_NEAR(t.unequal(0, 2), 30.0, 1e-12);
    EXPECT_NEAR(t.equal(0, 2), 10.0, 1e-12);
    EXPECT_EQ(t.equal(1, 1), 0.0);
    auto r = bell_check(t);
    EXPECT_EQ(r.margin, 0.0);
    EXPECT_FALSE(r.violated);
}

TEST(VolumeCountersTest, rejects_wide_settings)
{
    BellAngles wide{Angle{0.0}, Angle{2.0}, Angle{0.1}};
    EXPECT_THROW(volume_counters(wide, 160), std::domain_error);
}

TEST(VolumeCountersTest, monte_carlo_agrees)
{
    Schedule s;
    s.model = SausageModel{};
    s.n_total = 400000;
    s.seed = 31;
    auto sim = run_experiment(s);
    auto expected = volume_counters(BellAngles{}, 1.0);
    for (int c = 0; c < 4; ++c)
    {
        double n = sim.config_total(c);
        for (int o = 0; o < 4; ++o)
        {
            Outcome outcome = Outcome::from_index(o);
            double p = 4 * expected.count(c, outcome);
            EXPECT_NEAR(sim.count(c, outcome) / n, p,
                        3 * oracle::binomial_sigma(p, n) + 1e-12);
        }
    }
}

TEST(DensityTest, constant_split)
{
    auto f = DensityFn::constant(400);
    auto set = grow_fibers(f, Side::alice, Angle{0.0}, 100);
    ASSERT_EQ(set.fibers.size(), 400u);
    for (auto const& fiber : set.fibers)
        EXPECT_NEAR(fiber.weight, 1.0, 1e-12);
    EXPECT_NEAR(f(0.3), 400 / two_pi, 1e-12);
}

TEST(DensityTest, budget_is_preserved)
{
    std::mt19937_64 gen{3};
    std::uniform_real_distribution<double> val{0.0, 5.0};
    for (int trial = 0; trial < 50; ++trial)
    {
        std::vector<DensityFn::Knot> knots;
        int m = 2 + trial % 9;
        for (int i = 0; i < m; ++i)
            knots.emplace_back(half_pi * i / (m - 1), val(gen));
        knots[0].second += 0.1;
        double budget = 1000.0 * (trial + 1);
        auto f = DensityFn::tabulated(knots, budget);
        auto set = grow_fibers(f, trial % 2 ? Side::bob : Side::alice, Angle{0.3}, 257);
        EXPECT_NEAR(set.total_weight(), budget, 1e-9 * budget);
        EXPECT_NEAR(4 * f.integral(0, half_pi), budget, 1e-9 * budget);
    }
}

TEST(DensityTest, concentrated_at_zero)
{
    int const m = 64;
    double w = half_pi / m;
    auto f = DensityFn::tabulated({{0.0, 1.0}, {w, 0.0}, {half_pi, 0.0}}, 100);
    auto set = grow_fibers(f, Side::alice, Angle{0.0}, m);
    for (auto const& fiber : set.fibers)
    {
        if (fiber.cell == 0)
            EXPECT_NEAR(fiber.weight, 25.0, 1e-9);
        else
            EXPECT_EQ(fiber.weight, 0.0);
    }
}

TEST(DensityTest, rejects_bad_input)
{
    double nan = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(DensityFn::tabulated({{0.0, nan}}, 1), std::invalid_argument);
    EXPECT_THROW(DensityFn::tabulated({{0.0, -1.0}}, 1), std::invalid_argument);
    EXPECT_THROW(DensityFn::tabulated({{0.5, 1.0}, {0.2, 1.0}}, 1), std::invalid_argument);
    EXPECT_THROW(DensityFn::tabulated({{0.0, 0.0}}, 1), std::invalid_argument);
    EXPECT_THROW(DensityFn::tabulated({}, 1), std::invalid_argument);
    EXPECT_THROW(DensityFn::constant(0), std::invalid_argument);
}

TEST(DensityTest, reads_two_column_text)
{
    std::istringstream in{"# tau f\n0 1\n\n0.785 2   # middle\n1.5707963267948966 1\n"};
    auto f = DensityFn::read(in, 10);
    ASSERT_EQ(f.knots().size(), 3u);
    EXPECT_NEAR(4 * f.integral(0, half_pi), 10, 1e-12);
    // Linear interpolation between knots
    double mid = (f(0) + f(0.785)) / 2;
    EXPECT_NEAR(f(0.785 / 2), mid, 1e-12);

    std::istringstream bad{"0 1 2\n"};
    EXPECT_THROW(DensityFn::read(bad, 1), std::invalid_argument);
    EXPECT_THROW(DensityFn::load("/nonexistent/density.txt", 1), std::runtime_error);
}

TEST(FiberSetTest, chirality)
{
    auto f = DensityFn::constant(4);
    auto alice = grow_fibers(f, Side::alice, Angle{0.5}, 8);
    auto bob = grow_fibers(f, Side::bob, Angle{0.5}, 8);
    double w = half_pi / 8;
    EXPECT_NEAR(alice.fibers[0].rho.value(), 0.5 + w / 2, 1e-12);
    EXPECT_NEAR(bob.fibers[0].rho.value(), 0.5 - w / 2, 1e-12);
    EXPECT_EQ(&alice.fiber_at(Angle{0.5 + 2.5 * w}), &alice.fibers[2]);
    EXPECT_EQ(&bob.fiber_at(Angle{0.5 - 2.5 * w}), &bob.fibers[2]);
}

TEST(MatchFibersTest, aligned_constant_density)
{
    auto f = DensityFn::constant(4096);
    for (double d : {0.0, pi / 8, 3 * pi / 8, -pi / 4})
    {
        auto alice = grow_fibers(f, Side::alice, Angle{0.0});
        auto bob = grow_fibers(f, Side::bob, Angle{d});
        auto m = match_fibers(alice, bob);
        EXPECT_NEAR(m.dangling, 0.0, 1e-9) << d;
        EXPECT_NEAR(m.matched_total(), 4096, 1e-6);
        EXPECT_NEAR(m.matched_equal() / m.matched_total(), 2 * std::fabs(d) / pi, 1e-12) << d;
    }
}

TEST(MatchFibersTest, symmetric_density_at_equal_settings)
{
    auto f = DensityFn::tabulated({{0.0, 1.0}, {pi / 4, 4.0}, {half_pi, 1.0}}, 1000);
    auto m = match_fibers(grow_fibers(f, Side::alice, Angle{0.2}),
                          grow_fibers(f, Side::bob, Angle{0.2}));
    EXPECT_NEAR(m.dangling, 0.0, 1e-9);
    EXPECT_EQ(m.matched_equal(), 0.0);
}

TEST(MatchFibersTest, nonconstant_density_leaves_fibers_dangling)
{
    int const cells = 256;
    auto f = ramp(1000);
    auto alice = grow_fibers(f, Side::alice, Angle{0.0}, cells);
    auto bob = grow_fibers(f, Side::bob, Angle{pi / 8}, cells);
    auto m = match_fibers(alice, bob);

    // Grid-overlap oracle: the Alice wedge j (counterclockwise from a) sits on
    // the Bob wedge (shift - 1 - j) mod cells (clockwise from b), where the
    // shift is delta in wedges. Mismatched pairs dangle on both sides.
    int shift = cells / 4;
    double expected = 0;
    for (int j = 0; j < cells; ++j)
    {
        int k = ((shift - 1 - j) % cells + cells) % cells;
        double wa = f.integral(j * half_pi / cells, (j + 1) * half_pi / cells);
        double wb = f.integral(k * half_pi / cells, (k + 1) * half_pi / cells);
        if (std::fabs(wa - wb) > 1e-9 * std::max(wa, wb))
            expected += 4 * (wa + wb);
    }
    EXPECT_GT(m.dangling, 0.0);
    EXPECT_NEAR(m.dangling, expected, 1e-9 * expected);
    EXPECT_NEAR(m.dangling + 2 * m.matched_total(), 2000, 1e-6);
}
