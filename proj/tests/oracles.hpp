//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file oracles.hpp
//! Test-only reference computations. Nothing here calls into the code paths
//! these values are used to check.
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace bellworlds::oracle
{
inline constexpr double pi = std::numbers::pi;

//---------------------------------------------------------------------------//
/*!
 * Outcome grouping of all 32 (class, setting) cases, transcribed by hand:
 * each entry is (class i, "ab") and the group key is the outcome "AB".
 */
struct Group
{
    char const* outcome;
    std::vector<std::pair<int, std::string>> entries;
};

inline std::vector<Group> transcribed_grouping()
{
    return {
        {"10", {{0, "01"}, {0, "02"}, {0, "11"}, {0, "12"}, {1, "01"}, {1, "11"}, {2, "02"},
                {4, "11"}, {4, "12"}, {5, "11"}}},
        {"00", {{2, "12"}, {4, "01"}, {4, "02"}, {5, "01"}, {6, "02"}, {6, "12"}}},
        {"11", {{1, "02"}, {1, "12"}, {2, "01"}, {3, "01"}, {3, "02"}, {5, "12"}}},
        {"01", {{2, "11"}, {3, "11"}, {3, "12"}, {5, "02"}, {6, "01"}, {6, "11"}, {7, "01"},
                {7, "02"}, {7, "11"}, {7, "12"}}},
    };
}

//! Outcome label of (class, "ab") looked up in the transcribed grouping.
inline std::string grouped_outcome(int cls, std::string const& ab)
{
    for (auto const& g : transcribed_grouping())
    {
        for (auto const& [i, s] : g.entries)
        {
            if (i == cls && s == ab)
                return g.outcome;
        }
    }
    return "??";
}

//! Expected N_ab(AB) from the grouping, config order 01, 02, 11, 12 and
//! outcome order 00, 01, 10, 11.
inline std::array<std::array<double, 4>, 4> grouped_counters(std::array<double, 8> const& n)
{
    std::array<std::array<double, 4>, 4> t{};
    char const* configs[] = {"01", "02", "11", "12"};
    for (int c = 0; c < 4; ++c)
    {
        for (int i = 0; i < 8; ++i)
        {
            std::string o = grouped_outcome(i, configs[c]);
            int idx = 2 * (o[0] - '0') + (o[1] - '0');
            t[c][idx] += n[i] / 4;
        }
    }
    return t;
}

//---------------------------------------------------------------------------//
// Vector-geometry classification: quadrants from dot and cross products
// instead of angle arithmetic. Valid away from quadrant boundaries.
//---------------------------------------------------------------------------//
inline int vector_alice(double rho, double alpha)
{
    double along = std::cos(rho) * std::cos(alpha) + std::sin(rho) * std::sin(alpha);
    // Counterclockwise perpendicular of a
    double across = -std::cos(rho) * std::sin(alpha) + std::sin(rho) * std::cos(alpha);
    bool first = along > 0 && across > 0;
    bool third = along < 0 && across < 0;
    return (first || third) ? 0 : 1;
}

inline int vector_bob(double rho, double beta)
{
    double along = std::cos(rho) * std::cos(beta) + std::sin(rho) * std::sin(beta);
    // Clockwise perpendicular of b
    double across = std::cos(rho) * std::sin(beta) - std::sin(rho) * std::cos(beta);
    bool first = along > 0 && across > 0;
    bool third = along < 0 && across < 0;
    return (first || third) ? 0 : 1;
}

//! Fraction of a midpoint grid of n world angles where A == B.
inline double equal_fraction_by_vectors(double alpha, double beta, int n)
{
    int equal = 0;
    for (int k = 0; k < n; ++k)
    {
        double rho = (k + 0.5) * 2 * pi / n;
        equal += vector_alice(rho, alpha) == vector_bob(rho, beta);
    }
    return static_cast<double>(equal) / n;
}

//---------------------------------------------------------------------------//
//! Binomial standard deviation of a fraction estimated from n trials.
inline double binomial_sigma(double p, double n)
{
    return std::sqrt(p * (1 - p) / n);
}

//! Kolmogorov-Smirnov statistic of sorted samples against U[0, 1).
template<class Vec>
double ks_uniform(Vec const& sorted)
{
    double d = 0;
    double n = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
    {
        double x = sorted[i];
        d = std::fmax(d, std::fmax((i + 1) / n - x, x - i / n));
    }
    return d;
}

//! Asymptotic 1% critical value of the KS statistic.
inline double ks_critical_1pct(double n)
{
    return 1.628 / std::sqrt(n);
}

}  // namespace bellworlds::oracle
