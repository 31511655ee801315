//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bellworlds/lrm.hpp
//! Hidden-variable local realistic model: instruction triples, class
//! weights, counters and the Bell inequality N02(U) <= N01(U) + N12(E).
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "geometry.hpp"

namespace bellworlds
{
class RngStream;

//---------------------------------------------------------------------------//
/*!
 * Minimal hidden-variable content carried by a pair.
 *
 * Alice's answer at a = 1 is not free: it must be 1 - B1 so that equal
 * settings (1, 1) are always anti-correlated.
 */
struct InstructionTriple
{
    std::uint8_t a0{0};
    std::uint8_t b1{0};
    std::uint8_t b2{0};

    std::uint8_t a1() const { return static_cast<std::uint8_t>(1 - b1); }

    //! Result read off the instructions for setting indices (a, b).
    Outcome outcome(int a, int b) const;

    friend bool operator==(InstructionTriple, InstructionTriple) = default;
};

inline constexpr int num_classes = 8;

//! i = 4(1 - A0) + 2 B1 + B2
int class_index(InstructionTriple triple);
//! Inverse of class_index.
InstructionTriple triple_of(int index);

//---------------------------------------------------------------------------//
/*!
 * Population of each hidden-variable class.
 *
 * Weights are non-negative reals so that expectation tables and continuous
 * searches over weights are both expressible.
 */
class ClassWeights
{
  public:
    using Array = std::array<double, num_classes>;

    ClassWeights() = default;
    explicit ClassWeights(Array const& n);

    //! All weight on a single class.
    static ClassWeights pure(int index, double total = 1.0);
    static ClassWeights uniform(double per_class);
    //! N1 = N6 = 0, others equal: the inequality holds with equality.
    static ClassWeights saturating(double total = 160.0);
    //! Eight comma-separated non-negative numbers.
    static ClassWeights parse(std::string_view text);

    double operator[](int index) const { return n_[index]; }
    Array const& values() const { return n_; }
    double total() const;
    bool empty() const { return total() <= 0; }

  private:
    Array n_{};
};

//---------------------------------------------------------------------------//
/*!
 * The sixteen counters N_ab(AB), indexed by config index and outcome index.
 *
 * Counts are reals: simulated tables hold integers, expectation tables may
 * hold fractions. Tables merge by component-wise addition.
 */
class CounterTable
{
  public:
    using Row = std::array<double, 4>;

    void add(int config_index, Outcome outcome, double weight = 1.0)
    {
        counts_[config_index][outcome.index()] += weight;
    }

    double count(int config_index, Outcome outcome) const
    {
        return counts_[config_index][outcome.index()];
    }
    double count(int a, int b, Outcome outcome) const;

    Row const& row(int config_index) const { return counts_[config_index]; }

    //! N_ab, the number of runs with config (a, b).
    double config_total(int config_index) const;
    double total() const;
    double equal(int config_index) const;
    double unequal(int config_index) const;
    double equal(int a, int b) const;
    double unequal(int a, int b) const;

    CounterTable& operator+=(CounterTable const& other);
    friend CounterTable operator+(CounterTable lhs, CounterTable const& rhs)
    {
        return lhs += rhs;
    }
    friend bool operator==(CounterTable const&, CounterTable const&) = default;

  private:
    std::array<Row, AngleConfig::count> counts_{};
};

//---------------------------------------------------------------------------//
//! Evaluation of N02(U) <= N01(U) + N12(E) on a counter table.
struct BellReport
{
    double lhs{0};     //!< N02(U)
    double rhs{0};     //!< N01(U) + N12(E)
    double margin{0};  //!< lhs - rhs; positive means violated
    bool violated{false};
    std::optional<double> sigma;

    //! margin / sigma when sigma is known and nonzero
    std::optional<double> significance() const;
};

//---------------------------------------------------------------------------//
// OPERATIONS
//---------------------------------------------------------------------------//

//! Outcome of class \c index at the given settings.
Outcome lrm_outcome(int index, AngleConfig const& config);

//! Expected counters with each class split exactly N^i / 4 per config.
CounterTable expected_counters(ClassWeights const& weights);

//! Inequality evaluation without an error estimate.
BellReport bell_check(CounterTable const& table);

//! Draw a hidden-variable class with probability N^i / N.
int sample_class(ClassWeights const& weights, RngStream& rng);

/*!
 * One simulated run: draw a class, then read the outcome for \c config.
 *
 * The config must have been chosen independently of the class draw.
 */
Outcome sample_lrm_run(ClassWeights const& weights, AngleConfig const& config,
                       RngStream& rng);

//---------------------------------------------------------------------------//
//! One row of the 32-entry derivation table.
struct LrmTableEntry
{
    int class_index;
    InstructionTriple triple;
    AngleConfig config;
    Outcome outcome;
};

std::vector<LrmTableEntry> lrm_table(BellAngles const& bell = {});

}  // namespace bellworlds
