//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bellworlds/harness.hpp
//! Experiment driver: models, schedules at the Bell angles, counter
//! accumulation, the Bell statistic and delta sweeps.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "branching.hpp"
#include "geometry.hpp"
#include "kernels.hpp"
#include "lrm.hpp"

namespace bellworlds
{
//---------------------------------------------------------------------------//
// MODELS
//---------------------------------------------------------------------------//
//! Quantum reference: E with probability sin^2(delta).
struct QuantumRef
{
};

//! Mixture of hidden-variable classes.
struct LrmModel
{
    ClassWeights weights;
};

//! One pointer-selected world of the cut cross-section.
struct SausageModel
{
};

//! Quadrant rebranching; a run lands on a uniformly chosen branch.
struct BranchModel
{
    std::uint64_t z_tilde{1'000'000};
};

using Model = std::variant<QuantumRef, LrmModel, SausageModel, BranchModel>;

//! CLI tag of a model: quantum, lrm, sausage or branch.
std::string_view model_tag(Model const& model);

/*!
 * Build a model from its tag.
 *
 * Throws std::invalid_argument for an unknown tag or a missing or
 * inapplicable parameter.
 */
Model make_model(std::string_view tag, std::optional<ClassWeights> weights = {},
                 std::optional<std::uint64_t> z_tilde = {});

//---------------------------------------------------------------------------//
struct Schedule
{
    std::uint64_t n_total{160};
    BellAngles bell{};
    std::uint64_t seed{0};
    Model model{QuantumRef{}};
};

//---------------------------------------------------------------------------//
// OPERATIONS
//---------------------------------------------------------------------------//

//! Quantum outcome at relative angle delta; E and U are each split evenly.
Outcome born_sample(double delta, RngStream& rng);

/*!
 * Simulate \c schedule.n_total runs.
 *
 * Each run draws its config uniformly and independently. The result depends
 * only on the schedule, not on \c exec or the thread count.
 */
CounterTable run_experiment(Schedule const& schedule,
                            Execution exec = Execution::parallel);

/*!
 * Bell margin with an error estimate.
 *
 * Sigma sums the binomial variances n p (1 - p) of the three counters, with
 * n the table total and p each counter's share of it.
 */
BellReport bell_statistic(CounterTable const& table);

//---------------------------------------------------------------------------//
struct SweepPoint
{
    double delta{0};
    double p_model{0};
    double p_born{0};
    //! 2|delta|/pi where |delta| <= pi/2
    std::optional<double> p_volume;

    friend bool operator==(SweepPoint const&, SweepPoint const&) = default;
};

struct SweepCurve
{
    std::string model;
    std::vector<SweepPoint> points;

    bool empty() const { return points.empty(); }
    friend bool operator==(SweepCurve const&, SweepCurve const&) = default;
};

//! \c steps evenly spaced values from start to stop inclusive.
std::vector<double> linear_grid(double start, double stop, int steps);

/*!
 * Probability of E as a function of delta, with Alice's axis at zero.
 *
 * Monte Carlo models use \c n_per_point runs drawn from sub-stream i of
 * \c seed at grid point i; the branch model is evaluated exactly. The
 * hidden-variable model is only defined at the Bell settings and is
 * rejected.
 */
SweepCurve sweep(Model const& model, std::span<double const> delta_grid,
                 std::uint64_t n_per_point, std::uint64_t seed,
                 Execution exec = Execution::parallel);

}  // namespace bellworlds
