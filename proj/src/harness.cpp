//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file harness.cpp
//---------------------------------------------------------------------------//
#include "bellworlds/harness.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bellworlds/lightcone.hpp"
#include "bellworlds/sausage.hpp"

namespace bellworlds
{
namespace
{
template<class... Ts>
struct Overloaded : Ts...
{
    using Ts::operator()...;
};

/*!
 * Joint statistics read both settings, so they may only be evaluated where
 * both choices are in the past light cone: at the meeting of the fronts.
 */
void require_joint_reading_allowed()
{
    EventLog log = build_schedule();
    auto const& reader = log.get(EventKind::overlap);
    if (!can_influence(log.get(EventKind::choice_alice), reader)
        || !can_influence(log.get(EventKind::choice_bob), reader))
    {
        throw std::logic_error("joint outcome read outside the future of both settings");
    }
}

Outcome pick_branch(std::array<BranchCount, 4> const& cumulative, RngStream& rng)
{
    BranchCount target = static_cast<BranchCount>(rng.uniform()) * cumulative[3];
    for (int o = 0; o < 3; ++o)
    {
        if (target < cumulative[o])
            return Outcome::from_index(o);
    }
    return Outcome::from_index(3);
}

//---------------------------------------------------------------------------//
//! Per-run evaluation of a model with everything config-dependent cached.
class TrialSampler
{
  public:
    TrialSampler(Model const& model, BellAngles const& bell)
        : model_{model}, configs_{AngleConfig::all(bell)}
    {
        for (auto const& c : configs_)
            deltas_[c.index()] = delta(c.alpha(), c.beta());

        if (auto const* lrm = std::get_if<LrmModel>(&model_))
        {
            if (lrm->weights.empty())
                throw std::invalid_argument("LRM model needs non-empty class weights");
        }
        if (std::holds_alternative<QuantumRef>(model_)
            || std::holds_alternative<BranchModel>(model_))
        {
            require_joint_reading_allowed();
        }
        if (auto const* branch = std::get_if<BranchModel>(&model_))
        {
            for (int c = 0; c < AngleConfig::count; ++c)
            {
                auto counts = quadrant_rebranch(deltas_[c], branch->z_tilde).counts;
                BranchCount running = 0;
                for (int o = 0; o < 4; ++o)
                    cumulative_[c][o] = running += counts[o];
            }
        }
    }

    void operator()(RngStream& rng, std::uint64_t runs, CounterTable& table) const
    {
        std::visit(Overloaded{
                       [&](QuantumRef const&) {
                           for (std::uint64_t i = 0; i < runs; ++i)
                           {
                               int c = rng.uniform4();
                               table.add(c, born_sample(deltas_[c], rng));
                           }
                       },
                       [&](LrmModel const& m) {
                           for (std::uint64_t i = 0; i < runs; ++i)
                           {
                               // The pair is prepared before the settings exist
                               int cls = sample_class(m.weights, rng);
                               int c = rng.uniform4();
                               table.add(c, lrm_outcome(cls, configs_[c]));
                           }
                       },
                       [&](SausageModel const&) {
                           for (std::uint64_t i = 0; i < runs; ++i)
                           {
                               DRVector dr = sample_dr(rng);
                               int c = rng.uniform4();
                               table.add(c, sausage_run(dr, configs_[c]));
                           }
                       },
                       [&](BranchModel const&) {
                           for (std::uint64_t i = 0; i < runs; ++i)
                           {
                               int c = rng.uniform4();
                               table.add(c, pick_branch(cumulative_[c], rng));
                           }
                       },
                   },
                   model_);
    }

  private:
    Model model_;
    std::array<AngleConfig, AngleConfig::count> configs_;
    std::array<double, AngleConfig::count> deltas_{};
    std::array<std::array<BranchCount, 4>, AngleConfig::count> cumulative_{};
};
}  // namespace

//---------------------------------------------------------------------------//
std::string_view model_tag(Model const& model)
{
    return std::visit(Overloaded{
                          [](QuantumRef const&) { return std::string_view{"quantum"}; },
                          [](LrmModel const&) { return std::string_view{"lrm"}; },
                          [](SausageModel const&) { return std::string_view{"sausage"}; },
                          [](BranchModel const&) { return std::string_view{"branch"}; },
                      },
                      model);
}

Model make_model(std::string_view tag, std::optional<ClassWeights> weights,
                 std::optional<std::uint64_t> z_tilde)
{
    if (weights && tag != "lrm")
        throw std::invalid_argument("class weights only apply to the lrm model");
    if (z_tilde && tag != "branch")
        throw std::invalid_argument("ztilde only applies to the branch model");

    if (tag == "quantum")
        return QuantumRef{};
    if (tag == "sausage")
        return SausageModel{};
    if (tag == "lrm")
    {
        if (!weights)
            throw std::invalid_argument("the lrm model needs class weights");
        return LrmModel{*weights};
    }
    if (tag == "branch")
    {
        BranchModel m;
        if (z_tilde)
            m.z_tilde = *z_tilde;
        if (m.z_tilde == 0)
            throw std::invalid_argument("ztilde must be >= 1");
        return m;
    }
    throw std::invalid_argument("unknown model '" + std::string{tag} + "'");
}

//---------------------------------------------------------------------------//
Outcome born_sample(double delta, RngStream& rng)
{
    double s = std::sin(delta);
    bool equal = rng.uniform() < s * s;
    bool first = rng.coin();
    if (equal)
        return first ? Outcome{0, 0} : Outcome{1, 1};
    return first ? Outcome{0, 1} : Outcome{1, 0};
}

CounterTable run_experiment(Schedule const& schedule, Execution exec)
{
    if (schedule.n_total < 4)
        throw std::invalid_argument("a schedule needs at least 4 runs");
    TrialSampler sampler{schedule.model, schedule.bell};
    return kernels::accumulate(exec, schedule.n_total, schedule.seed, sampler);
}

BellReport bell_statistic(CounterTable const& table)
{
    BellReport report = bell_check(table);
    double n = table.total();
    if (n > 0)
    {
        double var = 0;
        for (double x : {table.unequal(0, 2), table.unequal(0, 1), table.equal(1, 2)})
        {
            double p = x / n;
            var += n * p * (1 - p);
        }
        report.sigma = std::sqrt(var);
    }
    return report;
}

//---------------------------------------------------------------------------//
std::vector<double> linear_grid(double start, double stop, int steps)
{
    if (steps < 0)
        throw std::invalid_argument("grid step count must be non-negative");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(steps));
    if (steps == 1)
    {
        grid.push_back(start);
        return grid;
    }
    for (int i = 0; i < steps; ++i)
    {
        // Pin the last point to stop exactly
        grid.push_back(i + 1 == steps ? stop
                                      : start + (stop - start) * i / (steps - 1));
    }
    return grid;
}

SweepCurve sweep(Model const& model, std::span<double const> delta_grid,
                 std::uint64_t n_per_point, std::uint64_t seed, Execution exec)
{
    if (std::holds_alternative<LrmModel>(model))
    {
        throw std::invalid_argument("the lrm model is only defined at the Bell "
                                    "settings and cannot be swept");
    }
    bool monte_carlo = !std::holds_alternative<BranchModel>(model);
    if (monte_carlo && !delta_grid.empty() && n_per_point == 0)
        throw std::invalid_argument("a Monte Carlo sweep needs runs per point");
    if (!monte_carlo)
        require_joint_reading_allowed();

    SweepCurve curve;
    curve.model = std::string{model_tag(model)};
    for (std::size_t i = 0; i < delta_grid.size(); ++i)
    {
        double d = delta_grid[i];
        SweepPoint pt;
        pt.delta = d;
        double s = std::sin(d);
        pt.p_born = s * s;
        if (std::fabs(d) <= half_pi)
            pt.p_volume = 2 * std::fabs(d) / pi;

        std::uint64_t point_seed = RngStream::derive_seed(seed, i);
        if (auto const* branch = std::get_if<BranchModel>(&model))
        {
            pt.p_model = branch_probabilities(quadrant_rebranch(d, branch->z_tilde)).equal();
        }
        else if (std::holds_alternative<SausageModel>(model))
        {
            CounterTable t = kernels::classify_uniform(Angle{0.0}, Angle{d}, n_per_point,
                                                       point_seed, exec);
            pt.p_model = t.equal(0) / t.config_total(0);
        }
        else
        {
            CounterTable t = kernels::accumulate(
                exec, n_per_point, point_seed,
                [d](RngStream& rng, std::uint64_t runs, CounterTable& table) {
                    for (std::uint64_t r = 0; r < runs; ++r)
                        table.add(0, born_sample(d, rng));
                });
            pt.p_model = t.equal(0) / t.config_total(0);
        }
        curve.points.push_back(pt);
    }
    return curve;
}

}  // namespace bellworlds
