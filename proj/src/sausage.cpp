//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file sausage.cpp
//---------------------------------------------------------------------------//
#include "bellworlds/sausage.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "bellworlds/rng.hpp"

namespace bellworlds
{
namespace
{
constexpr double weight_rel_tol = 1e-9;

double circular_distance(double x, double y)
{
    return std::fabs(wrap_signed(x - y));
}
}  // namespace

//---------------------------------------------------------------------------//
DRVector sample_dr(RngStream& rng)
{
    return DRVector{Angle{rng.uniform() * two_pi}};
}

Outcome sausage_run(DRVector const& dr, AngleConfig const& config)
{
    return classify_world(dr.rho(), config);
}

CounterTable volume_counters(BellAngles const& bell, double n_total)
{
    CounterTable table;
    double per_config = n_total / AngleConfig::count;
    for (auto const& config : AngleConfig::all(bell))
    {
        VolumeTable v = world_volumes(delta(config.alpha(), config.beta()));
        for (int o = 0; o < 4; ++o)
        {
            Outcome outcome = Outcome::from_index(o);
            table.add(config.index(), outcome, per_config * v[outcome]);
        }
    }
    return table;
}

//---------------------------------------------------------------------------//
// DENSITY
//---------------------------------------------------------------------------//
DensityFn::DensityFn(std::vector<Knot> knots, double budget)
    : knots_{std::move(knots)}, budget_{budget}
{
    if (!std::isfinite(budget_) || budget_ <= 0)
        throw std::invalid_argument("fiber budget must be positive and finite");
    if (knots_.empty())
        throw std::invalid_argument("density needs at least one knot");
    for (std::size_t i = 0; i < knots_.size(); ++i)
    {
        auto [tau, f] = knots_[i];
        if (!std::isfinite(tau) || !std::isfinite(f))
            throw std::invalid_argument("density values must be finite");
        if (f < 0)
            throw std::invalid_argument("density values must be non-negative");
        if (tau < 0 || tau > half_pi)
            throw std::invalid_argument("density knots must lie in [0, pi/2]");
        if (i > 0 && !(tau > knots_[i - 1].first))
            throw std::invalid_argument("density knots must be strictly increasing");
    }
    double area = primitive(half_pi);
    if (!(area > 0))
        throw std::invalid_argument("density integrates to zero");
    scale_ = budget_ / (4 * area);
}

DensityFn DensityFn::constant(double budget)
{
    return DensityFn{{{0.0, 1.0}}, budget};
}

DensityFn DensityFn::tabulated(std::vector<Knot> knots, double budget)
{
    return DensityFn{std::move(knots), budget};
}

DensityFn DensityFn::read(std::istream& in, double budget)
{
    std::vector<Knot> knots;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields{line};
        double tau, f;
        if (!(fields >> tau))
            continue;
        std::string extra;
        if (!(fields >> f) || (fields >> extra))
        {
            throw std::invalid_argument("density line " + std::to_string(lineno)
                                        + ": expected two columns");
        }
        knots.emplace_back(tau, f);
    }
    return tabulated(std::move(knots), budget);
}

DensityFn DensityFn::load(std::filesystem::path const& path, double budget)
{
    std::ifstream in{path};
    if (!in)
        throw std::runtime_error("cannot open density file " + path.string());
    return read(in, budget);
}

double DensityFn::operator()(double tau) const
{
    tau = std::clamp(tau, 0.0, half_pi);
    if (tau <= knots_.front().first)
        return scale_ * knots_.front().second;
    if (tau >= knots_.back().first)
        return scale_ * knots_.back().second;
    auto upper = std::upper_bound(knots_.begin(), knots_.end(), tau,
                                  [](double t, Knot const& k) { return t < k.first; });
    auto lower = upper - 1;
    double frac = (tau - lower->first) / (upper->first - lower->first);
    return scale_ * (lower->second + frac * (upper->second - lower->second));
}

double DensityFn::primitive(double x) const
{
    x = std::clamp(x, 0.0, half_pi);
    auto const& front = knots_.front();
    if (x <= front.first)
        return x * front.second;
    double sum = front.first * front.second;
    for (std::size_t i = 1; i < knots_.size(); ++i)
    {
        auto [t0, f0] = knots_[i - 1];
        auto [t1, f1] = knots_[i];
        if (x <= t1)
        {
            double fx = f0 + (x - t0) / (t1 - t0) * (f1 - f0);
            return sum + (x - t0) * (f0 + fx) / 2;
        }
        sum += (t1 - t0) * (f0 + f1) / 2;
    }
    return sum + (x - knots_.back().first) * knots_.back().second;
}

double DensityFn::integral(double lo, double hi) const
{
    return scale_ * (primitive(hi) - primitive(lo));
}

//---------------------------------------------------------------------------//
// FIBERS
//---------------------------------------------------------------------------//
double FiberSet::total_weight() const
{
    double sum = 0;
    for (auto const& f : fibers)
        sum += f.weight;
    return sum;
}

double FiberSet::local_angle(Angle rho) const
{
    double diff = side == Side::alice ? rho.value() - axis.value()
                                      : axis.value() - rho.value();
    return wrap_positive(diff);
}

Fiber const& FiberSet::fiber_at(Angle rho) const
{
    double local = local_angle(rho);
    int quadrant = std::min(3, static_cast<int>(local / half_pi));
    double within = local - quadrant * half_pi;
    int cell = std::clamp(static_cast<int>(within / cell_width()), 0,
                          cells_per_quadrant - 1);
    return fibers.at(static_cast<std::size_t>(quadrant) * cells_per_quadrant + cell);
}

FiberSet grow_fibers(DensityFn const& density, Side side, Angle axis,
                     int cells_per_quadrant)
{
    if (cells_per_quadrant < 1)
        throw std::invalid_argument("need at least one wedge per quadrant");
    FiberSet set;
    set.side = side;
    set.axis = axis;
    set.cells_per_quadrant = cells_per_quadrant;
    double width = set.cell_width();
    double sign = side == Side::alice ? 1.0 : -1.0;

    std::vector<double> weights(cells_per_quadrant);
    for (int k = 0; k < cells_per_quadrant; ++k)
    {
        weights[k] = density.integral(k * width, (k + 1) * width);
        if (!std::isfinite(weights[k]))
            throw std::invalid_argument("density produced a non-finite fiber weight");
    }

    set.fibers.reserve(4 * static_cast<std::size_t>(cells_per_quadrant));
    for (int q = 0; q < 4; ++q)
    {
        for (int k = 0; k < cells_per_quadrant; ++k)
        {
            double local = q * half_pi + (k + 0.5) * width;
            set.fibers.push_back(
                Fiber{Angle{axis.value() + sign * local}, q, k, weights[k]});
        }
    }
    return set;
}

//---------------------------------------------------------------------------//
double FiberMatch::matched_total() const
{
    return matched[0] + matched[1] + matched[2] + matched[3];
}

FiberMatch match_fibers(FiberSet const& alice, FiberSet const& bob, double tol)
{
    if (alice.side != Side::alice || bob.side != Side::bob)
        throw std::invalid_argument("match_fibers expects (alice, bob) fiber sets");
    if (tol <= 0)
        tol = 0.5 * std::min(alice.cell_width(), bob.cell_width());

    std::vector<std::size_t> order(bob.fibers.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&bob](std::size_t l, std::size_t r) {
        return bob.fibers[l].rho.value() < bob.fibers[r].rho.value();
    });
    std::vector<double> sorted_rho(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        sorted_rho[i] = bob.fibers[order[i]].rho.value();

    std::vector<bool> used(bob.fibers.size(), false);
    FiberMatch result;
    for (auto const& fa : alice.fibers)
    {
        // Nearest Bob fiber, looking at both neighbors with wrap-around
        std::size_t best = order.size();
        double best_dist = tol;
        if (!order.empty())
        {
            auto it = std::lower_bound(sorted_rho.begin(), sorted_rho.end(),
                                       fa.rho.value());
            std::size_t pos = static_cast<std::size_t>(it - sorted_rho.begin());
            for (std::size_t cand : {pos % order.size(),
                                     (pos + order.size() - 1) % order.size()})
            {
                double d = circular_distance(sorted_rho[cand], fa.rho.value());
                if (d <= best_dist && !used[order[cand]])
                {
                    best = cand;
                    best_dist = d;
                }
            }
        }
        if (best == order.size())
        {
            result.dangling += fa.weight;
            continue;
        }
        Fiber const& fb = bob.fibers[order[best]];
        double scale = std::max(std::fabs(fa.weight), std::fabs(fb.weight));
        if (std::fabs(fa.weight - fb.weight) > weight_rel_tol * scale)
        {
            result.dangling += fa.weight;
            continue;
        }
        used[order[best]] = true;
        Outcome o = classify_world(fa.rho, alice.axis, bob.axis);
        result.matched[o.index()] += fa.weight;
    }
    for (std::size_t i = 0; i < bob.fibers.size(); ++i)
    {
        if (!used[i])
            result.dangling += bob.fibers[i].weight;
    }
    return result;
}

}  // namespace bellworlds
