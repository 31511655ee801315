//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file branching.cpp
//---------------------------------------------------------------------------//
#include "bellworlds/branching.hpp"

#include <algorithm>
#include <cfenv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bellworlds
{
namespace
{
constexpr double domain_slack = 1e-12;
constexpr std::uint64_t max_checked_descendants = std::uint64_t{1} << 20;

//! Round half to even regardless of the caller's rounding mode.
BranchCount round_half_even(BranchCount x)
{
    int saved = std::fegetround();
    std::fesetround(FE_TONEAREST);
    BranchCount r = std::nearbyint(x);
    std::fesetround(saved);
    return r;
}

void require_z_tilde(std::uint64_t z_tilde)
{
    if (z_tilde == 0)
        throw std::invalid_argument("rebranch multiplier z_tilde must be >= 1");
}
}  // namespace

BranchCount BranchEnsemble::total() const
{
    return counts[0] + counts[1] + counts[2] + counts[3];
}

//---------------------------------------------------------------------------//
BranchEnsemble quadrant_rebranch(double delta, std::uint64_t z_tilde)
{
    require_z_tilde(z_tilde);
    if (!(std::fabs(delta) <= half_pi + domain_slack))
        throw std::domain_error("quadrant rebranching needs |delta| <= pi/2");

    long double s = std::sin(static_cast<long double>(delta));
    long double c = std::cos(static_cast<long double>(delta));
    auto z = static_cast<long double>(z_tilde);
    BranchCount equal = round_half_even(z * s * s);
    BranchCount unequal = round_half_even(z * c * c);

    BranchEnsemble e;
    e.mechanism = Mechanism::quadrant;
    e.z_tilde = z_tilde;
    e.counts = {equal, unequal, unequal, equal};
    return e;
}

//---------------------------------------------------------------------------//
BranchCount rebranch_multiplier(FiberSet const& remote, Angle rho, std::uint64_t z_tilde)
{
    return static_cast<BranchCount>(z_tilde) * remote.fiber_at(rho).weight;
}

DensityRebranch density_rebranch(FiberSet const& alice, FiberSet const& bob,
                                 std::uint64_t z_tilde)
{
    require_z_tilde(z_tilde);
    if (alice.side != Side::alice || bob.side != Side::bob)
        throw std::invalid_argument("density_rebranch expects (alice, bob) fiber sets");
    if (alice.cells_per_quadrant != bob.cells_per_quadrant)
        throw std::invalid_argument("mismatched grids: different wedge counts");
    double width = alice.cell_width();
    double shift = wrap_positive(bob.axis.value() - alice.axis.value()) / width;
    if (std::fabs(shift - std::round(shift)) > 1e-6)
        throw std::invalid_argument("mismatched grids: relative angle is not a whole "
                                    "number of wedges");

    DensityRebranch result;
    result.ensemble.mechanism = Mechanism::density;
    result.ensemble.z_tilde = z_tilde;
    auto z = static_cast<BranchCount>(z_tilde);

    for (auto const& fa : alice.fibers)
    {
        Fiber const& fb = bob.fiber_at(fa.rho);
        // Each side multiplies its own fibers by the other side's local count
        BranchCount from_alice = z * fa.weight * rebranch_multiplier(bob, fa.rho, z_tilde);
        BranchCount from_bob = z * fb.weight * rebranch_multiplier(alice, fb.rho, z_tilde);
        result.alice_side += from_alice;
        result.bob_side += from_bob;
        result.dangling += std::fabs(from_alice - from_bob);

        Outcome label = classify_world(fa.rho, alice.axis, bob.axis);
        result.ensemble.counts[label.index()] += from_alice;
    }
    return result;
}

double density_overlap(DensityFn const& density, double delta)
{
    if (!(delta >= 0 && delta <= half_pi + domain_slack))
        throw std::domain_error("density overlap needs 0 <= delta <= pi/2");
    delta = std::min(delta, half_pi);
    if (delta == 0)
        return 0;

    // Composite Simpson on a grid at least as fine as the default wedges
    int n = 2 * static_cast<int>(std::ceil(delta / half_pi * default_cells_per_quadrant));
    n = std::max(n, 2);
    double h = delta / n;
    auto integrand = [&](double tau) { return density(tau) * density(delta - tau); };
    double sum = integrand(0) + integrand(delta);
    for (int i = 1; i < n; ++i)
        sum += (i % 2 ? 4 : 2) * integrand(i * h);
    return 2 * sum * h / 3;
}

BranchProbabilities branch_probabilities(BranchEnsemble const& ensemble)
{
    BranchCount total = ensemble.total();
    if (!(total > 0))
        throw std::invalid_argument("branch ensemble is empty");
    BranchProbabilities probs;
    for (int o = 0; o < 4; ++o)
        probs.p[o] = static_cast<double>(ensemble.counts[o] / total);
    return probs;
}

//---------------------------------------------------------------------------//
DegeneracyReport dr_degeneracy(Angle rho, AngleConfig const& config,
                               DensityFn const& density, std::uint64_t z_tilde,
                               int cells_per_quadrant)
{
    require_z_tilde(z_tilde);
    FiberSet alice = grow_fibers(density, Side::alice, config.alpha(), cells_per_quadrant);
    FiberSet bob = grow_fibers(density, Side::bob, config.beta(), cells_per_quadrant);
    double width = alice.cell_width();

    DegeneracyReport report;
    report.ancestor_label = classify_world(rho, config);

    BranchCount multiplier = rebranch_multiplier(bob, rho, z_tilde);
    BranchCount rounded = std::max<BranchCount>(1, round_half_even(multiplier));
    report.preimage_count = static_cast<std::uint64_t>(rounded);

    // Wedges as offsets from rho: Alice's runs counterclockwise, Bob's
    // clockwise from their axes.
    double la = alice.local_angle(rho);
    double la_in = la - std::floor(la / width) * width;
    double lb = bob.local_angle(rho);
    double lb_in = lb - std::floor(lb / width) * width;
    double lo = std::max(-la_in, -(width - lb_in));
    double hi = std::min(width - la_in, lb_in);

    std::uint64_t checked = std::min(report.preimage_count, max_checked_descendants);
    for (std::uint64_t j = 0; j < checked; ++j)
    {
        double offset = lo + (static_cast<double>(j) + 0.5) / static_cast<double>(checked)
                                 * (hi - lo);
        Outcome label = classify_world(Angle{rho.value() + offset}, config);
        if (!(label == report.ancestor_label))
        {
            report.labels_identical = false;
            break;
        }
    }
    return report;
}

std::uint64_t fiber_requirement(double epsilon)
{
    if (!(epsilon > 0))
        throw std::domain_error("angular resolution must be positive");
    if (epsilon > half_pi + domain_slack)
        throw std::domain_error("angular resolution must not exceed pi/2");
    double s = std::sin(epsilon);
    double needed = 1 / (s * s);
    if (!(needed < 0x1.0p63))
        throw std::overflow_error("fiber requirement does not fit in 64 bits");
    // Absorb the last-ulp error of sin so exact integers are not bumped up
    double nearest = std::round(needed);
    if (std::fabs(needed - nearest) <= 8 * std::numeric_limits<double>::epsilon() * needed)
        return static_cast<std::uint64_t>(nearest);
    return static_cast<std::uint64_t>(std::ceil(needed));
}

}  // namespace bellworlds
