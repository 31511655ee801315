//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bellworlds/branching.hpp
//! Local rebranching where the two decoherence fronts overlap: branch
//! counts, probabilities by branch counting, loss of a unique actual world
//! and the resolution blow-up.
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cstdint>

#include "geometry.hpp"
#include "sausage.hpp"

namespace bellworlds
{
//! Branch multiplicities are large reals; long double holds every 64-bit
//! integer count exactly.
using BranchCount = long double;

enum class Mechanism
{
    density,   //!< fibers rebranch by the remote side's local density
    quadrant,  //!< four worlds per side rebranch by sin^2 / cos^2
};

//---------------------------------------------------------------------------//
struct BranchEnsemble
{
    //! Branch count per outcome index (00, 01, 10, 11)
    std::array<BranchCount, 4> counts{};
    Mechanism mechanism{Mechanism::quadrant};
    std::uint64_t z_tilde{1};

    BranchCount total() const;
    BranchCount equal() const { return counts[0] + counts[3]; }
    BranchCount unequal() const { return counts[1] + counts[2]; }
};

struct BranchProbabilities
{
    std::array<double, 4> p{};

    double equal() const { return p[0] + p[3]; }
    double unequal() const { return p[1] + p[2]; }
};

//---------------------------------------------------------------------------//
/*!
 * Quadrant mechanism: each E label gets round(z sin^2 delta) branches and
 * each U label round(z cos^2 delta), rounding half to even.
 */
BranchEnsemble quadrant_rebranch(double delta, std::uint64_t z_tilde);

//---------------------------------------------------------------------------//
//! Branches after density rebranching together with a per-side tally.
struct DensityRebranch
{
    BranchEnsemble ensemble;
    //! Branches counted from Alice's fibers (each times Bob's multiplier)
    BranchCount alice_side{0};
    //! Branches counted from Bob's fibers (each times Alice's multiplier)
    BranchCount bob_side{0};
    //! Total per-cell disagreement between the two sides
    BranchCount dangling{0};
};

/*!
 * Number of new branches a fiber at \c rho splits into on meeting the remote
 * side's fibers: z times the remote fiber weight at that angle.
 *
 * Reads only the remote set, i.e. the remote local angle at \c rho.
 */
BranchCount rebranch_multiplier(FiberSet const& remote, Angle rho,
                                std::uint64_t z_tilde);

/*!
 * Density mechanism on two fiber sets with aligned grids.
 *
 * Throws std::invalid_argument when the grids differ in resolution or the
 * relative angle is not a whole number of cells.
 */
DensityRebranch density_rebranch(FiberSet const& alice, FiberSet const& bob,
                                 std::uint64_t z_tilde);

//! 2 * integral_0^delta f(tau) f(delta - tau) dtau for 0 <= delta <= pi/2.
double density_overlap(DensityFn const& density, double delta);

BranchProbabilities branch_probabilities(BranchEnsemble const& ensemble);

//---------------------------------------------------------------------------//
struct DegeneracyReport
{
    //! Post-rebranch branches descending from the fiber at rho
    std::uint64_t preimage_count{0};
    //! All descendants carry the ancestor's (AB) label
    bool labels_identical{true};
    Outcome ancestor_label;
};

/*!
 * Follow the fiber at \c rho through the density rebranching.
 *
 * Descendants fill the overlap of the ancestor's wedge with the partner
 * wedge on Bob's side and are labeled where they sit. At least one
 * descendant always exists; labels are checked on at most 2^20 evenly
 * spaced descendants.
 */
DegeneracyReport dr_degeneracy(Angle rho, AngleConfig const& config,
                               DensityFn const& density, std::uint64_t z_tilde,
                               int cells_per_quadrant = default_cells_per_quadrant);

//! ceil(1 / sin^2 eps): fibers needed to keep one fiber at resolution eps.
std::uint64_t fiber_requirement(double epsilon);

}  // namespace bellworlds
