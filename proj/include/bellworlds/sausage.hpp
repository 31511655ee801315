//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bellworlds/sausage.hpp
//! Classical many-worlds model: a direct-realism pointer selects one world
//! of the cut cross-section, plus the fiber-growth variant with its
//! dangling-fiber diagnostics.
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <utility>
#include <vector>

#include "geometry.hpp"
#include "lrm.hpp"

namespace bellworlds
{
class RngStream;

//---------------------------------------------------------------------------//
/*!
 * Pointer to the one actual world, fixed when the pair is created.
 *
 * A pointer is never derived from a setting: the only factory taking
 * randomness is \c sample_dr, which sees nothing but the RNG. Settings enter
 * later, through \c sausage_run.
 */
class DRVector
{
  public:
    //! Pointer fixed at a known angle (reproductions and tests).
    explicit DRVector(Angle rho) : rho_{rho} {}

    Angle rho() const { return rho_; }

  private:
    Angle rho_;
};

DRVector sample_dr(RngStream& rng);

//! Outcome of the world the pointer selected, for settings chosen later.
Outcome sausage_run(DRVector const& dr, AngleConfig const& config);

//! Expected counters (n_total / 4) * V(AB) for each config.
CounterTable volume_counters(BellAngles const& bell, double n_total);

//---------------------------------------------------------------------------//
/*!
 * Angular fiber density on one quadrant, tau in [0, pi/2].
 *
 * Tabulated densities are linearly interpolated between knots and held
 * constant outside them. The density is rescaled on construction so that
 * four quadrants carry the fiber budget Z exactly.
 */
class DensityFn
{
  public:
    using Knot = std::pair<double, double>;

    static DensityFn constant(double budget);
    static DensityFn tabulated(std::vector<Knot> knots, double budget);
    //! Two whitespace-separated columns (tau, f); '#' starts a comment.
    static DensityFn read(std::istream& in, double budget);
    static DensityFn load(std::filesystem::path const& path, double budget);

    //! f(tau); tau is clamped to [0, pi/2]
    double operator()(double tau) const;
    //! Exact integral of f over [lo, hi] within one quadrant.
    double integral(double lo, double hi) const;
    double budget() const { return budget_; }
    bool is_constant() const { return knots_.size() == 1; }
    std::vector<Knot> const& knots() const { return knots_; }

  private:
    DensityFn(std::vector<Knot> knots, double budget);

    //! Integral of the unscaled interpolant over [0, x].
    double primitive(double x) const;

    std::vector<Knot> knots_;
    double budget_{0};
    double scale_{1};
};

//---------------------------------------------------------------------------//
enum class Side
{
    alice,
    bob
};

//! Wedge of fibers grown from one measurement.
struct Fiber
{
    Angle rho;           //!< global angle of the wedge center
    int quadrant{0};     //!< 0-3 counted from the side's axis
    int cell{0};         //!< wedge index inside its quadrant
    double weight{0};    //!< number of fibers in the wedge
};

/*!
 * Fibers of one side, replicated over all four quadrants.
 *
 * Alice's local angle increases counterclockwise from a, Bob's clockwise
 * from b.
 */
struct FiberSet
{
    Side side{Side::alice};
    Angle axis;
    int cells_per_quadrant{0};
    std::vector<Fiber> fibers;

    double cell_width() const { return half_pi / cells_per_quadrant; }
    double total_weight() const;
    //! Local angle (from the axis, with this side's chirality) of \c rho.
    double local_angle(Angle rho) const;
    //! Fiber whose wedge contains \c rho.
    Fiber const& fiber_at(Angle rho) const;
};

inline constexpr int default_cells_per_quadrant = 1024;

FiberSet grow_fibers(DensityFn const& density, Side side, Angle axis,
                     int cells_per_quadrant = default_cells_per_quadrant);

//---------------------------------------------------------------------------//
//! Result of pairing Alice's fibers with Bob's.
struct FiberMatch
{
    //! Matched weight per outcome index (00, 01, 10, 11)
    std::array<double, 4> matched{};
    //! Weight of fibers (from either side) left without a partner
    double dangling{0};

    double matched_total() const;
    double matched_equal() const { return matched[0] + matched[3]; }
};

/*!
 * Pair fibers whose global angles agree within \c tol and whose weights
 * agree within a relative 1e-9.
 *
 * A non-positive \c tol selects half a grid cell.
 */
FiberMatch match_fibers(FiberSet const& alice, FiberSet const& bob, double tol = 0);

}  // namespace bellworlds
