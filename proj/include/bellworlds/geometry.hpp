//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bellworlds/geometry.hpp
//! Planar cross-section geometry: angles, measurement settings, quadrant
//! cutting of world angles and the parallel-world volumes.
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cstdint>
#include <numbers>
#include <string>

namespace bellworlds
{
inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2 * std::numbers::pi;
inline constexpr double half_pi = std::numbers::pi / 2;

//! Wrap any real into (-pi, pi].
double wrap_signed(double radians);

//! Wrap any real into [0, 2pi).
double wrap_positive(double radians);

//---------------------------------------------------------------------------//
/*!
 * Direction in the plane transverse to the photon path, in radians.
 *
 * The stored value is always canonical, i.e. in [0, 2pi).
 */
class Angle
{
  public:
    constexpr Angle() = default;
    explicit Angle(double radians) : value_{wrap_positive(radians)} {}

    static Angle from_degrees(double degrees)
    {
        return Angle{degrees * pi / 180};
    }

    double value() const { return value_; }

    friend bool operator==(Angle, Angle) = default;

  private:
    double value_{0};
};

//---------------------------------------------------------------------------//
//! The three settings used for the Bell proof.
struct BellAngles
{
    Angle phi0{0.0};
    Angle phi1{3 * pi / 8};
    Angle phi2{pi / 8};

    Angle phi(int index) const;
};

//---------------------------------------------------------------------------//
/*!
 * One of the four legal (a, b) choices with resolved axis directions.
 *
 * Alice picks a in {0, 1}, Bob picks b in {1, 2}. Construct through
 * \c make so that illegal pairs cannot exist.
 */
class AngleConfig
{
  public:
    static constexpr int count = 4;

    static AngleConfig make(int a, int b, BellAngles const& bell = {});
    //! Config by dense index: 0=(0,1), 1=(0,2), 2=(1,1), 3=(1,2).
    static AngleConfig from_index(int index, BellAngles const& bell = {});
    static std::array<AngleConfig, count> all(BellAngles const& bell = {});

    int a() const { return a_; }
    int b() const { return b_; }
    Angle alpha() const { return alpha_; }
    Angle beta() const { return beta_; }
    int index() const { return 2 * a_ + (b_ - 1); }
    std::string label() const;

  private:
    AngleConfig(int a, int b, Angle alpha, Angle beta)
        : a_{a}, b_{b}, alpha_{alpha}, beta_{beta}
    {
    }

    int a_;
    int b_;
    Angle alpha_;
    Angle beta_;
};

//---------------------------------------------------------------------------//
//! Joint measurement result (A, B).
struct Outcome
{
    std::uint8_t alice{0};
    std::uint8_t bob{0};

    //! E ("equal") outcome
    bool is_equal() const { return alice == bob; }
    //! Dense index 2A + B: 0="00", 1="01", 2="10", 3="11".
    int index() const { return 2 * alice + bob; }
    std::string label() const;

    static Outcome from_index(int index);

    friend bool operator==(Outcome, Outcome) = default;
};

//---------------------------------------------------------------------------//
//! Unit-volume split of the cross-section into the four world types.
struct VolumeTable
{
    double v00{0};
    double v01{0};
    double v10{0};
    double v11{0};

    double equal() const { return v00 + v11; }
    double unequal() const { return v01 + v10; }
    double operator[](Outcome o) const;
};

//---------------------------------------------------------------------------//
// OPERATIONS
//---------------------------------------------------------------------------//

//! Signed relative angle beta - alpha in (-pi, pi].
double delta(Angle alpha, Angle beta);

/*!
 * Alice's result for the world at angle rho.
 *
 * Zero worlds lie counterclockwise from a in [0, pi/2) and in the opposing
 * quadrant. Boundary points belong to the quadrant whose lower edge they are.
 */
std::uint8_t alice_outcome(Angle rho, Angle alpha);

//! Bob's result; same rule with the quadrant measured clockwise from b.
std::uint8_t bob_outcome(Angle rho, Angle beta);

Outcome classify_world(Angle rho, Angle alpha, Angle beta);
Outcome classify_world(Angle rho, AngleConfig const& config);

/*!
 * Closed-form volumes of the four parallel-world types.
 *
 * Only defined for |delta| <= pi/2; throws std::domain_error otherwise.
 */
VolumeTable world_volumes(double delta);

}  // namespace bellworlds
