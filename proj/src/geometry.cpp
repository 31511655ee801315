//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file geometry.cpp
//---------------------------------------------------------------------------//
#include "bellworlds/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace bellworlds
{
namespace
{
// Slack for |delta| == pi/2 computed from differences of settings.
constexpr double domain_slack = 1e-12;

//! Reduce into [0, period).
double reduce(double x, double period)
{
    double r = std::fmod(x, period);
    if (r < 0)
        r += period;
    if (r >= period)
        r -= period;
    return r;
}
}  // namespace

double wrap_positive(double radians)
{
    return reduce(radians, two_pi);
}

double wrap_signed(double radians)
{
    double r = reduce(radians, two_pi);
    return r > pi ? r - two_pi : r;
}

Angle BellAngles::phi(int index) const
{
    switch (index)
    {
        case 0: return phi0;
        case 1: return phi1;
        case 2: return phi2;
    }
    throw std::out_of_range("Bell angle index must be 0, 1 or 2");
}

//---------------------------------------------------------------------------//
AngleConfig AngleConfig::make(int a, int b, BellAngles const& bell)
{
    if (a < 0 || a > 1 || b < 1 || b > 2)
    {
        throw std::invalid_argument("illegal setting pair (a=" + std::to_string(a)
                                    + ", b=" + std::to_string(b) + ")");
    }
    return AngleConfig{a, b, bell.phi(a), bell.phi(b)};
}

AngleConfig AngleConfig::from_index(int index, BellAngles const& bell)
{
    if (index < 0 || index >= count)
        throw std::out_of_range("config index must be in [0, 4)");
    return make(index / 2, index % 2 + 1, bell);
}

std::array<AngleConfig, AngleConfig::count> AngleConfig::all(BellAngles const& bell)
{
    return {from_index(0, bell), from_index(1, bell), from_index(2, bell),
            from_index(3, bell)};
}

std::string AngleConfig::label() const
{
    return std::to_string(a_) + std::to_string(b_);
}

//---------------------------------------------------------------------------//
std::string Outcome::label() const
{
    return std::string{static_cast<char>('0' + alice), static_cast<char>('0' + bob)};
}

Outcome Outcome::from_index(int index)
{
    if (index < 0 || index > 3)
        throw std::out_of_range("outcome index must be in [0, 4)");
    return Outcome{static_cast<std::uint8_t>(index / 2),
                   static_cast<std::uint8_t>(index % 2)};
}

double VolumeTable::operator[](Outcome o) const
{
    switch (o.index())
    {
        case 0: return v00;
        case 1: return v01;
        case 2: return v10;
        default: return v11;
    }
}

//---------------------------------------------------------------------------//
double delta(Angle alpha, Angle beta)
{
    return wrap_signed(beta.value() - alpha.value());
}

std::uint8_t alice_outcome(Angle rho, Angle alpha)
{
    return reduce(rho.value() - alpha.value(), pi) < half_pi ? 0 : 1;
}

std::uint8_t bob_outcome(Angle rho, Angle beta)
{
    return reduce(beta.value() - rho.value(), pi) < half_pi ? 0 : 1;
}

Outcome classify_world(Angle rho, Angle alpha, Angle beta)
{
    return Outcome{alice_outcome(rho, alpha), bob_outcome(rho, beta)};
}

Outcome classify_world(Angle rho, AngleConfig const& config)
{
    return classify_world(rho, config.alpha(), config.beta());
}

VolumeTable world_volumes(double delta)
{
    double mag = std::fabs(delta);
    if (!(mag <= half_pi + domain_slack))
    {
        throw std::domain_error("world volumes need |delta| <= pi/2, got "
                                + std::to_string(delta));
    }
    mag = std::fmin(mag, half_pi);
    double equal_half = mag / pi;
    double unequal_half = (1 - 2 * mag / pi) / 2;
    return VolumeTable{equal_half, unequal_half, unequal_half, equal_half};
}

}  // namespace bellworlds
