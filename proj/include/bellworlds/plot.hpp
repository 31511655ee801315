//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bellworlds/plot.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <filesystem>
#include <string>

#include "harness.hpp"

namespace bellworlds
{
/*!
 * Standalone SVG of P(E) against delta with three series: the model, the
 * Born curve sin^2(delta) and the volume law 2|delta|/pi.
 *
 * Series with two or more points are drawn as polylines; a single point is
 * drawn as markers only. The x axis is ticked at multiples of pi/8.
 */
std::string render_svg(SweepCurve const& curve);

//! Write render_svg(curve) to \c path.
void emit_plot(SweepCurve const& curve, std::filesystem::path const& path);

//! Tick label for k * pi / 8, e.g. "0", "π/8", "3π/8", "−π/4".
std::string pi_eighths_label(int k);

}  // namespace bellworlds
