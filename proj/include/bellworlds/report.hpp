//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bellworlds/report.hpp
//! CSV and JSON serialization of counter tables, sweep curves, run reports
//! and causal audits. Column order and number formatting are fixed so that
//! equal inputs give byte-identical text.
//---------------------------------------------------------------------------//
#pragma once

#include <string>
#include <string_view>

#include "harness.hpp"
#include "lightcone.hpp"
#include "lrm.hpp"

namespace bellworlds
{
enum class Format
{
    csv,
    json,
};

//! "csv" or "json"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view text);

//! Shortest text that reads back to the same double.
std::string format_number(double value);

//---------------------------------------------------------------------------//
// COUNTER TABLES
//
// CSV: header "a,b,outcome,count", sixteen data rows ordered by config
// (01, 02, 11, 12) then outcome (00, 01, 10, 11), then one "total" row per
// config.
//---------------------------------------------------------------------------//
std::string emit_counters(CounterTable const& table, Format format);
//! Inverse of emit_counters; also accepts a full JSON run report.
CounterTable parse_counters(std::string_view text, Format format);

//---------------------------------------------------------------------------//
// SWEEP CURVES
//
// CSV: "delta,p_e_model,p_e_born,p_e_volume" with an empty volume field
// where undefined. JSON: array of objects with the same four keys.
//---------------------------------------------------------------------------//
std::string emit_curve(SweepCurve const& curve, Format format);
SweepCurve parse_curve(std::string_view text, Format format);

//---------------------------------------------------------------------------//
// RUN REPORTS AND AUDITS
//---------------------------------------------------------------------------//
std::string emit_bell(BellReport const& report, Format format);

/*!
 * Counters, Bell statistic and the (advisory) causal audit of a run.
 *
 * The CSV form is the counter table, a blank line, then a one-row Bell
 * section.
 */
std::string emit_run_report(Schedule const& schedule, CounterTable const& table,
                            BellReport const& bell, CausalReport const& audit,
                            Format format);

enum class AuditFormat
{
    text,
    json,
};

std::string emit_audit(EventLog const& log, CausalReport const& report,
                       AuditFormat format);

}  // namespace bellworlds
