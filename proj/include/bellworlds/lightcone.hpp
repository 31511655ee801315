//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bellworlds/lightcone.hpp
//! 1+1D event model of one run (c = 1): emission at the origin, setting
//! choices in flight, measurements at -L and +L and the meeting point of
//! the two branching fronts.
//---------------------------------------------------------------------------//
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bellworlds
{
enum class EventKind
{
    creation,
    choice_alice,
    choice_bob,
    measure_alice,
    measure_bob,
    overlap,
};

std::string_view to_string(EventKind kind);
EventKind parse_event_kind(std::string_view text);

struct SpacetimeEvent
{
    EventKind kind{EventKind::creation};
    double t{0};
    double x{0};
};

//---------------------------------------------------------------------------//
/*!
 * Time-ordered events of a single run; Alice sits at -L, Bob at +L.
 *
 * Logs from \c build_schedule satisfy all ordering invariants. Logs read
 * from text or assembled by hand may not; \c validate reports the first
 * broken invariant.
 */
struct EventLog
{
    double half_separation{1};
    std::vector<SpacetimeEvent> events;

    //! The unique event of a kind; throws std::invalid_argument otherwise.
    SpacetimeEvent const& get(EventKind kind) const;
    //! Empty when well formed, else a description of the violation.
    std::optional<std::string> validate() const;

    //! One "kind t x" line per event.
    std::string serialize() const;
    static EventLog parse(std::istream& in, double half_separation);
};

/*!
 * Standard run: creation at the origin, both choices at \c t_choice,
 * measurements at t = L, and the fronts meeting at x = 0.
 */
EventLog build_schedule(double half_separation = 1.0, double t_choice = 0.5,
                        double front_speed = 1.0);

//---------------------------------------------------------------------------//
enum class IntervalKind
{
    timelike,
    lightlike,
    spacelike,
};

std::string_view to_string(IntervalKind kind);

IntervalKind interval_kind(SpacetimeEvent const& e1, SpacetimeEvent const& e2);

//! True when \c effect lies in the closed future light cone of \c cause.
bool can_influence(SpacetimeEvent const& cause, SpacetimeEvent const& effect);

//---------------------------------------------------------------------------//
struct Interval
{
    double lo{0};
    double hi{0};

    bool contains(double x) const { return lo <= x && x <= hi; }
    double half_width() const { return (hi - lo) / 2; }
};

//! Region reached at time \c t by a branching front leaving \c origin.
Interval branch_front(SpacetimeEvent const& origin, double t, double speed = 1.0);

//---------------------------------------------------------------------------//
struct CausalReport
{
    IntervalKind alice_choice_vs_bob_measure{IntervalKind::spacelike};
    IntervalKind bob_choice_vs_alice_measure{IntervalKind::spacelike};
    //! Some choice's future cone contains the creation event
    bool settings_reach_creation{false};
    //! Both choices' fronts cover the source location before the fronts of
    //! the two measurements meet there
    bool creation_in_branch_of_settings{false};

    bool choices_spacelike() const
    {
        return alice_choice_vs_bob_measure == IntervalKind::spacelike
               && bob_choice_vs_alice_measure == IntervalKind::spacelike;
    }
    //! Hidden variables fixed at creation cannot depend on the settings
    bool settings_independent_of_source() const { return !settings_reach_creation; }
};

/*!
 * Check which events of a log can know about the settings.
 *
 * Requires exactly one event of every kind; ordering is not required so
 * that deliberately broken logs can be audited.
 */
CausalReport causal_audit(EventLog const& log, double front_speed = 1.0);

}  // namespace bellworlds
