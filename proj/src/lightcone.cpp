//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file lightcone.cpp
//---------------------------------------------------------------------------//
#include "bellworlds/lightcone.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace bellworlds
{
namespace
{
constexpr std::array kind_names{
    std::pair{EventKind::creation, std::string_view{"Creation"}},
    std::pair{EventKind::choice_alice, std::string_view{"ChoiceAlice"}},
    std::pair{EventKind::choice_bob, std::string_view{"ChoiceBob"}},
    std::pair{EventKind::measure_alice, std::string_view{"MeasureAlice"}},
    std::pair{EventKind::measure_bob, std::string_view{"MeasureBob"}},
    std::pair{EventKind::overlap, std::string_view{"Overlap"}},
};

// Relative tolerance for the light-cone boundary
constexpr double cone_tol = 1e-12;
}  // namespace

std::string_view to_string(EventKind kind)
{
    for (auto const& [k, name] : kind_names)
    {
        if (k == kind)
            return name;
    }
    return "Unknown";
}

EventKind parse_event_kind(std::string_view text)
{
    for (auto const& [k, name] : kind_names)
    {
        if (name == text)
            return k;
    }
    throw std::invalid_argument("unknown event kind '" + std::string{text} + "'");
}

std::string_view to_string(IntervalKind kind)
{
    switch (kind)
    {
        case IntervalKind::timelike: return "timelike";
        case IntervalKind::lightlike: return "lightlike";
        case IntervalKind::spacelike: return "spacelike";
    }
    return "unknown";
}

//---------------------------------------------------------------------------//
SpacetimeEvent const& EventLog::get(EventKind kind) const
{
    SpacetimeEvent const* found = nullptr;
    for (auto const& e : events)
    {
        if (e.kind != kind)
            continue;
        if (found)
            throw std::invalid_argument("malformed log: repeated " + std::string{to_string(kind)});
        found = &e;
    }
    if (!found)
        throw std::invalid_argument("malformed log: missing " + std::string{to_string(kind)});
    return *found;
}

std::optional<std::string> EventLog::validate() const
{
    try
    {
        for (auto const& [kind, name] : kind_names)
            get(kind);
    }
    catch (std::invalid_argument const& e)
    {
        return e.what();
    }
    double L = half_separation;
    auto const& c = get(EventKind::creation);
    if (c.t != 0 || c.x != 0)
        return "creation must be at the origin";
    auto const& ma = get(EventKind::measure_alice);
    auto const& mb = get(EventKind::measure_bob);
    if (ma.t != L || ma.x != -L || mb.t != L || mb.x != L)
        return "measurements must be at (L, -L) and (L, +L)";
    for (auto kind : {EventKind::choice_alice, EventKind::choice_bob})
    {
        auto const& ch = get(kind);
        if (!(ch.t > 0 && ch.t < L))
            return std::string{to_string(kind)} + " must lie strictly between creation and measurement";
    }
    if (!std::is_sorted(events.begin(), events.end(),
                        [](auto const& l, auto const& r) { return l.t < r.t; }))
        return "events are not time ordered";
    return std::nullopt;
}

std::string EventLog::serialize() const
{
    std::ostringstream out;
    out << std::setprecision(17);
    for (auto const& e : events)
        out << to_string(e.kind) << ' ' << e.t << ' ' << e.x << '\n';
    return out.str();
}

EventLog EventLog::parse(std::istream& in, double half_separation)
{
    EventLog log;
    log.half_separation = half_separation;
    std::string line;
    while (std::getline(in, line))
    {
        std::istringstream fields{line};
        std::string kind;
        SpacetimeEvent e;
        if (!(fields >> kind))
            continue;
        if (!(fields >> e.t >> e.x))
            throw std::invalid_argument("bad event line '" + line + "'");
        e.kind = parse_event_kind(kind);
        log.events.push_back(e);
    }
    return log;
}

EventLog build_schedule(double half_separation, double t_choice, double front_speed)
{
    double L = half_separation;
    if (!(L > 0) || !std::isfinite(L))
        throw std::invalid_argument("half separation L must be positive");
    if (!(t_choice > 0 && t_choice < L))
        throw std::invalid_argument("choice time must lie strictly inside (0, L)");
    if (!(front_speed > 0 && front_speed <= 1))
        throw std::invalid_argument("front speed must lie in (0, 1]");

    EventLog log;
    log.half_separation = L;
    log.events = {
        {EventKind::creation, 0, 0},
        {EventKind::choice_alice, t_choice, -L},
        {EventKind::choice_bob, t_choice, L},
        {EventKind::measure_alice, L, -L},
        {EventKind::measure_bob, L, L},
        {EventKind::overlap, L + L / front_speed, 0},
    };
    return log;
}

//---------------------------------------------------------------------------//
IntervalKind interval_kind(SpacetimeEvent const& e1, SpacetimeEvent const& e2)
{
    double dt = std::fabs(e2.t - e1.t);
    double dx = std::fabs(e2.x - e1.x);
    double scale = std::max({dt, dx, 1.0});
    if (std::fabs(dt - dx) <= cone_tol * scale)
        return IntervalKind::lightlike;
    return dt > dx ? IntervalKind::timelike : IntervalKind::spacelike;
}

bool can_influence(SpacetimeEvent const& cause, SpacetimeEvent const& effect)
{
    double dt = effect.t - cause.t;
    double dx = std::fabs(effect.x - cause.x);
    double scale = std::max({std::fabs(dt), dx, 1.0});
    return dt >= -cone_tol * scale && dt - dx >= -cone_tol * scale;
}

Interval branch_front(SpacetimeEvent const& origin, double t, double speed)
{
    if (t < origin.t)
        throw std::invalid_argument("front time precedes its origin");
    if (!(speed > 0 && speed <= 1))
        throw std::invalid_argument("front speed must lie in (0, 1]");
    double reach = speed * (t - origin.t);
    return Interval{origin.x - reach, origin.x + reach};
}

CausalReport causal_audit(EventLog const& log, double front_speed)
{
    auto const& creation = log.get(EventKind::creation);
    auto const& choice_a = log.get(EventKind::choice_alice);
    auto const& choice_b = log.get(EventKind::choice_bob);
    auto const& measure_a = log.get(EventKind::measure_alice);
    auto const& measure_b = log.get(EventKind::measure_bob);
    auto const& overlap = log.get(EventKind::overlap);

    CausalReport report;
    report.alice_choice_vs_bob_measure = interval_kind(choice_a, measure_b);
    report.bob_choice_vs_alice_measure = interval_kind(choice_b, measure_a);
    report.settings_reach_creation = can_influence(choice_a, creation)
                                     || can_influence(choice_b, creation);

    auto reaches_source = [&](SpacetimeEvent const& choice) {
        return overlap.t >= choice.t
               && branch_front(choice, overlap.t, front_speed).contains(creation.x);
    };
    report.creation_in_branch_of_settings = reaches_source(choice_a)
                                            && reaches_source(choice_b);
    return report;
}

}  // namespace bellworlds
