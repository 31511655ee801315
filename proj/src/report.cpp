//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file report.cpp
//---------------------------------------------------------------------------//
#include "bellworlds/report.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace bellworlds
{
namespace
{
using nlohmann::json;

constexpr std::string_view counter_header = "a,b,outcome,count";
constexpr std::string_view curve_header = "delta,p_e_model,p_e_born,p_e_volume";
constexpr std::string_view bell_header = "lhs,rhs,margin,sigma,violated";

std::vector<std::string> split(std::string_view line, char sep)
{
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true)
    {
        std::size_t next = line.find(sep, pos);
        fields.emplace_back(line.substr(pos, next == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : next - pos));
        if (next == std::string_view::npos)
            return fields;
        pos = next + 1;
    }
}

std::vector<std::string_view> lines_of(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size())
    {
        std::size_t next = text.find('\n', pos);
        if (next == std::string_view::npos)
            next = text.size();
        std::string_view line = text.substr(pos, next - pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        pos = next + 1;
    }
    return lines;
}

double parse_number(std::string_view field)
{
    double value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw std::invalid_argument("bad number '" + std::string{field} + "'");
    return value;
}

Outcome parse_outcome(std::string_view label)
{
    if (label.size() != 2 || (label[0] != '0' && label[0] != '1')
        || (label[1] != '0' && label[1] != '1'))
    {
        throw std::invalid_argument("bad outcome label '" + std::string{label} + "'");
    }
    return Outcome{static_cast<std::uint8_t>(label[0] - '0'),
                   static_cast<std::uint8_t>(label[1] - '0')};
}

json counters_json(CounterTable const& table)
{
    json rows = json::array();
    for (auto const& config : AngleConfig::all())
    {
        for (int o = 0; o < 4; ++o)
        {
            Outcome outcome = Outcome::from_index(o);
            rows.push_back({{"a", config.a()},
                            {"b", config.b()},
                            {"outcome", outcome.label()},
                            {"count", table.count(config.index(), outcome)}});
        }
    }
    return rows;
}

json totals_json(CounterTable const& table)
{
    json rows = json::array();
    for (auto const& config : AngleConfig::all())
    {
        rows.push_back({{"a", config.a()},
                        {"b", config.b()},
                        {"total", table.config_total(config.index())}});
    }
    return rows;
}

json bell_json(BellReport const& r)
{
    json j{{"lhs", r.lhs},
           {"rhs", r.rhs},
           {"margin", r.margin},
           {"violated", r.violated},
           {"sigma", nullptr},
           {"significance", nullptr}};
    if (r.sigma)
        j["sigma"] = *r.sigma;
    if (auto z = r.significance())
        j["significance"] = *z;
    return j;
}

json audit_json(CausalReport const& r)
{
    return json{{"alice_choice_vs_bob_measure", to_string(r.alice_choice_vs_bob_measure)},
                {"bob_choice_vs_alice_measure", to_string(r.bob_choice_vs_alice_measure)},
                {"settings_reach_creation", r.settings_reach_creation},
                {"creation_in_branch_of_settings", r.creation_in_branch_of_settings},
                {"settings_independent_of_source", r.settings_independent_of_source()}};
}

CounterTable counters_from_json(json const& rows)
{
    if (!rows.is_array())
        throw std::invalid_argument("counter JSON must be an array");
    CounterTable table;
    for (auto const& row : rows)
    {
        auto config = AngleConfig::make(row.at("a").get<int>(), row.at("b").get<int>());
        table.add(config.index(), parse_outcome(row.at("outcome").get<std::string>()),
                  row.at("count").get<double>());
    }
    return table;
}

std::string dump(json const& j)
{
    return j.dump(2) + "\n";
}
}  // namespace

//---------------------------------------------------------------------------//
Format parse_format(std::string_view text)
{
    if (text == "csv")
        return Format::csv;
    if (text == "json")
        return Format::json;
    throw std::invalid_argument("unknown format '" + std::string{text} + "'");
}

std::string format_number(double value)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{})
        throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

//---------------------------------------------------------------------------//
std::string emit_counters(CounterTable const& table, Format format)
{
    if (format == Format::json)
        return dump(counters_json(table));

    std::ostringstream out;
    out << counter_header << '\n';
    for (auto const& config : AngleConfig::all())
    {
        for (int o = 0; o < 4; ++o)
        {
            Outcome outcome = Outcome::from_index(o);
            out << config.a() << ',' << config.b() << ',' << outcome.label() << ','
                << format_number(table.count(config.index(), outcome)) << '\n';
        }
    }
    for (auto const& config : AngleConfig::all())
    {
        out << config.a() << ',' << config.b() << ",total,"
            << format_number(table.config_total(config.index())) << '\n';
    }
    return out.str();
}

CounterTable parse_counters(std::string_view text, Format format)
{
    if (format == Format::json)
    {
        json j = json::parse(text);
        if (j.is_object())
            return counters_from_json(j.at("counters"));
        return counters_from_json(j);
    }

    auto lines = lines_of(text);
    if (lines.empty() || lines.front() != counter_header)
        throw std::invalid_argument("counter CSV must start with '" + std::string{counter_header} + "'");
    CounterTable table;
    std::vector<std::pair<int, double>> totals;
    for (std::size_t i = 1; i < lines.size() && !lines[i].empty(); ++i)
    {
        auto fields = split(lines[i], ',');
        if (fields.size() != 4)
            throw std::invalid_argument("counter CSV rows have four fields");
        auto config = AngleConfig::make(static_cast<int>(parse_number(fields[0])),
                                        static_cast<int>(parse_number(fields[1])));
        double value = parse_number(fields[3]);
        if (fields[2] == "total")
            totals.emplace_back(config.index(), value);
        else
            table.add(config.index(), parse_outcome(fields[2]), value);
    }
    for (auto [config, total] : totals)
    {
        if (format_number(total) != format_number(table.config_total(config)))
            throw std::invalid_argument("counter CSV total does not match its rows");
    }
    return table;
}

//---------------------------------------------------------------------------//
std::string emit_curve(SweepCurve const& curve, Format format)
{
    if (format == Format::json)
    {
        json points = json::array();
        for (auto const& p : curve.points)
        {
            json v = p.p_volume ? json(*p.p_volume) : json(nullptr);
            points.push_back({{"delta", p.delta},
                              {"p_e_model", p.p_model},
                              {"p_e_born", p.p_born},
                              {"p_e_volume", v}});
        }
        return dump(points);
    }
    std::ostringstream out;
    out << curve_header << '\n';
    for (auto const& p : curve.points)
    {
        out << format_number(p.delta) << ',' << format_number(p.p_model) << ','
            << format_number(p.p_born) << ','
            << (p.p_volume ? format_number(*p.p_volume) : std::string{}) << '\n';
    }
    return out.str();
}

SweepCurve parse_curve(std::string_view text, Format format)
{
    SweepCurve curve;
    if (format == Format::json)
    {
        json j = json::parse(text);
        if (!j.is_array())
            throw std::invalid_argument("curve JSON must be an array");
        for (auto const& row : j)
        {
            SweepPoint p;
            p.delta = row.at("delta").get<double>();
            p.p_model = row.at("p_e_model").get<double>();
            p.p_born = row.at("p_e_born").get<double>();
            if (!row.at("p_e_volume").is_null())
                p.p_volume = row.at("p_e_volume").get<double>();
            curve.points.push_back(p);
        }
        return curve;
    }
    auto lines = lines_of(text);
    if (lines.empty() || lines.front() != curve_header)
        throw std::invalid_argument("curve CSV must start with '" + std::string{curve_header} + "'");
    for (std::size_t i = 1; i < lines.size() && !lines[i].empty(); ++i)
    {
        auto fields = split(lines[i], ',');
        if (fields.size() != 4)
            throw std::invalid_argument("curve CSV rows have four fields");
        SweepPoint p;
        p.delta = parse_number(fields[0]);
        p.p_model = parse_number(fields[1]);
        p.p_born = parse_number(fields[2]);
        if (!fields[3].empty())
            p.p_volume = parse_number(fields[3]);
        curve.points.push_back(p);
    }
    return curve;
}

//---------------------------------------------------------------------------//
std::string emit_bell(BellReport const& r, Format format)
{
    if (format == Format::json)
        return dump(bell_json(r));
    std::ostringstream out;
    out << bell_header << '\n'
        << format_number(r.lhs) << ',' << format_number(r.rhs) << ','
        << format_number(r.margin) << ',' << (r.sigma ? format_number(*r.sigma) : "")
        << ',' << (r.violated ? "true" : "false") << '\n';
    return out.str();
}

std::string emit_run_report(Schedule const& schedule, CounterTable const& table,
                            BellReport const& bell, CausalReport const& audit,
                            Format format)
{
    if (format == Format::csv)
        return emit_counters(table, format) + "\n" + emit_bell(bell, format);

    json j;
    j["model"] = model_tag(schedule.model);
    j["n_total"] = schedule.n_total;
    j["seed"] = schedule.seed;
    j["angles"] = {schedule.bell.phi0.value(), schedule.bell.phi1.value(),
                   schedule.bell.phi2.value()};
    if (auto const* lrm = std::get_if<LrmModel>(&schedule.model))
        j["weights"] = lrm->weights.values();
    if (auto const* branch = std::get_if<BranchModel>(&schedule.model))
        j["ztilde"] = branch->z_tilde;
    j["counters"] = counters_json(table);
    j["totals"] = totals_json(table);
    j["bell"] = bell_json(bell);
    j["audit"] = audit_json(audit);
    return dump(j);
}

std::string emit_audit(EventLog const& log, CausalReport const& report,
                       AuditFormat format)
{
    if (format == AuditFormat::json)
    {
        json events = json::array();
        for (auto const& e : log.events)
            events.push_back({{"kind", to_string(e.kind)}, {"t", e.t}, {"x", e.x}});
        json j{{"L", log.half_separation}, {"events", events}, {"report", audit_json(report)}};
        return dump(j);
    }
    std::ostringstream out;
    out << log.serialize() << '\n'
        << "alice_choice_vs_bob_measure " << to_string(report.alice_choice_vs_bob_measure) << '\n'
        << "bob_choice_vs_alice_measure " << to_string(report.bob_choice_vs_alice_measure) << '\n'
        << "settings_reach_creation " << (report.settings_reach_creation ? "true" : "false") << '\n'
        << "creation_in_branch_of_settings "
        << (report.creation_in_branch_of_settings ? "true" : "false") << '\n'
        << "settings_independent_of_source "
        << (report.settings_independent_of_source() ? "true" : "false") << '\n';
    return out.str();
}

}  // namespace bellworlds
