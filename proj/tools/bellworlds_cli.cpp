//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bellworlds_cli.cpp
//! Command line front end:
//!
//!   bellworlds run    --model M --n N --seed S [--weights ..] [--ztilde Z]
//!                     [--angles p0,p1,p2] [--out csv|json]
//!   bellworlds sweep  --model M --grid start:stop:steps --n N [--plot f.svg]
//!   bellworlds audit  --L len --tchoice t [--out text|json]
//!   bellworlds table
//!
//! Errors print one JSON line {"error": ..., "message": ...} on stderr.
//---------------------------------------------------------------------------//
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bellworlds/branching.hpp"
#include "bellworlds/harness.hpp"
#include "bellworlds/lightcone.hpp"
#include "bellworlds/lrm.hpp"
#include "bellworlds/plot.hpp"
#include "bellworlds/report.hpp"
#include "json.hpp"

using namespace bellworlds;

namespace
{
void print_error(std::string_view kind, std::string_view message)
{
    std::cerr << nlohmann::json{{"error", kind}, {"message", message}}.dump() << '\n';
}

//! Angle in radians; a "deg" suffix converts from degrees.
double parse_angle(std::string text)
{
    double scale = 1;
    if (text.size() > 3 && text.compare(text.size() - 3, 3, "deg") == 0)
    {
        text.resize(text.size() - 3);
        scale = pi / 180;
    }
    std::size_t used = 0;
    double value = std::stod(text, &used);
    if (used != text.size())
        throw std::invalid_argument("bad angle '" + text + "'");
    return value * scale;
}

BellAngles parse_bell_angles(std::string const& text)
{
    std::vector<double> values;
    std::size_t pos = 0;
    while (true)
    {
        std::size_t comma = text.find(',', pos);
        values.push_back(parse_angle(text.substr(pos, comma - pos)));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    if (values.size() != 3)
        throw std::invalid_argument("--angles expects three values phi0,phi1,phi2");
    return BellAngles{Angle{values[0]}, Angle{values[1]}, Angle{values[2]}};
}

std::vector<double> parse_grid(std::string const& text)
{
    auto first = text.find(':');
    auto second = first == std::string::npos ? first : text.find(':', first + 1);
    if (second == std::string::npos || text.find(':', second + 1) != std::string::npos)
        throw std::invalid_argument("--grid expects start:stop:steps");
    double start = parse_angle(text.substr(0, first));
    double stop = parse_angle(text.substr(first + 1, second - first - 1));
    std::size_t used = 0;
    std::string steps_text = text.substr(second + 1);
    int steps = std::stoi(steps_text, &used);
    if (used != steps_text.size() || steps < 0)
        throw std::invalid_argument("bad grid step count '" + steps_text + "'");

    // Volumes and quadrant rebranching are only defined for |delta| <= pi/2
    auto clamp = [](double d) { return std::fmax(-half_pi, std::fmin(half_pi, d)); };
    return linear_grid(clamp(start), clamp(stop), steps);
}

struct ModelOptions
{
    std::string tag;
    std::string weights;
    std::optional<std::uint64_t> z_tilde;

    Model build() const
    {
        std::optional<ClassWeights> w;
        if (!weights.empty())
            w = ClassWeights::parse(weights);
        return make_model(tag, w, z_tilde);
    }
};

void add_model_options(CLI::App* cmd, ModelOptions& opts)
{
    cmd->add_option("--model", opts.tag, "quantum | lrm | sausage | branch")->required();
    cmd->add_option("--weights", opts.weights, "eight class weights n0,..,n7 (lrm)");
    cmd->add_option("--ztilde", opts.z_tilde, "rebranch multiplier (branch)");
}

int print_table()
{
    // Expected grouping of (class, config) -> outcome for the Bell settings
    struct Group
    {
        char const* outcome;
        std::vector<std::pair<int, char const*>> entries;
    };
    std::vector<Group> const expected = {
        {"10", {{0, "01"}, {0, "02"}, {0, "11"}, {0, "12"}, {1, "01"}, {1, "11"}, {2, "02"},
                {4, "11"}, {4, "12"}, {5, "11"}}},
        {"00", {{2, "12"}, {4, "01"}, {4, "02"}, {5, "01"}, {6, "02"}, {6, "12"}}},
        {"11", {{1, "02"}, {1, "12"}, {2, "01"}, {3, "01"}, {3, "02"}, {5, "12"}}},
        {"01", {{2, "11"}, {3, "11"}, {3, "12"}, {5, "02"}, {6, "01"}, {6, "11"}, {7, "01"},
                {7, "02"}, {7, "11"}, {7, "12"}}},
    };

    auto table = lrm_table();
    std::cout << "i  A0 B1 B2 A1  ab  AB\n";
    for (auto const& e : table)
    {
        std::cout << e.class_index << "  " << int(e.triple.a0) << "  " << int(e.triple.b1)
                  << "  " << int(e.triple.b2) << "  " << int(e.triple.a1()) << "   "
                  << e.config.label() << "  " << e.outcome.label() << '\n';
    }

    std::size_t listed = 0;
    bool ok = true;
    for (auto const& group : expected)
    {
        for (auto const& [i, ab] : group.entries)
        {
            ++listed;
            auto config = AngleConfig::make(ab[0] - '0', ab[1] - '0');
            if (lrm_outcome(i, config).label() != group.outcome)
                ok = false;
        }
    }
    ok = ok && listed == table.size();
    std::cout << "grouping check: " << (ok ? "OK" : "MISMATCH") << " (" << listed
              << " of " << table.size() << " entries)\n";
    return ok ? 0 : 1;
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bell-inequality world models: quantum reference, hidden variables, "
                 "classical many worlds and quantum rebranching"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "simulate a schedule at the Bell settings");
    ModelOptions run_model;
    add_model_options(run, run_model);
    std::uint64_t run_n = 160;
    std::uint64_t run_seed = 0;
    std::string run_angles;
    std::string run_out = "csv";
    run->add_option("--n", run_n, "number of runs")->required();
    run->add_option("--seed", run_seed, "64-bit seed");
    run->add_option("--angles", run_angles, "phi0,phi1,phi2 in radians (suffix deg for degrees)");
    run->add_option("--out", run_out, "csv | json");

    // sweep
    auto* sw = app.add_subcommand("sweep", "P(E) against delta with reference curves");
    ModelOptions sweep_model;
    add_model_options(sw, sweep_model);
    std::string grid_text;
    std::uint64_t sweep_n = 100000;
    std::uint64_t sweep_seed = 0;
    std::string plot_path;
    std::string sweep_out = "csv";
    sw->add_option("--grid", grid_text, "start:stop:steps (radians, clamped to [-pi/2, pi/2])")
        ->required();
    sw->add_option("--n", sweep_n, "runs per grid point");
    sw->add_option("--seed", sweep_seed, "64-bit seed");
    sw->add_option("--plot", plot_path, "write an SVG plot");
    sw->add_option("--out", sweep_out, "csv | json");

    // audit
    auto* audit = app.add_subcommand("audit", "light-cone audit of one run");
    double half_sep = 1.0;
    double t_choice = 0.5;
    std::string audit_out = "text";
    audit->add_option("--L", half_sep, "half separation of Alice and Bob");
    audit->add_option("--tchoice", t_choice, "time of both setting choices");
    audit->add_option("--out", audit_out, "text | json");

    auto* table = app.add_subcommand("table", "hidden-variable outcome table and check");

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::CallForHelp const& e)
    {
        return app.exit(e);
    }
    catch (CLI::ParseError const& e)
    {
        print_error("usage", e.what());
        return 2;
    }

    try
    {
        if (*run)
        {
            Schedule schedule;
            schedule.n_total = run_n;
            schedule.seed = run_seed;
            schedule.model = run_model.build();
            if (!run_angles.empty())
                schedule.bell = parse_bell_angles(run_angles);
            Format format = parse_format(run_out);
            CounterTable counts = run_experiment(schedule);
            CausalReport causal = causal_audit(build_schedule());
            std::cout << emit_run_report(schedule, counts, bell_statistic(counts), causal,
                                         format);
        }
        else if (*sw)
        {
            Format format = parse_format(sweep_out);
            auto grid = parse_grid(grid_text);
            SweepCurve curve = sweep(sweep_model.build(), grid, sweep_n, sweep_seed);
            if (!plot_path.empty())
                emit_plot(curve, plot_path);
            std::cout << emit_curve(curve, format);
        }
        else if (*audit)
        {
            AuditFormat format;
            if (audit_out == "text")
                format = AuditFormat::text;
            else if (audit_out == "json")
                format = AuditFormat::json;
            else
                throw std::invalid_argument("unknown format '" + audit_out + "'");
            EventLog log = build_schedule(half_sep, t_choice);
            std::cout << emit_audit(log, causal_audit(log), format);
        }
        else if (*table)
        {
            return print_table();
        }
    }
    catch (std::invalid_argument const& e)
    {
        print_error("invalid_argument", e.what());
        return 2;
    }
    catch (std::domain_error const& e)
    {
        print_error("domain_error", e.what());
        return 2;
    }
    catch (std::exception const& e)
    {
        print_error("runtime_error", e.what());
        return 1;
    }
    return 0;
}
