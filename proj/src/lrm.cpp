//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file lrm.cpp
//---------------------------------------------------------------------------//
#include "bellworlds/lrm.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bellworlds/rng.hpp"

namespace bellworlds
{
Outcome InstructionTriple::outcome(int a, int b) const
{
    std::uint8_t alice = a == 0 ? a0 : a1();
    std::uint8_t bob = b == 1 ? b1 : b2;
    return Outcome{alice, bob};
}

int class_index(InstructionTriple triple)
{
    return 4 * (1 - triple.a0) + 2 * triple.b1 + triple.b2;
}

InstructionTriple triple_of(int index)
{
    if (index < 0 || index >= num_classes)
        throw std::out_of_range("class index must be in [0, 8)");
    return InstructionTriple{static_cast<std::uint8_t>(1 - index / 4),
                             static_cast<std::uint8_t>((index / 2) % 2),
                             static_cast<std::uint8_t>(index % 2)};
}

//---------------------------------------------------------------------------//
ClassWeights::ClassWeights(Array const& n) : n_{n}
{
    for (double v : n_)
    {
        if (!std::isfinite(v) || v < 0)
            throw std::invalid_argument("class weights must be finite and non-negative");
    }
}

ClassWeights ClassWeights::pure(int index, double total)
{
    Array n{};
    n.at(index) = total;
    return ClassWeights{n};
}

ClassWeights ClassWeights::uniform(double per_class)
{
    Array n;
    n.fill(per_class);
    return ClassWeights{n};
}

ClassWeights ClassWeights::saturating(double total)
{
    double q = total / 4;
    return ClassWeights{{q, 0, q, 0, 0, q, 0, q}};
}

ClassWeights ClassWeights::parse(std::string_view text)
{
    Array n{};
    std::size_t count = 0;
    std::size_t pos = 0;
    while (true)
    {
        std::size_t comma = text.find(',', pos);
        std::string field{text.substr(pos, comma == std::string_view::npos
                                               ? std::string_view::npos
                                               : comma - pos)};
        if (count >= num_classes)
            throw std::invalid_argument("expected exactly 8 class weights");
        std::size_t used = 0;
        double value = 0;
        try
        {
            value = std::stod(field, &used);
        }
        catch (std::exception const&)
        {
            throw std::invalid_argument("bad class weight '" + field + "'");
        }
        if (field.find_first_not_of(" \t", used) != std::string::npos)
            throw std::invalid_argument("bad class weight '" + field + "'");
        n[count++] = value;
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    if (count != num_classes)
        throw std::invalid_argument("expected exactly 8 class weights");
    return ClassWeights{n};
}

double ClassWeights::total() const
{
    return std::accumulate(n_.begin(), n_.end(), 0.0);
}

//---------------------------------------------------------------------------//
double CounterTable::count(int a, int b, Outcome outcome) const
{
    return count(AngleConfig::make(a, b).index(), outcome);
}

double CounterTable::config_total(int config_index) const
{
    auto const& r = counts_[config_index];
    return r[0] + r[1] + r[2] + r[3];
}

double CounterTable::total() const
{
    double sum = 0;
    for (int c = 0; c < AngleConfig::count; ++c)
        sum += config_total(c);
    return sum;
}

double CounterTable::equal(int config_index) const
{
    return counts_[config_index][0] + counts_[config_index][3];
}

double CounterTable::unequal(int config_index) const
{
    return counts_[config_index][1] + counts_[config_index][2];
}

double CounterTable::equal(int a, int b) const
{
    return equal(AngleConfig::make(a, b).index());
}

double CounterTable::unequal(int a, int b) const
{
    return unequal(AngleConfig::make(a, b).index());
}

CounterTable& CounterTable::operator+=(CounterTable const& other)
{
    for (int c = 0; c < AngleConfig::count; ++c)
    {
        for (int o = 0; o < 4; ++o)
            counts_[c][o] += other.counts_[c][o];
    }
    return *this;
}

//---------------------------------------------------------------------------//
std::optional<double> BellReport::significance() const
{
    if (!sigma || *sigma <= 0)
        return std::nullopt;
    return margin / *sigma;
}

//---------------------------------------------------------------------------//
Outcome lrm_outcome(int index, AngleConfig const& config)
{
    return triple_of(index).outcome(config.a(), config.b());
}

CounterTable expected_counters(ClassWeights const& weights)
{
    CounterTable table;
    for (int i = 0; i < num_classes; ++i)
    {
        double share = weights[i] / 4;
        for (auto const& config : AngleConfig::all())
            table.add(config.index(), lrm_outcome(i, config), share);
    }
    return table;
}

BellReport bell_check(CounterTable const& table)
{
    BellReport report;
    report.lhs = table.unequal(0, 2);
    report.rhs = table.unequal(0, 1) + table.equal(1, 2);
    report.margin = report.lhs - report.rhs;
    // Fractional expectation tables carry a few ulps of summation noise
    double noise = 64 * std::numeric_limits<double>::epsilon() * (report.lhs + report.rhs);
    report.violated = report.margin > noise;
    return report;
}

int sample_class(ClassWeights const& weights, RngStream& rng)
{
    double total = weights.total();
    if (!(total > 0))
        throw std::invalid_argument("cannot sample from empty class weights");
    double target = rng.uniform() * total;
    double cumulative = 0;
    int last_nonzero = 0;
    for (int i = 0; i < num_classes; ++i)
    {
        if (weights[i] <= 0)
            continue;
        last_nonzero = i;
        cumulative += weights[i];
        if (target < cumulative)
            return i;
    }
    // Rounding can leave target == total
    return last_nonzero;
}

Outcome sample_lrm_run(ClassWeights const& weights, AngleConfig const& config,
                       RngStream& rng)
{
    return lrm_outcome(sample_class(weights, rng), config);
}

std::vector<LrmTableEntry> lrm_table(BellAngles const& bell)
{
    std::vector<LrmTableEntry> entries;
    entries.reserve(num_classes * AngleConfig::count);
    for (int i = 0; i < num_classes; ++i)
    {
        for (auto const& config : AngleConfig::all(bell))
            entries.push_back({i, triple_of(i), config, lrm_outcome(i, config)});
    }
    return entries;
}

}  // namespace bellworlds
