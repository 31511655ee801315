//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file plot.cpp
//---------------------------------------------------------------------------//
#include "bellworlds/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bellworlds
{
namespace
{
constexpr double width = 640;
constexpr double height = 420;
constexpr double left = 60;
constexpr double right = 170;
constexpr double top = 30;
constexpr double bottom = 50;

struct Series
{
    char const* key;
    char const* label;
    char const* color;
    char const* dash;
    std::vector<std::pair<double, double>> points;
};

std::string fixed(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

class Frame
{
  public:
    Frame(double lo, double hi) : lo_{lo}, hi_{hi} {}

    double x(double delta) const
    {
        return left + (delta - lo_) / (hi_ - lo_) * (width - left - right);
    }
    double y(double p) const { return height - bottom - p * (height - top - bottom); }

  private:
    double lo_;
    double hi_;
};
}  // namespace

std::string pi_eighths_label(int k)
{
    if (k == 0)
        return "0";
    std::string sign = k < 0 ? "−" : "";
    int n = std::abs(k);
    int d = 8;
    int g = std::gcd(n, d);
    n /= g;
    d /= g;
    std::string num = n == 1 ? "π" : std::to_string(n) + "π";
    return sign + num + (d == 1 ? "" : "/" + std::to_string(d));
}

std::string render_svg(SweepCurve const& curve)
{
    if (curve.empty())
        throw std::invalid_argument("cannot plot an empty curve");

    Series model{"model", "model", "#1f77b4", "", {}};
    Series born{"born", "sin²δ", "#d62728", "6,4", {}};
    Series volume{"volume", "2|δ|/π", "#2ca02c", "2,3", {}};
    for (auto const& p : curve.points)
    {
        model.points.emplace_back(p.delta, p.p_model);
        born.points.emplace_back(p.delta, p.p_born);
        if (p.p_volume)
            volume.points.emplace_back(p.delta, *p.p_volume);
    }

    auto [min_it, max_it] = std::minmax_element(
        curve.points.begin(), curve.points.end(),
        [](auto const& l, auto const& r) { return l.delta < r.delta; });
    double lo = min_it->delta;
    double hi = max_it->delta;
    if (hi - lo < 1e-12)
    {
        lo -= pi / 8;
        hi += pi / 8;
    }
    Frame frame{lo, hi};

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << left << "\" y=\"18\" font-family=\"sans-serif\" font-size=\"14\">"
        << "P(E) vs δ (" << (curve.model.empty() ? "model" : curve.model)
        << ")</text>\n";

    // Axes
    double x0 = left;
    double x1 = width - right;
    double y0 = frame.y(0);
    double y1 = frame.y(1);
    svg << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
        << "<line x1=\"" << fixed(x0) << "\" y1=\"" << fixed(y0) << "\" x2=\"" << fixed(x1)
        << "\" y2=\"" << fixed(y0) << "\"/>\n"
        << "<line x1=\"" << fixed(x0) << "\" y1=\"" << fixed(y0) << "\" x2=\"" << fixed(x0)
        << "\" y2=\"" << fixed(y1) << "\"/>\n"
        << "</g>\n";

    svg << "<g class=\"xticks\" font-family=\"sans-serif\" font-size=\"11\" "
           "text-anchor=\"middle\">\n";
    int k_lo = static_cast<int>(std::ceil(lo / (pi / 8) - 1e-9));
    int k_hi = static_cast<int>(std::floor(hi / (pi / 8) + 1e-9));
    for (int k = k_lo; k <= k_hi; ++k)
    {
        double x = frame.x(k * pi / 8);
        svg << "<line x1=\"" << fixed(x) << "\" y1=\"" << fixed(y0) << "\" x2=\"" << fixed(x)
            << "\" y2=\"" << fixed(y0 + 5) << "\" stroke=\"black\"/>"
            << "<text x=\"" << fixed(x) << "\" y=\"" << fixed(y0 + 18) << "\">"
            << pi_eighths_label(k) << "</text>\n";
    }
    svg << "</g>\n";
    svg << "<text x=\"" << fixed((x0 + x1) / 2) << "\" y=\"" << fixed(height - 10)
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
           "δ = β − α (rad)</text>\n";

    svg << "<g class=\"yticks\" font-family=\"sans-serif\" font-size=\"11\" "
           "text-anchor=\"end\">\n";
    for (double p : {0.0, 0.25, 0.5, 0.75, 1.0})
    {
        double y = frame.y(p);
        svg << "<line x1=\"" << fixed(x0 - 5) << "\" y1=\"" << fixed(y) << "\" x2=\""
            << fixed(x0) << "\" y2=\"" << fixed(y) << "\" stroke=\"black\"/>"
            << "<text x=\"" << fixed(x0 - 8) << "\" y=\"" << fixed(y + 4) << "\">" << p
            << "</text>\n";
    }
    svg << "</g>\n";

    int legend_row = 0;
    for (Series const* s : {&model, &born, &volume})
    {
        if (s->points.empty())
            continue;
        svg << "<g class=\"series\" data-series=\"" << s->key << "\">\n";
        if (s->points.size() >= 2)
        {
            svg << "<polyline fill=\"none\" stroke=\"" << s->color
                << "\" stroke-width=\"2\"";
            if (*s->dash)
                svg << " stroke-dasharray=\"" << s->dash << '"';
            svg << " points=\"";
            for (std::size_t i = 0; i < s->points.size(); ++i)
            {
                svg << (i ? " " : "") << fixed(frame.x(s->points[i].first)) << ','
                    << fixed(frame.y(s->points[i].second));
            }
            svg << "\"/>\n";
        }
        else
        {
            auto const& [d, p] = s->points.front();
            svg << "<circle cx=\"" << fixed(frame.x(d)) << "\" cy=\"" << fixed(frame.y(p))
                << "\" r=\"4\" fill=\"" << s->color << "\"/>\n";
        }
        double ly = top + 20 + 20 * legend_row++;
        svg << "<line x1=\"" << fixed(x1 + 15) << "\" y1=\"" << fixed(ly) << "\" x2=\""
            << fixed(x1 + 45) << "\" y2=\"" << fixed(ly) << "\" stroke=\"" << s->color
            << "\" stroke-width=\"2\"/>"
            << "<text x=\"" << fixed(x1 + 52) << "\" y=\"" << fixed(ly + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << s->label << "</text>\n";
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void emit_plot(SweepCurve const& curve, std::filesystem::path const& path)
{
    std::string text = render_svg(curve);
    std::ofstream out{path, std::ios::binary};
    if (!out)
        throw std::runtime_error("cannot write plot to " + path.string());
    out << text;
    if (!out)
        throw std::runtime_error("failed writing plot to " + path.string());
}

}  // namespace bellworlds
