// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#include "aoibound/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "aoibound/errors.hpp"

namespace aoi {
namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 420;
constexpr double kLeft = 70;
constexpr double kRight = 150;
constexpr double kTop = 40;
constexpr double kBottom = 50;

char const* const kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf",
};

std::string escape(std::string const& s)
{
    std::string out;
    for (char c : s)
    {
        switch (c)
        {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(Plot const& plot)
{
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double ymin = xmin;
    double ymax = -xmin;
    for (auto const& s : plot.series)
    {
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i)
        {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]))
            {
                continue;
            }
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    }
    if (!std::isfinite(xmin))
    {
        xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    }
    if (xmax == xmin)
    {
        xmax = xmin + 1;
    }
    if (ymax == ymin)
    {
        ymax = ymin + 1;
    }

    double const plot_w = kWidth - kLeft - kRight;
    double const plot_h = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
    auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * plot_h; };

    std::ostringstream os;
    os.precision(6);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
       << "\" height=\"" << kHeight << "\" font-family=\"sans-serif\" "
          "font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" "
          "font-size=\"14\">"
       << escape(plot.title) << "</text>\n";
    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w
       << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 5; ++i)
    {
        double const fx = xmin + (xmax - xmin) * i / 5.0;
        double const fy = ymin + (ymax - ymin) * i / 5.0;
        os << "<text x=\"" << px(fx) << "\" y=\"" << kTop + plot_h + 16
           << "\" text-anchor=\"middle\">" << fx << "</text>\n";
        os << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(fy) + 4
           << "\" text-anchor=\"end\">" << fy << "</text>\n";
    }
    os << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
       << "\" text-anchor=\"middle\">" << escape(plot.x_label) << "</text>\n";
    os << "<text transform=\"translate(16," << kTop + plot_h / 2
       << ") rotate(-90)\" text-anchor=\"middle\">" << escape(plot.y_label)
       << "</text>\n";

    for (std::size_t s = 0; s < plot.series.size(); ++s)
    {
        auto const& series = plot.series[s];
        char const* color = kPalette[s % std::size(kPalette)];
        os << "<polyline fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < std::min(series.x.size(), series.y.size()); ++i)
        {
            if (std::isfinite(series.x[i]) && std::isfinite(series.y[i]))
            {
                os << px(series.x[i]) << ',' << py(series.y[i]) << ' ';
            }
        }
        os << "\"/>\n";
        double const ly = kTop + 14 + 18.0 * s;
        os << "<line x1=\"" << kWidth - kRight + 10 << "\" y1=\"" << ly - 4
           << "\" x2=\"" << kWidth - kRight + 30 << "\" y2=\"" << ly - 4
           << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << kWidth - kRight + 34 << "\" y=\"" << ly << "\">"
           << escape(series.label) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void write_svg(std::filesystem::path const& path, Plot const& plot)
{
    std::ofstream os(path);
    if (!os)
    {
        throw Error("cannot open " + path.string());
    }
    os << render_svg(plot);
}

}  // namespace aoi
