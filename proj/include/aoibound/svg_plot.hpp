// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace aoi {

struct PlotSeries
{
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct Plot
{
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<PlotSeries> series;
};

//! Render line plots as a standalone SVG document.
std::string render_svg(Plot const& plot);

void write_svg(std::filesystem::path const& path, Plot const& plot);

}  // namespace aoi
