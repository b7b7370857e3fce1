// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>
#include <vector>

namespace aoi {

/*!
 * Parse a coordinate grid.
 *
 * Accepts `start:stop:step` (both ends inclusive when step divides the
 * range), a comma-separated list, or a single number. Points are rounded
 * to the decimal precision written in the literal so `0.05:0.95:0.05`
 * yields the doubles nearest to 0.05, 0.10, ... The result must be
 * strictly increasing.
 */
std::vector<double> parse_grid(std::string_view text);

}  // namespace aoi
