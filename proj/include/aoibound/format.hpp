// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <charconv>
#include <string>

namespace aoi {

//! Shortest-form text of \c v with 17 significant digits (round-trip exact).
inline std::string fmt17(double v)
{
    char buf[40];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    return std::string(buf, end);
}

}  // namespace aoi
