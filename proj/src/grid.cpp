// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#include "aoibound/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "aoibound/errors.hpp"

namespace aoi {
namespace {

struct Number
{
    double value;
    int decimals;  //!< digits after the decimal point, -1 if exponent form
};

Number parse_number(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
    {
        s.remove_prefix(1);
    }
    while (!s.empty() && s.back() == ' ')
    {
        s.remove_suffix(1);
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()
        || !std::isfinite(v))
    {
        throw InvalidArgument("bad grid number '" + std::string(s) + "'");
    }
    int decimals = 0;
    if (s.find_first_of("eE") != std::string_view::npos)
    {
        decimals = -1;
    }
    else if (auto dot = s.find('.'); dot != std::string_view::npos)
    {
        decimals = static_cast<int>(s.size() - dot - 1);
    }
    return {v, decimals};
}

double round_to(double v, int decimals)
{
    if (decimals < 0 || decimals > 15)
    {
        return v;
    }
    double const scale = std::pow(10.0, decimals);
    return std::round(v * scale) / scale;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text)
{
    std::vector<double> out;
    if (text.find(':') != std::string_view::npos)
    {
        auto c1 = text.find(':');
        auto c2 = text.find(':', c1 + 1);
        if (c2 == std::string_view::npos
            || text.find(':', c2 + 1) != std::string_view::npos)
        {
            throw InvalidArgument("grid range must be start:stop:step");
        }
        auto start = parse_number(text.substr(0, c1));
        auto stop = parse_number(text.substr(c1 + 1, c2 - c1 - 1));
        auto step = parse_number(text.substr(c2 + 1));
        if (!(step.value > 0.0))
        {
            throw InvalidArgument("grid step must be positive");
        }
        if (stop.value < start.value)
        {
            throw InvalidArgument("grid stop must be >= start");
        }
        int decimals = std::max({start.decimals, stop.decimals, step.decimals});
        if (std::min({start.decimals, stop.decimals, step.decimals}) < 0)
        {
            decimals = -1;
        }
        double const span = (stop.value - start.value) / step.value;
        auto n = static_cast<long long>(std::floor(span + 1e-9));
        if (n > 10'000'000)
        {
            throw InvalidArgument("grid has too many points");
        }
        for (long long i = 0; i <= n; ++i)
        {
            out.push_back(round_to(start.value + i * step.value, decimals));
        }
    }
    else
    {
        std::size_t pos = 0;
        while (pos <= text.size())
        {
            auto comma = text.find(',', pos);
            auto item = text.substr(pos, comma == std::string_view::npos
                                             ? std::string_view::npos
                                             : comma - pos);
            out.push_back(parse_number(item).value);
            if (comma == std::string_view::npos)
            {
                break;
            }
            pos = comma + 1;
        }
    }
    for (std::size_t i = 1; i < out.size(); ++i)
    {
        if (!(out[i] > out[i - 1]))
        {
            throw InvalidArgument("grid must be strictly increasing");
        }
    }
    return out;
}

}  // namespace aoi
