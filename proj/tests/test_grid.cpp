// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aoibound/errors.hpp"
#include "aoibound/grid.hpp"

using namespace aoi;

TEST_CASE("ranges are inclusive")
{
    auto const g = parse_grid("0:10:0.5");
    REQUIRE(g.size() == 21);
    CHECK(g.front() == 0.0);
    CHECK(g[6] == 3.0);
    CHECK(g.back() == 10.0);

    auto const r = parse_grid("0.05:0.95:0.05");
    REQUIRE(r.size() == 19);
    CHECK(r[9] == 0.5);
    CHECK(r.back() == 0.95);

    CHECK(parse_grid("1:1:1") == std::vector<double>{1.0});
    CHECK(parse_grid("0:1:0.3").size() == 4);
}

TEST_CASE("lists and single values")
{
    CHECK(parse_grid("1,2.5,4") == std::vector<double>{1.0, 2.5, 4.0});
    CHECK(parse_grid(" 3 ") == std::vector<double>{3.0});
    CHECK(parse_grid("1e-3") == std::vector<double>{1e-3});
}

TEST_CASE("malformed grids")
{
    CHECK_THROWS_AS(parse_grid(""), InvalidArgument);
    CHECK_THROWS_AS(parse_grid("1:2"), InvalidArgument);
    CHECK_THROWS_AS(parse_grid("0:1:0"), InvalidArgument);
    CHECK_THROWS_AS(parse_grid("0:1:-1"), InvalidArgument);
    CHECK_THROWS_AS(parse_grid("2:1:0.5"), InvalidArgument);
    CHECK_THROWS_AS(parse_grid("1,1"), InvalidArgument);
    CHECK_THROWS_AS(parse_grid("3,2"), InvalidArgument);
    CHECK_THROWS_AS(parse_grid("a,b"), InvalidArgument);
    CHECK_THROWS_AS(parse_grid("0:1e9:1e-9"), InvalidArgument);
}
