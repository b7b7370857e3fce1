// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "aoibound/bound_engine.hpp"
#include "aoibound/errors.hpp"
#include "aoibound/exact_oracles.hpp"
#include "aoibound/theta_solver.hpp"

using namespace aoi;

TEST_CASE("M/M/1 exact mean")
{
    CHECK(exact_mean_peak_mm1(2.0, 1.0) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(exact_mean_peak_mm1(10.0, 1.0) == doctest::Approx(10.0 + 10.0 / 9.0).epsilon(1e-15));
    CHECK(mean_bound_mm1(2.0, 1.0) - exact_mean_peak_mm1(2.0, 1.0)
          == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(exact_mean_peak_mm1(1.0, 1.0), UnstableModel);
}

TEST_CASE("D/M/1 sigma")
{
    auto const r = solve_sigma_dm1(2.0, 1.0);
    CHECK(r.sigma == doctest::Approx(0.2032).epsilon(1e-3));
    CHECK(r.residual <= 1e-12);
    CHECK(std::fabs(r.sigma - std::exp(-2.0 * (1.0 - r.sigma))) <= 1e-12);
    CHECK(solve_sigma_dm1(50.0, 1.0).sigma < 1e-15);
    // σ grows toward 1 as D/μ → 1
    CHECK(solve_sigma_dm1(1.01, 1.0).sigma > 0.95);
    CHECK_THROWS_AS(solve_sigma_dm1(1.0, 1.0), UnstableModel);
}

TEST_CASE("D/M/1 exact mean")
{
    CHECK(exact_mean_peak_dm1(2.0, 1.0) == doctest::Approx(3.2550).epsilon(1e-4));
    CHECK(exact_mean_peak_dm1(60.0, 1.0) == doctest::Approx(61.0).epsilon(1e-15));
    for (double D : {1.1, 2.0, 7.0})
    {
        double const theta = solve_theta_star(QueueModel::dm1(D, 1.0)).value;
        double const sigma = solve_sigma_dm1(D, 1.0).sigma;
        CHECK(theta == doctest::Approx((1.0 - sigma) / 1.0).epsilon(1e-10));
        CHECK(std::fabs(mean_bound_dm1(D, 1.0, theta) - exact_mean_peak_dm1(D, 1.0) - 1.0)
              <= 1e-6);
    }
}
