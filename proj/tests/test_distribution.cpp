// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "aoibound/distribution.hpp"
#include "aoibound/errors.hpp"
#include "aoibound/quadrature.hpp"
#include "aoibound/rng.hpp"

using namespace aoi;

TEST_CASE("mean is the parameter")
{
    CHECK(mean(Distribution::exponential(2.0)) == 2.0);
    CHECK(mean(Distribution::deterministic(1.5)) == 1.5);
    CHECK(mean(Distribution::erlang(3, 0.9)) == 0.9);
}

TEST_CASE("constructor rejects bad parameters")
{
    CHECK_THROWS_AS(Distribution::exponential(0.0), InvalidArgument);
    CHECK_THROWS_AS(Distribution::exponential(-1.0), InvalidArgument);
    CHECK_THROWS_AS(Distribution::deterministic(NAN), InvalidArgument);
    CHECK_THROWS_AS(Distribution::erlang(0, 1.0), InvalidArgument);
}

TEST_CASE("pdf")
{
    CHECK(pdf(Distribution::exponential(1.0), 0.0) == doctest::Approx(1.0));
    CHECK(pdf(Distribution::exponential(2.0), 2.0)
          == doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-14));
    CHECK(pdf(Distribution::exponential(2.0), -1.0) == 0.0);
    CHECK_THROWS_AS(pdf(Distribution::deterministic(1.0), 1.0), NotAbsolutelyContinuous);

    // Erlang(3, mean 0.9): rate r = 3/0.9, density r^3 x^2 e^{-r x} / 2
    double const r = 3.0 / 0.9;
    double const x = 0.7;
    CHECK(pdf(Distribution::erlang(3, 0.9), x)
          == doctest::Approx(r * r * r * x * x * std::exp(-r * x) / 2.0).epsilon(1e-13));
}

TEST_CASE("cdf")
{
    CHECK(cdf(Distribution::exponential(1.0), 0.0) == 0.0);
    CHECK(cdf(Distribution::exponential(2.0), 2.0)
          == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
    CHECK(cdf(Distribution::deterministic(2.0), 1.9) == 0.0);
    CHECK(cdf(Distribution::deterministic(2.0), 2.0) == 1.0);
    CHECK(cdf(Distribution::erlang(2, 1.0), -3.0) == 0.0);
    CHECK(cdf(Distribution::erlang(2, 1.0), 200.0) == doctest::Approx(1.0));
}

TEST_CASE("cdf agrees with integrated pdf and is nondecreasing")
{
    std::vector<Distribution> const dists{
        Distribution::exponential(0.7),
        Distribution::erlang(1, 1.3),
        Distribution::erlang(4, 2.0),
        Distribution::erlang(12, 0.5),
    };
    for (auto const& dist : dists)
    {
        double prev = 0.0;
        for (double x = 0.0; x <= 10.0; x += 0.25)
        {
            double const c = cdf(dist, x);
            CHECK(c >= prev);
            prev = c;
            double const integral
                = integrate([&](double t) { return pdf(dist, t); }, 0.0, x, {1e-12, 10000})
                      .value;
            CHECK(std::fabs(integral - c) <= 1e-8);
        }
    }
}

TEST_CASE("mgf")
{
    auto const e1 = Distribution::exponential(1.0);
    CHECK(mgf(e1, 0.0).value() == 1.0);
    CHECK(mgf(e1, 0.5).value() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(mgf(e1, 1.0).is_divergent());
    CHECK(mgf(e1, 3.0).is_divergent());
    CHECK(mgf(Distribution::deterministic(2.0), -0.5).value()
          == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(mgf(Distribution::erlang(2, 1.0), 1.0).value() == doctest::Approx(4.0));
    CHECK(mgf(Distribution::erlang(2, 1.0), 2.0).is_divergent());
    CHECK(mgf_domain_bound(Distribution::erlang(2, 1.0)) == 2.0);
    CHECK(std::isinf(mgf_domain_bound(Distribution::deterministic(1.0))));
    CHECK_THROWS(mgf(e1, 1.0).value());
    CHECK((mgf(e1, 1.0) * mgf(e1, 0.1)).is_divergent());
}

TEST_CASE("mgf is nondecreasing in theta on its domain")
{
    for (auto const& dist : {Distribution::exponential(0.5), Distribution::erlang(3, 1.0),
                             Distribution::deterministic(2.0)})
    {
        double prev = 0.0;
        for (double theta = -3.0; theta < 1.9; theta += 0.05)
        {
            auto const m = mgf(dist, theta);
            REQUIRE(m.is_finite());
            CHECK(m.value() >= prev);
            prev = m.value();
        }
    }
}

TEST_CASE("mgf matches numeric expectation")
{
    auto const dist = Distribution::erlang(3, 1.2);
    double const theta = -0.7;
    double const numeric
        = integrate([&](double x) { return std::exp(theta * x) * pdf(dist, x); }, 0.0, 80.0,
                    {1e-13, 10000})
              .value;
    CHECK(mgf(dist, theta).value() == doctest::Approx(numeric).epsilon(1e-10));
}

TEST_CASE("sample determinism and law of large numbers")
{
    Rng a(42);
    Rng b(42);
    auto const dist = Distribution::exponential(2.0);
    for (int i = 0; i < 100; ++i)
    {
        CHECK(sample(dist, a) == sample(dist, b));
    }
    Rng det(1);
    CHECK(sample(Distribution::deterministic(3.0), det) == 3.0);

    for (auto const& d : {Distribution::exponential(2.0), Distribution::erlang(4, 0.8)})
    {
        Rng rng(7);
        int const n = 1'000'000;
        double sum = 0.0;
        double sum2 = 0.0;
        for (int i = 0; i < n; ++i)
        {
            double const x = sample(d, rng);
            CHECK_FALSE(x < 0.0);
            sum += x;
            sum2 += x * x;
        }
        double const m = sum / n;
        double const se = std::sqrt((sum2 / n - m * m) / n);
        CHECK(std::fabs(m - mean(d)) <= 3.0 * se);
    }
}

TEST_CASE("Kolmogorov-Smirnov distance against the cdf")
{
    for (auto const& d : {Distribution::exponential(1.5), Distribution::erlang(3, 2.0)})
    {
        Rng rng(99);
        std::vector<double> xs(100'000);
        for (auto& x : xs)
        {
            x = sample(d, rng);
        }
        std::sort(xs.begin(), xs.end());
        double ks = 0.0;
        double const n = static_cast<double>(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i)
        {
            double const c = cdf(d, xs[i]);
            ks = std::max({ks, std::fabs(c - i / n), std::fabs((i + 1) / n - c)});
        }
        CHECK(ks <= 0.01);
    }
}

TEST_CASE("parse and print literals")
{
    CHECK(parse_distribution("exp:mean=2") == Distribution::exponential(2.0));
    CHECK(parse_distribution("det:value=1.5") == Distribution::deterministic(1.5));
    CHECK(parse_distribution("erlang:shape=2,mean=0.8") == Distribution::erlang(2, 0.8));
    CHECK(parse_distribution("erlang:MEAN=0.8,shape=2") == Distribution::erlang(2, 0.8));
    for (auto const& d : {Distribution::exponential(0.1), Distribution::deterministic(3.0),
                          Distribution::erlang(5, 1.0 / 3.0)})
    {
        CHECK(parse_distribution(to_string(d)) == d);
    }
    CHECK_THROWS_AS(parse_distribution("gamma:mean=1"), InvalidArgument);
    CHECK_THROWS_AS(parse_distribution("exp:mean=1,mean=2"), InvalidArgument);
    CHECK_THROWS_AS(parse_distribution("exp:rate=1"), InvalidArgument);
    CHECK_THROWS_AS(parse_distribution("exp:mean=abc"), InvalidArgument);
    CHECK_THROWS_AS(parse_distribution("erlang:shape=2.5,mean=1"), InvalidArgument);
    CHECK_THROWS_AS(parse_distribution("exp"), InvalidArgument);
}

TEST_CASE("with_mean keeps the family")
{
    CHECK(Distribution::erlang(3, 1.0).with_mean(2.0) == Distribution::erlang(3, 2.0));
    CHECK(Distribution::deterministic(1.0).with_mean(4.0) == Distribution::deterministic(4.0));
}
