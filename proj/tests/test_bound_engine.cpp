// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "aoibound/bound_engine.hpp"
#include "aoibound/errors.hpp"
#include "aoibound/quadrature.hpp"
#include "aoibound/rng.hpp"

using namespace aoi;

namespace {

// Root of f on [lo, hi] by plain bisection; f(lo) and f(hi) differ in sign.
template<class F>
double bisect(F f, double lo, double hi)
{
    bool const lo_neg = f(lo) < 0.0;
    for (int i = 0; i < 200; ++i)
    {
        double const mid = 0.5 * (lo + hi);
        ((f(mid) < 0.0) == lo_neg ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double dm1_theta_oracle(double D, double mu)
{
    return bisect([&](double t) { return 1.0 - mu * t - std::exp(-t * D); }, 1e-9 / mu,
                  (1.0 - 1e-15) / mu);
}

double dm1_bound_oracle(double D, double mu, double d)
{
    if (d <= D)
    {
        return 1.0;
    }
    double const t = dm1_theta_oracle(D, mu);
    double const tail = std::exp(-(d - D) / mu);
    return tail + (std::exp(t * (D - d)) - tail) / (1.0 - t * mu);
}

}  // namespace

TEST_CASE("M/M/1 closed form")
{
    CHECK(violation_bound_mm1(2.0, 1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    // λ = 2μ: limit e^{-d/μ} + (d/μ) e^{-d/λ}
    CHECK(violation_bound_mm1(2.0, 1.0, 3.0)
          == doctest::Approx(std::exp(-3.0) + 3.0 * std::exp(-1.5)).epsilon(1e-14));
    // continuity across the removable singularity
    double const at = violation_bound_mm1(2.0, 1.0, 3.0);
    CHECK(std::fabs(violation_bound_mm1(2.0 + 1e-7, 1.0, 3.0) - at) < 1e-6);
    CHECK(std::fabs(violation_bound_mm1(2.0 - 1e-7, 1.0, 3.0) - at) < 1e-6);
    // generic branch λ = 4, μ = 1
    double const a = 3.0 / 4.0;
    CHECK(violation_bound_mm1(4.0, 1.0, 2.0)
          == doctest::Approx(std::exp(-2.0) + 4.0 / -2.0 * (std::exp(-a * 2.0) - std::exp(-0.5)))
                 .epsilon(1e-14));
    CHECK(violation_bound_mm1(4.0, 1.0, 500.0) < 3.0 * std::exp(-125.0));
    CHECK_THROWS_AS(violation_bound_mm1(1.0, 1.0, 3.0), UnstableModel);
}

TEST_CASE("generic quadrature matches the M/M/1 closed form")
{
    auto const model = QueueModel::mm1(2.0, 1.0);
    CHECK(violation_bound_generic(model, 0.5, 0.0) == 1.0);
    CHECK(violation_bound_generic(model, 0.5, 3.0)
          == doctest::Approx(violation_bound_mm1(2.0, 1.0, 3.0)).epsilon(1e-9));
    for (double lambda : {1.25, 3.0, 10.0})
    {
        auto const m = QueueModel::mm1(lambda, 1.0);
        double const theta = (lambda - 1.0) / lambda;
        for (double d = 0.25; d < 12.0; d += 0.75)
        {
            CHECK(std::fabs(violation_bound_generic(m, theta, d)
                            - violation_bound_mm1(lambda, 1.0, d))
                  <= 1e-6);
        }
    }
}

TEST_CASE("generic bound against a Monte Carlo evaluation of the integrand")
{
    // Y ~ Exp(mean 2), Z ~ Erlang(2, mean 0.8)
    auto const model
        = QueueModel(Distribution::exponential(2.0), Distribution::erlang(2, 0.8));
    double const theta = bisect(
        [](double t) { return std::pow(2.5 / (2.5 - t), 2) * 0.5 / (0.5 + t) - 1.0; }, 1e-6,
        2.5 - 1e-9);
    double const lib_theta = solve_theta_star(model).value;
    CHECK(lib_theta == doctest::Approx(theta).epsilon(1e-9));

    double const d = 5.0;
    Rng rng(2024);
    std::size_t const n = 10'000'000;
    double sum = 0.0;
    double sum2 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        double const s = -2.0 * std::log(rng.uniform_open0())
                         - 0.4 * std::log(rng.uniform_open0() * rng.uniform_open0());
        double const h = s < d ? 1.0 - std::exp(-theta * (d - s)) : 0.0;
        sum += h;
        sum2 += h * h;
    }
    double const m = sum / n;
    double const se = std::sqrt((sum2 / n - m * m) / n);
    double const bound = violation_bound_generic(model, lib_theta, d);
    CHECK(std::fabs(bound - (1.0 - m)) <= 3.0 * se);
}

TEST_CASE("closed-form and numeric convolution agree")
{
    std::vector<QueueModel> const models{
        QueueModel::mm1(2.0, 1.0),
        QueueModel::mm1(1.0 + 1e-9, 1.0),
        QueueModel::mm1(1.05, 1.0),
        QueueModel(Distribution::exponential(2.0), Distribution::erlang(2, 0.8)),
        QueueModel(Distribution::erlang(3, 3.0), Distribution::erlang(3, 3.0)),
        QueueModel(Distribution::erlang(2, 2.0), Distribution::erlang(5, 1.0)),
    };
    for (auto const& m : models)
    {
        for (double t : {0.01, 0.5, 1.0, 2.5, 6.0, 15.0})
        {
            double const a = sum_density(m, t, ConvolutionMethod::automatic);
            double const b = sum_density(m, t, ConvolutionMethod::numeric);
            CHECK(std::fabs(a - b) <= 1e-9);
        }
        double const total
            = integrate([&](double t) { return sum_density(m, t); }, 0.0, 200.0, {1e-11, 10000})
                  .value;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
    }
    CHECK(sum_density(QueueModel::mm1(2.0, 1.0), -1.0) == 0.0);
}

TEST_CASE("generic bound rejects atoms and infeasible theta")
{
    CHECK_THROWS_AS(violation_bound_generic(QueueModel::dm1(2.0, 1.0), 0.5, 3.0),
                    NotAbsolutelyContinuous);
    CHECK_THROWS_AS(violation_bound_generic(QueueModel::mm1(2.0, 1.0), 0.9, 3.0),
                    InfeasibleTheta);
    CHECK_THROWS_AS(violation_bound_generic(QueueModel::mm1(2.0, 1.0), 0.5, -1.0),
                    InvalidArgument);
}

TEST_CASE("free theta")
{
    double const closed = violation_bound_mm1(2.0, 1.0, 3.0);
    CHECK(std::fabs(violation_bound_mm1_free_theta(2.0, 1.0, 0.5, 3.0) - closed) <= 1e-12);
    CHECK(violation_bound_mm1_free_theta(2.0, 1.0, 0.25, 3.0) >= closed);
    CHECK(violation_bound_mm1_free_theta(2.0, 1.0, 0.5, 0.0) == doctest::Approx(1.0));
    // nonincreasing in θ up to θ*
    for (double d : {0.5, 2.0, 6.0})
    {
        double prev = 1.0 + 1e-12;
        for (double theta = 0.02; theta <= 0.5; theta += 0.02)
        {
            double const v = violation_bound_mm1_free_theta(2.0, 1.0, theta, d);
            CHECK(v <= prev + 1e-12);
            prev = v;
        }
    }
    // θ = 1/λ is a removable point: compare to neighbours (λ = 4 so 1/λ < θ*)
    double const at = violation_bound_mm1_free_theta(4.0, 1.0, 0.25, 3.0);
    CHECK(std::fabs(violation_bound_mm1_free_theta(4.0, 1.0, 0.25 + 1e-5, 3.0) - at) < 1e-4);
    CHECK(std::fabs(violation_bound_mm1_free_theta(4.0, 1.0, 0.25 - 1e-5, 3.0) - at) < 1e-4);
    // and agrees with quadrature there
    CHECK(at == doctest::Approx(violation_bound_generic(QueueModel::mm1(4.0, 1.0), 0.25, 3.0))
                    .epsilon(1e-8));
    CHECK_THROWS_AS(violation_bound_mm1_free_theta(2.0, 1.0, 1.0, 3.0), SingularTheta);
    CHECK_THROWS_AS(violation_bound_mm1_free_theta(2.0, 1.0, 0.9, 3.0), InfeasibleTheta);
}

TEST_CASE("D/M/1 closed form")
{
    double const theta = solve_theta_star(QueueModel::dm1(2.0, 1.0)).value;
    CHECK(violation_bound_dm1(2.0, 1.0, theta, 2.0) == 1.0);
    CHECK(violation_bound_dm1(2.0, 1.0, theta, 1.0) == 1.0);
    CHECK(violation_bound_dm1(2.0, 1.0, theta, 5.0)
          == doctest::Approx(dm1_bound_oracle(2.0, 1.0, 5.0)).epsilon(1e-10));
    CHECK(std::fabs(violation_bound_dm1(2.0, 1.0, theta, 5.0) - 0.2559) < 1e-3);
    CHECK(violation_bound_dm1(2.0, 1.0, theta, 400.0) < 1e-100);
    for (double D : {1.2, 3.0})
    {
        double const t = solve_theta_star(QueueModel::dm1(D, 1.0)).value;
        for (double d = 0.0; d < 15.0; d += 0.7)
        {
            CHECK(violation_bound_dm1(D, 1.0, t, d)
                  == doctest::Approx(dm1_bound_oracle(D, 1.0, d)).epsilon(1e-9));
        }
    }
}

TEST_CASE("mean bounds and the integral identity")
{
    CHECK(mean_bound_mm1(2.0, 1.0) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(mean_bound_mm1(1000.0, 1.0) / (1000.0 + 1.0) == doctest::Approx(1.0).epsilon(2e-3));
    double const theta = solve_theta_star(QueueModel::dm1(2.0, 1.0)).value;
    CHECK(mean_bound_dm1(2.0, 1.0, theta) == doctest::Approx(4.2550).epsilon(1e-4));

    // ∫₀^∞ bound(d) dd: quadrature until the bound drops below 1e-12, then an
    // exponential tail with the slowest decay rate.
    auto integral = [](auto bound, double decay) {
        double hi = 1.0;
        while (bound(hi) > 1e-12)
        {
            hi *= 1.5;
        }
        return integrate(bound, 0.0, hi, {1e-11, 10000}).value + bound(hi) / decay;
    };
    for (double lambda : {1.5, 2.0, 5.0})
    {
        double const slow = std::min(1.0, (lambda - 1.0) / lambda);
        double const v = integral(
            [&](double d) { return violation_bound_mm1(lambda, 1.0, d); }, std::min(slow, 1.0 / lambda));
        CHECK(v == doctest::Approx(mean_bound_mm1(lambda, 1.0)).epsilon(1e-8));
    }
    for (double D : {1.5, 2.0, 5.0})
    {
        double const t = solve_theta_star(QueueModel::dm1(D, 1.0)).value;
        double const v = integral([&](double d) { return violation_bound_dm1(D, 1.0, t, d); },
                                  std::min(t, 1.0));
        CHECK(v == doctest::Approx(mean_bound_dm1(D, 1.0, t)).epsilon(1e-8));
    }
}

TEST_CASE("backlog tail bound")
{
    CHECK(backlog_tail_bound(0.5, 0.0) == 1.0);
    CHECK(backlog_tail_bound(0.5, 2.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK_THROWS_AS(backlog_tail_bound(0.5, -1.0), InvalidArgument);
}

TEST_CASE("bound curves")
{
    std::vector<double> grid;
    for (double d = 0.0; d <= 20.0; d += 0.25)
    {
        grid.push_back(d);
    }
    auto const mm1 = make_bound_curve(QueueModel::mm1(2.0, 1.0), grid);
    CHECK(mm1.method == BoundMethod::mm1_closed);
    CHECK(mm1.theta.value == 0.5);
    CHECK(mm1.points.front().bound == 1.0);

    BoundCurveOptions forced;
    forced.force_generic = true;
    auto const gen = make_bound_curve(QueueModel::mm1(2.0, 1.0), grid, forced);
    CHECK(gen.method == BoundMethod::generic_quadrature);
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        CHECK(std::fabs(gen.points[i].bound - mm1.points[i].bound) <= 1e-6);
        if (i > 0)
        {
            CHECK(mm1.points[i].bound <= mm1.points[i - 1].bound);
            CHECK(gen.points[i].bound <= gen.points[i - 1].bound + 1e-9);
        }
    }

    CHECK(make_bound_curve(QueueModel::dm1(2.0, 1.0), grid).method == BoundMethod::dm1_closed);
    auto const erl = make_bound_curve(
        QueueModel(Distribution::erlang(2, 3.0), Distribution::erlang(3, 1.0)), grid);
    CHECK(erl.method == BoundMethod::generic_quadrature);
    for (auto const& p : erl.points)
    {
        CHECK(p.bound >= 0.0);
        CHECK(p.bound <= 1.0);
    }

    std::vector<double> const bad{1.0, 1.0};
    CHECK_THROWS_AS(make_bound_curve(QueueModel::mm1(2.0, 1.0), bad), InvalidArgument);
    std::vector<double> const neg{-1.0, 1.0};
    CHECK_THROWS_AS(make_bound_curve(QueueModel::mm1(2.0, 1.0), neg), InvalidArgument);
    CHECK_THROWS_AS(make_bound_curve(QueueModel::mm1(1.0, 1.0), grid), UnstableModel);
    CHECK(std::string(to_string(BoundMethod::dm1_closed)) == "dm1_closed");
}
