// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#include "aoibound/exact_oracles.hpp"

#include <cmath>
#include <sstream>

#include "aoibound/errors.hpp"

namespace aoi {

double exact_mean_peak_mm1(double lambda_t, double mu_t)
{
    if (!(mu_t > 0.0) || !(lambda_t > mu_t))
    {
        throw UnstableModel("M/M/1 needs lambda > mu > 0");
    }
    return lambda_t + lambda_t * mu_t / (lambda_t - mu_t);
}

Dm1Root solve_sigma_dm1(double D, double mu_t, double tol)
{
    if (!(mu_t > 0.0) || !(D > mu_t))
    {
        std::ostringstream msg;
        msg << "D/M/1 needs D > mu > 0 (D=" << D << ", mu=" << mu_t << ")";
        throw UnstableModel(msg.str());
    }
    double const c = D / mu_t;
    // g(σ) = σ − e^{−c(1−σ)}: g(0) < 0, and g > 0 just below the trivial
    // root σ = 1 because g'(1) = 1 − c < 0.
    auto g = [c](double s) { return s + -std::exp(-c * (1.0 - s)); };

    double lo = 0.0;
    double hi = 0.5;
    while (g(hi) <= 0.0)
    {
        hi = 0.5 * (1.0 + hi);
        if (hi >= 1.0)
        {
            throw NumericalError("could not bracket the D/M/1 root");
        }
    }
    while (hi - lo > tol)
    {
        double const mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
        {
            break;
        }
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    double const sigma = 0.5 * (lo + hi);
    return {sigma, std::abs(g(sigma))};
}

double exact_mean_peak_dm1(double D, double mu_t)
{
    auto const root = solve_sigma_dm1(D, mu_t);
    return D + mu_t / (1.0 - root.sigma);
}

}  // namespace aoi
