// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace aoi {

struct QuadConfig
{
    double abs_tol = 1e-9;
    std::size_t max_panels = 10000;
};

struct QuadResult
{
    double value;
    double abs_error;  //!< estimated
    std::size_t panels;
};

/*!
 * Globally adaptive 7/15-point Gauss–Kronrod integration over [a, b].
 *
 * The panel with the largest Kronrod–Gauss discrepancy is bisected until
 * the summed error estimate is below cfg.abs_tol. Throws QuadratureFailure
 * if the panel budget runs out first or the integrand is not finite.
 */
QuadResult integrate(std::function<double(double)> const& f,
                     double a,
                     double b,
                     QuadConfig const& cfg = {});

}  // namespace aoi
