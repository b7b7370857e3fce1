// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace aoi {

// Textbook queueing results used as baselines for the bounds.

//! Mean peak AoI of M/M/1: λ + λμ/(λ−μ) (mean times).
double exact_mean_peak_mm1(double lambda_t, double mu_t);

/// Root σ ∈ (0, 1) of σ = exp(−D(1−σ)/μ).
struct Dm1Root
{
    double sigma;
    double residual;  //!< |σ − exp(−D(1−σ)/μ)|
};

Dm1Root solve_sigma_dm1(double D, double mu_t, double tol = 1e-15);

//! Mean peak AoI of D/M/1: D + μ/(1−σ).
double exact_mean_peak_dm1(double D, double mu_t);

}  // namespace aoi
