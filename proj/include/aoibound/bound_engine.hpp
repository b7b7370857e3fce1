// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "quadrature.hpp"
#include "theta_solver.hpp"

namespace aoi {

// Peak-AoI violation bounds Pr{P > d} and the matching mean bounds.
//
// Parameters named lambda_t, mu_t, D are mean *times* (not rates).

enum class BoundMethod
{
    generic_quadrature,
    mm1_closed,
    dm1_closed,
};

char const* to_string(BoundMethod m) noexcept;

enum class ConvolutionMethod
{
    automatic,  //!< closed form for Exponential/Erlang pairs where stable
    numeric,    //!< always integrate the convolution
};

struct GenericBoundOptions
{
    QuadConfig quad{};
    ConvolutionMethod convolution = ConvolutionMethod::automatic;
};

//! Density of Y + Z at t, (f_Y * f_Z)(t). Both must be continuous.
double sum_density(QueueModel const& model,
                   double t,
                   ConvolutionMethod method = ConvolutionMethod::automatic);

/*!
 * General bound 1 − ∫₀^d (1 − e^{−θy}) (f_Y * f_Z)(d − y) dy.
 *
 * Requires densities for both Y and Z and a kernel-feasible θ. The result
 * is clamped to [0, 1].
 */
double violation_bound_generic(QueueModel const& model,
                               double theta,
                               double d,
                               GenericBoundOptions const& opts = {});

//! M/M/1 bound at θ* = (λ−μ)/(λμ); finite through the λ = 2μ singularity.
double violation_bound_mm1(double lambda_t, double mu_t, double d);

//! M/M/1 bound for an arbitrary feasible θ in (0, 1/μ).
double violation_bound_mm1_free_theta(double lambda_t,
                                      double mu_t,
                                      double theta,
                                      double d);

//! D/M/1 bound; exactly 1 for d <= D.
double violation_bound_dm1(double D, double mu_t, double theta_star, double d);

//! λ²/(λ−μ) + μ.
double mean_bound_mm1(double lambda_t, double mu_t);

//! D + μ + 1/θ*.
double mean_bound_dm1(double D, double mu_t, double theta_star);

//! e^{−θy}: upper bound on Pr{B > y} for a kernel-feasible θ.
double backlog_tail_bound(double theta, double y);

struct BoundPoint
{
    double d;
    double bound;
    bool clamped;  //!< raw expression left [0, 1] and was clamped
};

struct BoundCurve
{
    QueueModel model;
    ThetaStar theta;
    BoundMethod method;
    std::vector<BoundPoint> points;
};

struct BoundCurveOptions
{
    bool force_generic = false;
    double theta_tol = default_theta_tol;
    GenericBoundOptions generic{};
};

/*!
 * Evaluate the bound over a strictly increasing grid of thresholds d >= 0.
 *
 * M/M/1 and D/M/1 models use their closed forms (unless force_generic);
 * anything else goes through quadrature. The curve is checked to be
 * nonincreasing in d within 1e-9.
 */
BoundCurve make_bound_curve(QueueModel const& model,
                            std::span<double const> d_grid,
                            BoundCurveOptions const& opts = {});

//! Bound at a single d for \c model with the given θ*, dispatching like
//! make_bound_curve.
double violation_bound(QueueModel const& model,
                       ThetaStar const& theta,
                       double d,
                       BoundCurveOptions const& opts = {});

//! Method make_bound_curve would use for \c model.
BoundMethod select_method(QueueModel const& model, bool force_generic = false);

}  // namespace aoi
