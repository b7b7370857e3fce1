// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "distribution.hpp"

namespace aoi {

/*!
 * GI/GI/1 FCFS queue: i.i.d. inter-arrival times Y and service times Z.
 *
 * Construction enforces E[Y] >= E[Z]. Operations that need a nontrivial
 * decay rate additionally require strict inequality.
 */
class QueueModel
{
  public:
    QueueModel(Distribution interarrival, Distribution service);

    //! Exponential/exponential with mean times lambda_t and mu_t.
    static QueueModel mm1(double lambda_t, double mu_t);
    //! Deterministic inter-arrival D, exponential service with mean mu_t.
    static QueueModel dm1(double D, double mu_t);

    Distribution const& interarrival() const noexcept { return interarrival_; }
    Distribution const& service() const noexcept { return service_; }

    //! ρ = E[Z] / E[Y].
    double utilization() const noexcept;

    bool is_mm1() const noexcept;
    bool is_dm1() const noexcept;

    //! Throws UnstableModel unless ρ < 1.
    void require_strictly_stable() const;

  private:
    Distribution interarrival_;
    Distribution service_;
};

enum class ThetaMethod
{
    closed_form_mm1,
    bisection,
};

char const* to_string(ThetaMethod m) noexcept;

/// Optimal decay rate θ* with its feasibility certificate.
struct ThetaStar
{
    double value;
    double kernel_at_value;
    ThetaMethod method;
    double tolerance;
};

inline constexpr double default_theta_tol = 1e-10;

//! E[e^{θZ}]·E[e^{-θY}] for θ >= 0.
MgfValue kernel(QueueModel const& model, double theta);

/*!
 * Largest θ with kernel(θ) <= 1.
 *
 * M/M/1 uses the closed form (λ−μ)/(λμ) unless \c force_bisection is set.
 * The bisection brackets the nontrivial root of kernel − 1 to at most
 * \c tol and returns the feasible end of the bracket. A model whose kernel
 * stays below one for every θ (e.g. deterministic service shorter than a
 * deterministic gap) yields +inf.
 */
ThetaStar solve_theta_star(QueueModel const& model,
                           double tol = default_theta_tol,
                           bool force_bisection = false);

}  // namespace aoi
