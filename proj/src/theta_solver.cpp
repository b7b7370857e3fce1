// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#include "aoibound/theta_solver.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "aoibound/errors.hpp"

namespace aoi {

QueueModel::QueueModel(Distribution interarrival, Distribution service)
    : interarrival_(std::move(interarrival)), service_(std::move(service))
{
    if (mean(interarrival_) < mean(service_))
    {
        std::ostringstream msg;
        msg << "unstable model: mean inter-arrival " << mean(interarrival_)
            << " < mean service " << mean(service_);
        throw UnstableModel(msg.str());
    }
}

QueueModel QueueModel::mm1(double lambda_t, double mu_t)
{
    return {Distribution::exponential(lambda_t), Distribution::exponential(mu_t)};
}

QueueModel QueueModel::dm1(double D, double mu_t)
{
    return {Distribution::deterministic(D), Distribution::exponential(mu_t)};
}

double QueueModel::utilization() const noexcept
{
    return mean(service_) / mean(interarrival_);
}

bool QueueModel::is_mm1() const noexcept
{
    return interarrival_.is<Exponential>() && service_.is<Exponential>();
}

bool QueueModel::is_dm1() const noexcept
{
    return interarrival_.is<Deterministic>() && service_.is<Exponential>();
}

void QueueModel::require_strictly_stable() const
{
    if (!(utilization() < 1.0))
    {
        std::ostringstream msg;
        msg << "unstable model: utilization " << utilization()
            << " must be < 1";
        throw UnstableModel(msg.str());
    }
}

char const* to_string(ThetaMethod m) noexcept
{
    switch (m)
    {
        case ThetaMethod::closed_form_mm1:
            return "closed_form_mm1";
        case ThetaMethod::bisection:
            return "bisection";
    }
    return "unknown";
}

MgfValue kernel(QueueModel const& model, double theta)
{
    if (!(theta >= 0.0))
    {
        throw InvalidArgument("kernel requires theta >= 0");
    }
    MgfValue const service = mgf(model.service(), theta);
    if (service.is_divergent())
    {
        return service;
    }
    return service * mgf(model.interarrival(), -theta);
}

namespace {

// Positive where θ is infeasible; divergence counts as infeasible.
double excess(QueueModel const& model, double theta)
{
    auto k = kernel(model, theta);
    return k.is_finite() ? k.value() - 1.0 : std::numeric_limits<double>::infinity();
}

ThetaStar bisect_theta(QueueModel const& model, double tol)
{
    double const theta_max = mgf_domain_bound(model.service());

    // Upper end of the bracket: some θ with kernel > 1.
    double hi;
    if (std::isfinite(theta_max))
    {
        hi = theta_max - tol;
        if (!(hi > 0.0))
        {
            throw NoPositiveTheta("service MGF domain narrower than tolerance");
        }
        if (excess(model, hi) <= 0.0)
        {
            // Root sits within tol of the MGF boundary.
            return {hi, kernel(model, hi).value(), ThetaMethod::bisection, tol};
        }
    }
    else
    {
        hi = 1.0 / mean(model.interarrival());
        int doublings = 0;
        while (excess(model, hi) <= 0.0)
        {
            hi *= 2.0;
            if (++doublings > 2000 || !std::isfinite(hi))
            {
                return {std::numeric_limits<double>::infinity(),
                        0.0,
                        ThetaMethod::bisection,
                        tol};
            }
        }
    }

    // Scan from hi toward 0 for a feasible point.
    double lo = hi;
    for (int i = 0;; ++i)
    {
        lo *= 0.5;
        if (excess(model, lo) <= 0.0)
        {
            break;
        }
        if (lo < tol || i > 200)
        {
            throw NoPositiveTheta("kernel exceeds 1 on the whole scanned range");
        }
        hi = lo;
    }

    // The feasible set is an interval (log-kernel is convex), so the bracket
    // [lo feasible, hi infeasible] contains exactly one crossing. Bisect to
    // machine resolution; the result is then well inside tol.
    while (hi - lo > 0.0)
    {
        double const mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi)
        {
            break;
        }
        (excess(model, mid) <= 0.0 ? lo : hi) = mid;
    }
    return {lo, kernel(model, lo).value(), ThetaMethod::bisection, tol};
}

}  // namespace

ThetaStar solve_theta_star(QueueModel const& model, double tol, bool force_bisection)
{
    if (!(tol > 0.0))
    {
        throw InvalidArgument("theta tolerance must be positive");
    }
    model.require_strictly_stable();

    if (model.is_mm1() && !force_bisection)
    {
        double const lambda_t = mean(model.interarrival());
        double const mu_t = mean(model.service());
        double const theta = (lambda_t - mu_t) / (lambda_t * mu_t);
        return {theta, kernel(model, theta).value(), ThetaMethod::closed_form_mm1, tol};
    }
    return bisect_theta(model, tol);
}

}  // namespace aoi
