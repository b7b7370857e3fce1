// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#include "aoibound/bound_engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aoibound/errors.hpp"

namespace aoi {
namespace {

constexpr double kFeasibilityTol = 1e-9;

struct GammaShape
{
    int shape;
    double rate;
};

GammaShape gamma_shape(Distribution const& dist)
{
    if (dist.is<Exponential>())
    {
        return {1, 1.0 / dist.as<Exponential>().mean_time};
    }
    auto const& e = dist.as<Erlang>();
    return {e.shape, e.shape / e.mean_time};
}

double erlang_density(int shape, double rate, double t)
{
    if (t <= 0.0)
    {
        return (t == 0.0 && shape == 1) ? rate : 0.0;
    }
    return std::exp(shape * std::log(rate) + (shape - 1) * std::log(t) - rate * t
                    - std::lgamma(static_cast<double>(shape)));
}

double binomial(int n, int k)
{
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
    {
        r = r * (n - k + i) / i;
    }
    return r;
}

// Partial-fraction density of Erlang(m, a) + Erlang(n, b), a != b.
double hypoexponential_density(GammaShape y, GammaShape z, double t)
{
    auto block = [t](GammaShape self, GammaShape other) {
        // Σ_i (−1)^{m−i} C(n+m−i−1, m−i) (b−a)^{−(n+m−i)} t^{i−1} e^{−at}/(i−1)!
        int const m = self.shape;
        int const n = other.shape;
        double const gap = other.rate - self.rate;
        double sum = 0.0;
        double power_term = 1.0;  // t^{i−1}/(i−1)!
        for (int i = 1; i <= m; ++i)
        {
            if (i > 1)
            {
                power_term *= t / (i - 1);
            }
            double const sign = ((m - i) % 2 == 0) ? 1.0 : -1.0;
            sum += sign * binomial(n + m - i - 1, m - i)
                   * std::pow(gap, -(n + m - i)) * power_term;
        }
        return sum * std::exp(-self.rate * t);
    };
    double const scale = std::pow(y.rate, y.shape) * std::pow(z.rate, z.shape);
    return scale * (block(y, z) + block(z, y));
}

double numeric_convolution(QueueModel const& model, double t)
{
    if (t <= 0.0)
    {
        return 0.0;
    }
    QuadConfig inner;
    inner.abs_tol = 1e-13;
    auto integrand = [&](double s) {
        return pdf(model.interarrival(), s) * pdf(model.service(), t - s);
    };
    return integrate(integrand, 0.0, t, inner).value;
}

void require_continuous(QueueModel const& model)
{
    if (!model.interarrival().is_continuous() || !model.service().is_continuous())
    {
        throw NotAbsolutelyContinuous(
            "generic bound needs densities for both Y and Z; use the D/M/1 "
            "closed form for deterministic arrivals");
    }
}

void require_nonnegative_d(double d)
{
    if (!(d >= 0.0))
    {
        throw InvalidArgument("threshold d must be >= 0");
    }
}

void require_mm1_stable(double lambda_t, double mu_t)
{
    if (!(mu_t > 0.0) || !(lambda_t > mu_t))
    {
        std::ostringstream msg;
        msg << "unstable M/M/1 model: need lambda > mu > 0 (lambda=" << lambda_t
            << ", mu=" << mu_t << ")";
        throw UnstableModel(msg.str());
    }
}

void require_dm1_feasible(double D, double mu_t, double theta)
{
    if (!(mu_t > 0.0) || !(D > mu_t))
    {
        std::ostringstream msg;
        msg << "unstable D/M/1 model: need D > mu > 0 (D=" << D << ", mu=" << mu_t
            << ")";
        throw UnstableModel(msg.str());
    }
    if (!(theta > 0.0) || !(theta * mu_t < 1.0)
        || std::exp(-theta * D) - (1.0 - mu_t * theta) > kFeasibilityTol)
    {
        std::ostringstream msg;
        msg << "theta=" << theta << " violates 1 - mu*theta >= exp(-theta*D)";
        throw InfeasibleTheta(msg.str());
    }
}

double mm1_raw(double lambda_t, double mu_t, double d)
{
    // e^{−d/μ} + λ/(2μ−λ)·(e^{−(λ−μ)d/(λμ)} − e^{−d/λ}); the second part is
    // (d/μ)e^{−d/λ}·expm1(x)/x with x = (2μ−λ)d/(λμ), stable as 2μ−λ → 0.
    double const x = (2.0 * mu_t - lambda_t) * d / (lambda_t * mu_t);
    double second;
    if (std::abs(x) < 0.5)
    {
        double const phi = std::abs(x) < 1e-12 ? 1.0 + 0.5 * x : std::expm1(x) / x;
        second = (d / mu_t) * std::exp(-d / lambda_t) * phi;
    }
    else
    {
        double const c = lambda_t / (2.0 * mu_t - lambda_t);
        second = c
                 * (std::exp(-(lambda_t - mu_t) * d / (lambda_t * mu_t))
                    - std::exp(-d / lambda_t));
    }
    return std::exp(-d / mu_t) + second;
}

double mm1_free_raw(double lambda_t, double mu_t, double theta, double d)
{
    double const gap = lambda_t - mu_t;
    double const first = mu_t * mu_t * theta / (gap * (1.0 - mu_t * theta))
                         * std::exp(-d / mu_t);

    // Remaining two terms share the factor 1/(1 − λθ) and their numerator
    // vanishes at θ0 = 1/λ, so expand around θ0 when close.
    double const theta0 = 1.0 / lambda_t;
    double const delta = theta - theta0;
    double const e_lambda = std::exp(-d / lambda_t);
    double rest;
    if (std::abs(delta) <= 1e-6 * theta0)
    {
        double const a0 = e_lambda * lambda_t / gap;
        double const slope = mu_t * lambda_t / gap;  // μ/(1 − μθ0)
        double const l0 = -d + slope;
        double const n1 = a0 * l0 - lambda_t * lambda_t * e_lambda / gap;
        double const n2 = a0 * (l0 * l0 + slope * slope);
        rest = -(n1 + 0.5 * n2 * delta) / lambda_t;
    }
    else
    {
        double const a = std::exp(-theta * d) / (1.0 - mu_t * theta);
        double const b = lambda_t * lambda_t * theta * e_lambda / gap;
        rest = (a - b) / (1.0 - lambda_t * theta);
    }
    return first + rest;
}

double dm1_raw(double D, double mu_t, double theta, double d)
{
    if (d <= D)
    {
        return 1.0;
    }
    double const service_tail = std::exp(-(d - D) / mu_t);
    return service_tail
           + (std::exp(theta * (D - d)) - service_tail) / (1.0 - theta * mu_t);
}

double generic_raw(QueueModel const& model,
                   double theta,
                   double d,
                   GenericBoundOptions const& opts)
{
    require_continuous(model);
    require_nonnegative_d(d);
    if (!(theta > 0.0))
    {
        throw InfeasibleTheta("generic bound needs theta > 0");
    }
    auto k = kernel(model, theta);
    if (k.is_divergent() || k.value() > 1.0 + kFeasibilityTol)
    {
        std::ostringstream msg;
        msg << "theta=" << theta << " is not kernel-feasible";
        throw InfeasibleTheta(msg.str());
    }
    if (d == 0.0)
    {
        return 1.0;
    }
    auto integrand = [&](double y) {
        return -std::expm1(-theta * y) * sum_density(model, d - y, opts.convolution);
    };
    return 1.0 - integrate(integrand, 0.0, d, opts.quad).value;
}

double clamp_unit(double v, bool* clamped)
{
    double const c = std::clamp(v, 0.0, 1.0);
    if (clamped)
    {
        *clamped = (c != v);
    }
    return c;
}

double dispatch_raw(QueueModel const& model,
                    ThetaStar const& theta,
                    BoundMethod method,
                    double d,
                    BoundCurveOptions const& opts)
{
    switch (method)
    {
        case BoundMethod::mm1_closed:
            require_nonnegative_d(d);
            return mm1_raw(mean(model.interarrival()), mean(model.service()), d);
        case BoundMethod::dm1_closed: {
            require_nonnegative_d(d);
            double const D = mean(model.interarrival());
            double const mu_t = mean(model.service());
            require_dm1_feasible(D, mu_t, theta.value);
            return dm1_raw(D, mu_t, theta.value, d);
        }
        case BoundMethod::generic_quadrature:
            return generic_raw(model, theta.value, d, opts.generic);
    }
    throw std::logic_error("unknown bound method");
}

}  // namespace

char const* to_string(BoundMethod m) noexcept
{
    switch (m)
    {
        case BoundMethod::generic_quadrature:
            return "generic_quadrature";
        case BoundMethod::mm1_closed:
            return "mm1_closed";
        case BoundMethod::dm1_closed:
            return "dm1_closed";
    }
    return "unknown";
}

double sum_density(QueueModel const& model, double t, ConvolutionMethod method)
{
    require_continuous(model);
    if (t <= 0.0)
    {
        return 0.0;
    }
    if (method == ConvolutionMethod::numeric)
    {
        return numeric_convolution(model, t);
    }

    auto const y = gamma_shape(model.interarrival());
    auto const z = gamma_shape(model.service());
    if (y.rate == z.rate)
    {
        return erlang_density(y.shape + z.shape, y.rate, t);
    }
    if (y.shape == 1 && z.shape == 1)
    {
        double const slow = std::min(y.rate, z.rate);
        double const fast = std::max(y.rate, z.rate);
        double const gap = fast - slow;
        return y.rate * z.rate * std::exp(-slow * t) * -std::expm1(-gap * t) / gap;
    }
    // Partial fractions lose digits to cancellation when the rates are close.
    if (std::abs(y.rate - z.rate) >= 0.1 * std::max(y.rate, z.rate))
    {
        return hypoexponential_density(y, z, t);
    }
    return numeric_convolution(model, t);
}

double violation_bound_generic(QueueModel const& model,
                               double theta,
                               double d,
                               GenericBoundOptions const& opts)
{
    return clamp_unit(generic_raw(model, theta, d, opts), nullptr);
}

double violation_bound_mm1(double lambda_t, double mu_t, double d)
{
    require_mm1_stable(lambda_t, mu_t);
    require_nonnegative_d(d);
    return clamp_unit(mm1_raw(lambda_t, mu_t, d), nullptr);
}

double violation_bound_mm1_free_theta(double lambda_t,
                                      double mu_t,
                                      double theta,
                                      double d)
{
    require_mm1_stable(lambda_t, mu_t);
    require_nonnegative_d(d);
    if (!(theta > 0.0))
    {
        throw InvalidArgument("theta must be positive");
    }
    if (theta >= 1.0 / mu_t - 1e-12)
    {
        throw SingularTheta("theta at or beyond the service MGF boundary 1/mu");
    }
    double const k = 1.0 / ((1.0 - mu_t * theta) * (1.0 + lambda_t * theta));
    if (k > 1.0 + kFeasibilityTol)
    {
        std::ostringstream msg;
        msg << "theta=" << theta << " is not kernel-feasible (kernel=" << k << ")";
        throw InfeasibleTheta(msg.str());
    }
    return clamp_unit(mm1_free_raw(lambda_t, mu_t, theta, d), nullptr);
}

double violation_bound_dm1(double D, double mu_t, double theta_star, double d)
{
    require_dm1_feasible(D, mu_t, theta_star);
    require_nonnegative_d(d);
    return clamp_unit(dm1_raw(D, mu_t, theta_star, d), nullptr);
}

double mean_bound_mm1(double lambda_t, double mu_t)
{
    require_mm1_stable(lambda_t, mu_t);
    return lambda_t * lambda_t / (lambda_t - mu_t) + mu_t;
}

double mean_bound_dm1(double D, double mu_t, double theta_star)
{
    require_dm1_feasible(D, mu_t, theta_star);
    return D + mu_t + 1.0 / theta_star;
}

double backlog_tail_bound(double theta, double y)
{
    if (!(theta >= 0.0) || !(y >= 0.0))
    {
        throw InvalidArgument("backlog tail bound needs theta >= 0 and y >= 0");
    }
    if (y == 0.0)
    {
        return 1.0;
    }
    return std::exp(-theta * y);
}

BoundMethod select_method(QueueModel const& model, bool force_generic)
{
    if (!force_generic)
    {
        if (model.is_mm1())
        {
            return BoundMethod::mm1_closed;
        }
        if (model.is_dm1())
        {
            return BoundMethod::dm1_closed;
        }
    }
    require_continuous(model);
    return BoundMethod::generic_quadrature;
}

double violation_bound(QueueModel const& model,
                       ThetaStar const& theta,
                       double d,
                       BoundCurveOptions const& opts)
{
    auto const method = select_method(model, opts.force_generic);
    return clamp_unit(dispatch_raw(model, theta, method, d, opts), nullptr);
}

BoundCurve make_bound_curve(QueueModel const& model,
                            std::span<double const> d_grid,
                            BoundCurveOptions const& opts)
{
    auto const method = select_method(model, opts.force_generic);
    BoundCurve curve{model, solve_theta_star(model, opts.theta_tol), method, {}};
    curve.points.reserve(d_grid.size());

    for (std::size_t i = 0; i < d_grid.size(); ++i)
    {
        double const d = d_grid[i];
        require_nonnegative_d(d);
        if (i > 0 && !(d > d_grid[i - 1]))
        {
            throw InvalidArgument("threshold grid must be strictly increasing");
        }
        BoundPoint p{d, 0.0, false};
        p.bound = clamp_unit(dispatch_raw(model, curve.theta, method, d, opts),
                             &p.clamped);
        if (!curve.points.empty() && p.bound > curve.points.back().bound + 1e-9)
        {
            std::ostringstream msg;
            msg.precision(17);
            msg << "bound increased from " << curve.points.back().bound
                << " at d=" << curve.points.back().d << " to " << p.bound
                << " at d=" << d;
            throw NumericalError(msg.str());
        }
        curve.points.push_back(p);
    }
    return curve;
}

}  // namespace aoi
