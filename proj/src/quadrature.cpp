// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#include "aoibound/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "aoibound/errors.hpp"

namespace aoi {
namespace {

// Kronrod abscissae on [0, 1]; odd indices are the embedded Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel
{
    double a;
    double b;
    double value;
    double error;

    bool operator<(Panel const& other) const { return error < other.error; }
};

Panel evaluate_panel(std::function<double(double)> const& f, double a, double b)
{
    double const center = 0.5 * (a + b);
    double const half = 0.5 * (b - a);

    double const fc = f(center);
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    for (std::size_t i = 0; i < 7; ++i)
    {
        double const dx = half * kNodes[i];
        double const pair = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1)
        {
            gauss += kGaussWeights[i / 2] * pair;
        }
    }
    kronrod *= half;
    gauss *= half;
    if (!std::isfinite(kronrod))
    {
        std::ostringstream msg;
        msg << "non-finite integrand on [" << a << ", " << b << "]";
        throw QuadratureFailure(msg.str());
    }
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadResult integrate(std::function<double(double)> const& f,
                     double a,
                     double b,
                     QuadConfig const& cfg)
{
    if (a == b)
    {
        return {0.0, 0.0, 0};
    }
    if (a > b)
    {
        auto r = integrate(f, b, a, cfg);
        r.value = -r.value;
        return r;
    }

    std::priority_queue<Panel> panels;
    Panel first = evaluate_panel(f, a, b);
    double total = first.value;
    double error = first.error;
    panels.push(first);

    while (error > cfg.abs_tol)
    {
        if (panels.size() >= cfg.max_panels)
        {
            std::ostringstream msg;
            msg << "quadrature on [" << a << ", " << b << "] did not reach "
                << cfg.abs_tol << " within " << cfg.max_panels
                << " panels (estimate " << error << ")";
            throw QuadratureFailure(msg.str());
        }
        Panel worst = panels.top();
        panels.pop();
        double const mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
        {
            throw QuadratureFailure("quadrature panel width reached machine precision");
        }
        Panel left = evaluate_panel(f, worst.a, mid);
        Panel right = evaluate_panel(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);

        if (error <= cfg.abs_tol)
        {
            // Re-sum to shed drift from the running updates.
            auto copy = panels;
            total = 0.0;
            error = 0.0;
            while (!copy.empty())
            {
                total += copy.top().value;
                error += copy.top().error;
                copy.pop();
            }
        }
    }
    return {total, error, panels.size()};
}

}  // namespace aoi
