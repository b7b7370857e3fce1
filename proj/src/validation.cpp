// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#include "aoibound/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "aoibound/bound_engine.hpp"
#include "aoibound/exact_oracles.hpp"
#include "aoibound/format.hpp"
#include "aoibound/simulator.hpp"

namespace aoi {
namespace {

CheckResult tolerance_check(std::string name, double worst, double tol, std::string detail)
{
    return {std::move(name), worst <= tol, tol - worst, std::move(detail)};
}

std::vector<double> range(double start, double stop, double step)
{
    std::vector<double> out;
    for (int i = 0; start + i * step <= stop + 1e-12; ++i)
    {
        out.push_back(std::round((start + i * step) * 1e6) / 1e6);
    }
    return out;
}

CheckResult check_theta_feasibility(ValidationOptions const& opts)
{
    auto const model = QueueModel::mm1(2.0, 1.0);
    double const theta = opts.theta_override
                             ? *opts.theta_override
                             : solve_theta_star(model).value;
    auto const k = kernel(model, theta);
    double const value = k.is_finite() ? k.value()
                                       : std::numeric_limits<double>::infinity();
    std::ostringstream detail;
    detail << "mm1(lambda=2,mu=1) theta=" << fmt17(theta)
           << " kernel=" << fmt17(value);
    return tolerance_check("theta_feasibility", value, 1.0 + 1e-9, detail.str());
}

CheckResult check_closed_vs_quadrature(ValidationOptions const& opts)
{
    auto const d_grid = opts.quick ? std::vector<double>{1.0, 3.0, 5.0}
                                   : range(0.5, 10.0, 0.5);
    double worst = 0.0;
    for (double ratio : {1.25, 2.0, 4.0})
    {
        auto const model = QueueModel::mm1(ratio, 1.0);
        double const theta = solve_theta_star(model).value;
        for (double d : d_grid)
        {
            double const diff = std::abs(violation_bound_mm1(ratio, 1.0, d)
                                         - violation_bound_generic(model, theta, d));
            worst = std::max(worst, diff);
        }
    }
    return tolerance_check("closed_form_vs_quadrature", worst, 1e-6,
                           "max |closed - quadrature| = " + fmt17(worst));
}

CheckResult check_theta_identities()
{
    double worst_mm1 = 0.0;
    for (double ratio : {1.25, 2.0, 4.0})
    {
        auto const model = QueueModel::mm1(ratio, 1.0);
        double const closed = (ratio - 1.0) / ratio;
        double const bisected = solve_theta_star(model, default_theta_tol, true).value;
        worst_mm1 = std::max(worst_mm1, std::abs(closed - bisected));
    }
    double worst_kernel = 0.0;
    double worst_sigma = 0.0;
    for (double D : {1.25, 2.0, 4.0, 10.0})
    {
        auto const model = QueueModel::dm1(D, 1.0);
        auto const theta = solve_theta_star(model);
        worst_kernel = std::max(worst_kernel, std::abs(theta.kernel_at_value - 1.0));
        auto const root = solve_sigma_dm1(D, 1.0);
        worst_sigma = std::max(worst_sigma, std::abs(theta.value - (1.0 - root.sigma)));
    }
    // Scale each residual by its own tolerance and report the worst.
    double const worst = std::max({worst_mm1 / 1e-9, worst_kernel / 1e-9,
                                   worst_sigma / 1e-8});
    std::ostringstream detail;
    detail << "mm1 |bisect-closed|=" << worst_mm1 << " dm1 |kernel-1|="
           << worst_kernel << " dm1 |theta-(1-sigma)/mu|=" << worst_sigma;
    return {"theta_identities", worst <= 1.0, 1.0 - worst, detail.str()};
}

CheckResult check_gap_identity()
{
    double const mu = 0.01;
    double worst_mm1 = 0.0;
    double worst_dm1 = 0.0;
    for (double rho : range(0.05, 0.95, 0.05))
    {
        double const lambda = mu / rho;
        worst_mm1 = std::max(worst_mm1, std::abs(mean_bound_mm1(lambda, mu)
                                                 - exact_mean_peak_mm1(lambda, mu) - mu));
        auto const theta = solve_theta_star(QueueModel::dm1(lambda, mu));
        worst_dm1 = std::max(worst_dm1,
                             std::abs(mean_bound_dm1(lambda, mu, theta.value)
                                      - exact_mean_peak_dm1(lambda, mu) - mu));
    }
    double const worst = std::max(worst_mm1 / 1e-12, worst_dm1 / 1e-6);
    std::ostringstream detail;
    detail << "mm1 gap error " << worst_mm1 << ", dm1 gap error " << worst_dm1;
    return {"gap_identity", worst <= 1.0, 1.0 - worst, detail.str()};
}

template<class F>
double argmin(std::vector<double> const& xs, F f)
{
    double best_x = xs.front();
    double best = std::numeric_limits<double>::infinity();
    for (double x : xs)
    {
        double const v = f(x);
        if (v < best)
        {
            best = v;
            best_x = x;
        }
    }
    return best_x;
}

CheckResult check_optimal_utilization()
{
    auto const rhos = range(0.01, 0.99, 0.01);
    std::ostringstream detail;
    bool ok = true;
    double margin = std::numeric_limits<double>::infinity();
    for (double mu : {0.01, 0.1, 1.0})
    {
        double const r = argmin(rhos, [mu](double rho) {
            return mean_bound_mm1(mu / rho, mu);
        });
        margin = std::min(margin, 0.01 + 1e-12 - std::abs(r - 0.5));
        ok = ok && std::abs(r - 0.5) <= 0.01 + 1e-12;
        detail << "mean argmin(mu=" << mu << ")=" << r << "; ";
    }
    std::vector<double> dm1_argmins;
    for (double mu : {0.5, 1.0, 2.0})
    {
        double const r_mm1 = argmin(rhos, [mu](double rho) {
            return violation_bound_mm1(mu / rho, mu, 3.0);
        });
        double const r_dm1 = argmin(rhos, [mu](double rho) {
            auto theta = solve_theta_star(QueueModel::dm1(mu / rho, mu));
            return violation_bound_dm1(mu / rho, mu, theta.value, 3.0);
        });
        bool const interior = r_mm1 != rhos.front() && r_mm1 != rhos.back()
                              && r_dm1 != rhos.front() && r_dm1 != rhos.back();
        ok = ok && interior;
        dm1_argmins.push_back(r_dm1);
        detail << "d=3 argmin(mu=" << mu << ") mm1=" << r_mm1 << " dm1=" << r_dm1
               << "; ";
    }
    bool const ordered = std::is_sorted(dm1_argmins.begin(), dm1_argmins.end());
    ok = ok && ordered;
    if (!ok)
    {
        margin = std::min(margin, -1.0);
    }
    return {"optimal_utilization", ok, margin, detail.str()};
}

CheckResult check_dominance(ValidationOptions const& opts)
{
    SimConfig cfg;
    cfg.num_packets = opts.quick ? 100'000 : 1'000'000;
    cfg.warmup_packets = 10'000;
    cfg.replications = opts.quick ? 4 : 20;
    cfg.base_seed = opts.seed;
    auto const thresholds = range(1.0, 10.0, 1.0);

    double margin = std::numeric_limits<double>::infinity();
    std::string worst_case;
    for (bool dm1 : {false, true})
    {
        for (double rho : {0.3, 0.5, 0.7})
        {
            auto const model = dm1 ? QueueModel::dm1(1.0 / rho, 1.0)
                                   : QueueModel::mm1(1.0 / rho, 1.0);
            auto const curve = make_bound_curve(model, thresholds);
            auto const sim = summarize_peak_aoi(model, cfg, thresholds);
            for (std::size_t i = 0; i < thresholds.size(); ++i)
            {
                if (curve.points[i].bound >= 1.0)
                {
                    continue;  // trivially dominated
                }
                auto const& est = sim.violation[i];
                double const slack = curve.points[i].bound + 3.0 * est.stderr_binomial
                                     - est.p_hat;
                if (slack < margin)
                {
                    margin = slack;
                    std::ostringstream os;
                    os << (dm1 ? "dm1" : "mm1") << " rho=" << rho
                       << " d=" << thresholds[i] << " empirical=" << est.p_hat
                       << " bound=" << curve.points[i].bound;
                    worst_case = os.str();
                }
            }
        }
    }
    return {"bound_dominance", margin >= 0.0, margin, "tightest: " + worst_case};
}

CheckResult check_backlog_tail(ValidationOptions const& opts)
{
    SimConfig cfg;
    cfg.num_packets = opts.quick ? 100'000 : 1'000'000;
    cfg.warmup_packets = 10'000;
    cfg.replications = 1;
    cfg.base_seed = opts.seed + 1;
    std::vector<double> const ys{1.0, 2.0, 4.0, 8.0};
    auto const model = QueueModel::mm1(2.0, 1.0);
    double const theta = solve_theta_star(model).value;
    auto const tails = summarize_backlog_tail(model, cfg, ys);
    double margin = std::numeric_limits<double>::infinity();
    std::ostringstream detail;
    for (auto const& t : tails)
    {
        double const bound = backlog_tail_bound(theta, t.threshold);
        margin = std::min(margin, bound + 3.0 * t.stderr_binomial - t.p_hat);
        detail << "y=" << t.threshold << " Pr{B>y}=" << t.p_hat << "<=" << bound
               << "; ";
    }
    return {"backlog_tail_bound", margin >= 0.0, margin, detail.str()};
}

CheckResult check_max_plus(ValidationOptions const& opts)
{
    int const seeds = opts.quick ? 5 : 20;
    std::vector<QueueModel> const models{
        QueueModel::mm1(2.0, 1.0),
        QueueModel::dm1(1.5, 1.0),
        QueueModel{Distribution::erlang(3, 1.2), Distribution::erlang(2, 0.9)},
    };
    double worst = 0.0;
    for (auto const& model : models)
    {
        for (int s = 0; s < seeds; ++s)
        {
            SimConfig cfg{1000, 0, 1, opts.seed + 100 + static_cast<std::uint64_t>(s)};
            auto const sim = simulate_peak_aoi(model, cfg);
            Rng rng(sim.per_replication_seed[0]);
            auto const ref = max_plus_reference(model, 1000, rng);
            for (std::size_t i = 0; i < ref.size(); ++i)
            {
                worst = std::max(worst, std::abs(ref[i] - sim.peak_samples[0][i]));
            }
        }
    }
    return tolerance_check("max_plus_equivalence", worst, 1e-12,
                           "max |lindley - max-plus| = " + fmt17(worst));
}

CheckResult check_exact_means(ValidationOptions const& opts)
{
    SimConfig cfg;
    cfg.num_packets = opts.quick ? 100'000 : 1'000'000;
    cfg.warmup_packets = 10'000;
    cfg.replications = opts.quick ? 5 : 20;
    cfg.base_seed = opts.seed + 2;
    double margin = std::numeric_limits<double>::infinity();
    std::ostringstream detail;
    struct Case
    {
        QueueModel model;
        double exact;
        char const* name;
    };
    std::vector<Case> const cases{
        {QueueModel::mm1(2.0, 1.0), exact_mean_peak_mm1(2.0, 1.0), "mm1(2,1)"},
        {QueueModel::dm1(2.0, 1.0), exact_mean_peak_dm1(2.0, 1.0), "dm1(2,1)"},
    };
    for (auto const& c : cases)
    {
        auto const sim = summarize_peak_aoi(c.model, cfg, std::vector<double>{});
        double const slack = 3.0 * sim.mean.stderr - std::abs(sim.mean.mean - c.exact);
        margin = std::min(margin, slack);
        detail << c.name << " exact=" << c.exact << " sim=" << sim.mean.mean
               << "+-" << sim.mean.stderr << "; ";
    }
    return {"exact_means_vs_simulation", margin >= 0.0, margin, detail.str()};
}

}  // namespace

bool ValidationReport::all_passed() const noexcept
{
    return std::all_of(checks.begin(), checks.end(),
                       [](CheckResult const& c) { return c.passed; });
}

std::string ValidationReport::to_text() const
{
    std::ostringstream os;
    for (auto const& c : checks)
    {
        os << (c.passed ? "PASS " : "FAIL ") << c.name << " margin=" << c.margin
           << " | " << c.detail << '\n';
    }
    os << (all_passed() ? "ALL PASSED" : "FAILURES PRESENT") << '\n';
    return os.str();
}

ValidationReport run_validation(ValidationOptions const& opts)
{
    ValidationReport report;
    auto run = [&](std::string const& name, auto&& check) {
        try
        {
            report.checks.push_back(check());
        }
        catch (std::exception const& e)
        {
            report.checks.push_back({name, false, -std::numeric_limits<double>::infinity(),
                                     std::string("error: ") + e.what()});
        }
    };
    run("theta_feasibility", [&] { return check_theta_feasibility(opts); });
    run("closed_form_vs_quadrature", [&] { return check_closed_vs_quadrature(opts); });
    run("theta_identities", [] { return check_theta_identities(); });
    run("gap_identity", [] { return check_gap_identity(); });
    run("optimal_utilization", [] { return check_optimal_utilization(); });
    run("bound_dominance", [&] { return check_dominance(opts); });
    run("backlog_tail_bound", [&] { return check_backlog_tail(opts); });
    run("max_plus_equivalence", [&] { return check_max_plus(opts); });
    run("exact_means_vs_simulation", [&] { return check_exact_means(opts); });
    return report;
}

}  // namespace aoi
