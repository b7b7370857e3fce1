// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#include "aoibound/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aoibound/bound_engine.hpp"
#include "aoibound/errors.hpp"
#include "aoibound/exact_oracles.hpp"
#include "aoibound/format.hpp"
#include "aoibound/grid.hpp"
#include "aoibound/simulator.hpp"
#include "aoibound/svg_plot.hpp"
#include "aoibound/validation.hpp"

namespace aoi::cli {
namespace {

using nlohmann::json;

struct Settings
{
    std::string model = "mm1";
    std::optional<double> lambda_t;
    std::optional<double> mu_t;
    std::optional<double> D;
    std::optional<std::string> arrival;
    std::optional<std::string> service;

    std::optional<std::string> d_grid;
    std::optional<std::string> rho_grid;

    SimConfig sim;

    std::optional<std::string> out;
    std::optional<std::string> svg;
    std::optional<std::string> raw_dir;

    std::string mode = "violation";
    bool simulate = false;
    bool quick = false;
    bool force_generic = false;
    std::optional<double> theta_override;
};

//---------------------------------------------------------------------------//
// Config file: JSON with sections mirroring the flags.
//---------------------------------------------------------------------------//

std::string grid_text(json const& v)
{
    if (v.is_string())
    {
        return v.get<std::string>();
    }
    if (v.is_number())
    {
        return fmt17(v.get<double>());
    }
    if (v.is_array())
    {
        std::string s;
        for (auto const& item : v)
        {
            if (!s.empty())
            {
                s += ',';
            }
            s += fmt17(item.get<double>());
        }
        return s;
    }
    throw InvalidArgument("grid entries must be strings, numbers or arrays");
}

template<class Fn>
void for_section(json const& root, char const* name, Fn&& fn)
{
    if (!root.contains(name))
    {
        return;
    }
    auto const& section = root.at(name);
    if (!section.is_object())
    {
        throw InvalidArgument(std::string("config section '") + name
                              + "' must be an object");
    }
    for (auto const& [key, value] : section.items())
    {
        if (!fn(key, value))
        {
            throw InvalidArgument("unknown config key '" + std::string(name) + "."
                                  + key + "'");
        }
    }
}

void apply_config(Settings& s, std::string const& path)
{
    std::ifstream is(path);
    if (!is)
    {
        throw InvalidArgument("cannot open config file " + path);
    }
    json root;
    try
    {
        root = json::parse(is);
    }
    catch (json::exception const& e)
    {
        throw InvalidArgument("config " + path + ": " + e.what());
    }
    static char const* const known[]
        = {"model", "grid", "simulation", "output", "sweep", "validate", "bound"};
    for (auto const& [key, _] : root.items())
    {
        if (std::find(std::begin(known), std::end(known), key) == std::end(known))
        {
            throw InvalidArgument("unknown config section '" + key + "'");
        }
    }

    try
    {
        for_section(root, "model", [&](std::string const& k, json const& v) {
            if (k == "type") s.model = v.get<std::string>();
            else if (k == "lambda") s.lambda_t = v.get<double>();
            else if (k == "mu") s.mu_t = v.get<double>();
            else if (k == "D") s.D = v.get<double>();
            else if (k == "arrival") s.arrival = v.get<std::string>();
            else if (k == "service") s.service = v.get<std::string>();
            else return false;
            return true;
        });
        for_section(root, "grid", [&](std::string const& k, json const& v) {
            if (k == "d") s.d_grid = grid_text(v);
            else if (k == "rho") s.rho_grid = grid_text(v);
            else return false;
            return true;
        });
        for_section(root, "simulation", [&](std::string const& k, json const& v) {
            if (k == "seed") s.sim.base_seed = v.get<std::uint64_t>();
            else if (k == "packets") s.sim.num_packets = v.get<std::size_t>();
            else if (k == "warmup") s.sim.warmup_packets = v.get<std::size_t>();
            else if (k == "reps") s.sim.replications = v.get<std::size_t>();
            else return false;
            return true;
        });
        for_section(root, "output", [&](std::string const& k, json const& v) {
            if (k == "out") s.out = v.get<std::string>();
            else if (k == "svg") s.svg = v.get<std::string>();
            else if (k == "raw_dir") s.raw_dir = v.get<std::string>();
            else return false;
            return true;
        });
        for_section(root, "sweep", [&](std::string const& k, json const& v) {
            if (k == "mode") s.mode = v.get<std::string>();
            else if (k == "simulate") s.simulate = v.get<bool>();
            else return false;
            return true;
        });
        for_section(root, "validate", [&](std::string const& k, json const& v) {
            if (k == "quick") s.quick = v.get<bool>();
            else if (k == "theta_override") s.theta_override = v.get<double>();
            else return false;
            return true;
        });
        for_section(root, "bound", [&](std::string const& k, json const& v) {
            if (k == "force_generic") s.force_generic = v.get<bool>();
            else return false;
            return true;
        });
    }
    catch (json::exception const& e)
    {
        throw InvalidArgument("config " + path + ": " + e.what());
    }
}

//---------------------------------------------------------------------------//
// Flag binding: values land in holders and are applied over the config.
//---------------------------------------------------------------------------//

class Binder
{
  public:
    template<class T>
    void option(CLI::App* app,
                std::string const& name,
                std::optional<T> Settings::*field,
                std::string const& desc)
    {
        auto holder = std::make_shared<T>();
        auto* opt = app->add_option(name, *holder, desc);
        appliers_.emplace_back(opt, [holder, field](Settings& s) { s.*field = *holder; });
    }

    template<class T, class U>
    void member(CLI::App* app,
                std::string const& name,
                std::function<T&(Settings&)> access,
                std::string const& desc)
    {
        auto holder = std::make_shared<U>();
        auto* opt = app->add_option(name, *holder, desc);
        appliers_.emplace_back(opt, [holder, access](Settings& s) {
            access(s) = static_cast<T>(*holder);
        });
    }

    void flag(CLI::App* app,
              std::string const& name,
              bool Settings::*field,
              std::string const& desc)
    {
        auto* opt = app->add_flag(name, desc);
        appliers_.emplace_back(opt, [field](Settings& s) { s.*field = true; });
    }

    void apply(Settings& s) const
    {
        for (auto const& [opt, fn] : appliers_)
        {
            if (opt->count() > 0)
            {
                fn(s);
            }
        }
    }

  private:
    std::vector<std::pair<CLI::Option*, std::function<void(Settings&)>>> appliers_;
};

void add_common(CLI::App* app, Binder& b)
{
    b.member<std::string, std::string>(
        app, "--model", [](Settings& s) -> std::string& { return s.model; },
        "Model template: mm1 | dm1 | generic");
    b.option(app, "--lambda", &Settings::lambda_t, "M/M/1 mean inter-arrival time");
    b.option(app, "--mu", &Settings::mu_t, "Mean service time");
    b.option(app, "--D", &Settings::D, "D/M/1 deterministic inter-arrival time");
    b.option(app, "--arrival", &Settings::arrival, "Inter-arrival literal, e.g. exp:mean=2");
    b.option(app, "--service", &Settings::service, "Service literal, e.g. erlang:shape=2,mean=0.8");
    b.option(app, "--d", &Settings::d_grid, "Threshold grid start:stop:step or list");
    b.option(app, "--rho", &Settings::rho_grid, "Utilization grid start:stop:step or list");
    b.member<std::uint64_t, std::uint64_t>(
        app, "--seed", [](Settings& s) -> std::uint64_t& { return s.sim.base_seed; },
        "Base seed");
    b.member<std::size_t, std::size_t>(
        app, "--packets", [](Settings& s) -> std::size_t& { return s.sim.num_packets; },
        "Packets per replication");
    b.member<std::size_t, std::size_t>(
        app, "--warmup", [](Settings& s) -> std::size_t& { return s.sim.warmup_packets; },
        "Warm-up packets discarded per replication");
    b.member<std::size_t, std::size_t>(
        app, "--reps", [](Settings& s) -> std::size_t& { return s.sim.replications; },
        "Replications");
    b.option(app, "--out", &Settings::out, "Output path (default stdout)");
    b.option(app, "--svg", &Settings::svg, "Also render an SVG plot here");
    b.flag(app, "--quick", &Settings::quick, "Reduced validation suite");
}

//---------------------------------------------------------------------------//
// Model construction
//---------------------------------------------------------------------------//

double need(std::optional<double> const& v, char const* flag)
{
    if (!v)
    {
        throw InvalidArgument(std::string("missing ") + flag);
    }
    return *v;
}

std::string need(std::optional<std::string> const& v, char const* flag)
{
    if (!v)
    {
        throw InvalidArgument(std::string("missing ") + flag);
    }
    return *v;
}

QueueModel build_model(Settings const& s)
{
    if (s.model == "mm1")
    {
        return QueueModel::mm1(need(s.lambda_t, "--lambda"), need(s.mu_t, "--mu"));
    }
    if (s.model == "dm1")
    {
        return QueueModel::dm1(need(s.D, "--D"), need(s.mu_t, "--mu"));
    }
    if (s.model == "generic")
    {
        return {parse_distribution(need(s.arrival, "--arrival")),
                parse_distribution(need(s.service, "--service"))};
    }
    throw InvalidArgument("unknown model '" + s.model + "'");
}

//! Template model with its inter-arrival mean set to E[Z]/ρ.
QueueModel model_at_rho(Settings const& s, double rho)
{
    if (s.model == "mm1")
    {
        double const mu = need(s.mu_t, "--mu");
        return QueueModel::mm1(mu / rho, mu);
    }
    if (s.model == "dm1")
    {
        double const mu = need(s.mu_t, "--mu");
        return QueueModel::dm1(mu / rho, mu);
    }
    if (s.model == "generic")
    {
        auto service = parse_distribution(need(s.service, "--service"));
        auto arrival = parse_distribution(need(s.arrival, "--arrival"));
        return {arrival.with_mean(mean(service) / rho), service};
    }
    throw InvalidArgument("unknown model '" + s.model + "'");
}

std::vector<double> need_grid(std::optional<std::string> const& g, char const* flag)
{
    auto grid = parse_grid(need(g, flag));
    if (grid.empty())
    {
        throw InvalidArgument(std::string("empty grid for ") + flag);
    }
    return grid;
}

//---------------------------------------------------------------------------//
// Output helpers
//---------------------------------------------------------------------------//

//! Buffers CSV text so a failing command leaves no partial file behind.
class Output
{
  public:
    Output(Settings const& s, std::ostream& fallback) : path_(s.out), fallback_(fallback) {}

    std::ostream& stream() { return buffer_; }

    void commit()
    {
        if (!path_)
        {
            fallback_ << buffer_.str();
            return;
        }
        std::ofstream os(*path_);
        if (!(os << buffer_.str()))
        {
            throw InvalidArgument("cannot write output " + *path_);
        }
    }

  private:
    std::optional<std::string> path_;
    std::ostream& fallback_;
    std::ostringstream buffer_;
};

void write_manifest(Settings const& s, json manifest)
{
    if (!s.out)
    {
        return;
    }
    std::ofstream os(*s.out + ".manifest.json");
    if (!os)
    {
        throw InvalidArgument("cannot write manifest next to " + *s.out);
    }
    os << manifest.dump(2) << '\n';
}

json sim_manifest(Settings const& s, QueueModel const& model, PeakSummary const& summary)
{
    return {
        {"model",
         {{"interarrival", to_string(model.interarrival())},
          {"service", to_string(model.service())},
          {"utilization", model.utilization()}}},
        {"seed", s.sim.base_seed},
        {"packets", s.sim.num_packets},
        {"warmup", s.sim.warmup_packets},
        {"reps", s.sim.replications},
        {"per_replication_seed", summary.per_replication_seed},
        {"mean_peak", summary.mean.mean},
        {"mean_peak_stderr", summary.mean.stderr},
    };
}

//---------------------------------------------------------------------------//
// Subcommands
//---------------------------------------------------------------------------//

int cmd_bound(Settings const& s, std::ostream& out)
{
    auto const model = build_model(s);
    auto const grid = need_grid(s.d_grid, "--d");
    BoundCurveOptions opts;
    opts.force_generic = s.force_generic;
    auto const curve = make_bound_curve(model, grid, opts);

    Output o(s, out);
    auto& os = o.stream();
    os << "d,bound,method,theta_star\n";
    PlotSeries series{"bound", {}, {}};
    for (auto const& p : curve.points)
    {
        os << fmt17(p.d) << ',' << fmt17(p.bound) << ',' << to_string(curve.method)
           << ',' << fmt17(curve.theta.value) << '\n';
        series.x.push_back(p.d);
        series.y.push_back(p.bound);
    }
    if (s.svg)
    {
        write_svg(*s.svg, {"Peak AoI violation bound (rho=" + fmt17(model.utilization()) + ")",
                           "threshold d", "Pr{P > d} bound", {series}});
    }
    o.commit();
    return exit_ok;
}

int cmd_simulate(Settings const& s, std::ostream& out)
{
    s.sim.validate();
    auto const model = build_model(s);
    auto const grid = need_grid(s.d_grid, "--d");
    auto const start = std::chrono::steady_clock::now();
    auto const summary = summarize_peak_aoi(model, s.sim, grid);
    double const wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                            .count();

    Output o(s, out);
    auto& os = o.stream();
    os << "d,empirical_p,stderr,n_samples,low_confidence_flag\n";
    for (auto const& t : summary.violation)
    {
        os << fmt17(t.threshold) << ',' << fmt17(t.p_hat) << ','
           << fmt17(t.stderr_binomial) << ',' << t.n_samples << ','
           << (t.low_confidence ? 1 : 0) << '\n';
    }
    auto manifest = sim_manifest(s, model, summary);
    manifest["wall_time_seconds"] = wall;
    write_manifest(s, manifest);
    if (s.raw_dir)
    {
        export_replication_csv(model, s.sim, *s.raw_dir);
    }
    o.commit();
    return exit_ok;
}

int cmd_compare(Settings const& s, std::ostream& out)
{
    auto const model = build_model(s);
    auto const grid = need_grid(s.d_grid, "--d");
    BoundCurveOptions opts;
    opts.force_generic = s.force_generic;
    s.sim.validate();
    auto const curve = make_bound_curve(model, grid, opts);
    auto const summary = summarize_peak_aoi(model, s.sim, grid);

    Output o(s, out);
    auto& os = o.stream();
    os << "d,bound,empirical_p,stderr,n_samples,low_confidence_flag,within_bound\n";
    PlotSeries bound{"bound", {}, {}};
    PlotSeries empirical{"simulation", {}, {}};
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        auto const& p = curve.points[i];
        auto const& t = summary.violation[i];
        bool const within = t.p_hat <= p.bound + 3.0 * t.stderr_binomial;
        os << fmt17(p.d) << ',' << fmt17(p.bound) << ',' << fmt17(t.p_hat) << ','
           << fmt17(t.stderr_binomial) << ',' << t.n_samples << ','
           << (t.low_confidence ? 1 : 0) << ',' << (within ? 1 : 0) << '\n';
        bound.x.push_back(p.d);
        bound.y.push_back(p.bound);
        empirical.x.push_back(p.d);
        empirical.y.push_back(t.p_hat);
    }

    auto manifest = sim_manifest(s, model, summary);
    manifest["bound_method"] = to_string(curve.method);
    manifest["theta_star"] = curve.theta.value;
    if (model.is_mm1())
    {
        double const l = mean(model.interarrival());
        double const m = mean(model.service());
        manifest["mean_bound"] = mean_bound_mm1(l, m);
        manifest["exact_mean"] = exact_mean_peak_mm1(l, m);
    }
    else if (model.is_dm1())
    {
        double const D = mean(model.interarrival());
        double const m = mean(model.service());
        manifest["mean_bound"] = mean_bound_dm1(D, m, curve.theta.value);
        manifest["exact_mean"] = exact_mean_peak_dm1(D, m);
    }
    write_manifest(s, manifest);
    if (s.svg)
    {
        write_svg(*s.svg, {"Bound vs simulation", "threshold d", "Pr{P > d}",
                           {bound, empirical}});
    }
    o.commit();
    return exit_ok;
}

int cmd_sweep_rho(Settings const& s, std::ostream& out, std::ostream& err)
{
    auto const rhos = need_grid(s.rho_grid, "--rho");
    if (s.simulate)
    {
        s.sim.validate();
    }
    bool const mean_mode = s.mode == "mean";
    if (!mean_mode && s.mode != "violation")
    {
        throw InvalidArgument("--mode must be violation or mean");
    }
    if (mean_mode && s.model == "generic")
    {
        throw InvalidArgument("mean mode supports the mm1 and dm1 templates only");
    }
    double d = 3.0;
    if (!mean_mode && s.d_grid)
    {
        auto const g = parse_grid(*s.d_grid);
        if (g.size() != 1)
        {
            throw InvalidArgument("violation sweep takes a single threshold --d");
        }
        d = g.front();
    }

    Output o(s, out);
    auto& os = o.stream();
    std::size_t columns;
    if (mean_mode)
    {
        os << "rho,mean_bound,exact_mean" << (s.simulate ? ",empirical_mean,stderr" : "")
           << '\n';
        columns = s.simulate ? 4 : 2;
    }
    else
    {
        os << "rho,bound" << (s.simulate ? ",empirical_p,stderr" : "") << '\n';
        columns = s.simulate ? 3 : 1;
    }

    PlotSeries primary{mean_mode ? "mean bound" : "bound", {}, {}};
    PlotSeries secondary{mean_mode ? "exact mean" : "simulation", {}, {}};
    std::size_t valid = 0;
    for (double rho : rhos)
    {
        if (!(rho > 0.0 && rho < 1.0))
        {
            err << "warning: skipping rho=" << fmt17(rho) << " (needs 0 < rho < 1)\n";
            os << fmt17(rho);
            for (std::size_t c = 0; c < columns; ++c)
            {
                os << ",skipped";
            }
            os << '\n';
            continue;
        }
        ++valid;
        auto const model = model_at_rho(s, rho);
        os << fmt17(rho);
        std::vector<double> const dv{d};
        if (mean_mode)
        {
            double const m = mean(model.service());
            double const a = mean(model.interarrival());
            double bound;
            double exact;
            if (model.is_mm1())
            {
                bound = mean_bound_mm1(a, m);
                exact = exact_mean_peak_mm1(a, m);
            }
            else
            {
                bound = mean_bound_dm1(a, m, solve_theta_star(model).value);
                exact = exact_mean_peak_dm1(a, m);
            }
            os << ',' << fmt17(bound) << ',' << fmt17(exact);
            primary.x.push_back(rho);
            primary.y.push_back(bound);
            secondary.x.push_back(rho);
            secondary.y.push_back(exact);
            if (s.simulate)
            {
                auto const sim = summarize_peak_aoi(model, s.sim, std::vector<double>{});
                os << ',' << fmt17(sim.mean.mean) << ',' << fmt17(sim.mean.stderr);
            }
        }
        else
        {
            BoundCurveOptions opts;
            opts.force_generic = s.force_generic;
            double const bound = make_bound_curve(model, dv, opts).points.front().bound;
            os << ',' << fmt17(bound);
            primary.x.push_back(rho);
            primary.y.push_back(bound);
            if (s.simulate)
            {
                auto const sim = summarize_peak_aoi(model, s.sim, dv);
                os << ',' << fmt17(sim.violation.front().p_hat) << ','
                   << fmt17(sim.violation.front().stderr_binomial);
                secondary.x.push_back(rho);
                secondary.y.push_back(sim.violation.front().p_hat);
            }
        }
        os << '\n';
    }
    if (valid == 0)
    {
        throw UnstableModel("every rho in the grid was skipped");
    }
    if (s.svg)
    {
        Plot plot{mean_mode ? "Average peak AoI vs utilization"
                                : "Violation bound at d=" + fmt17(d) + " vs utilization",
                      "utilization rho",
                      mean_mode ? "mean peak AoI" : "Pr{P > d}",
                      {primary}};
        if (!secondary.x.empty())
        {
            plot.series.push_back(secondary);
        }
        write_svg(*s.svg, plot);
    }
    o.commit();
    return exit_ok;
}

int cmd_sweep_d(Settings const& s, std::ostream& out, std::ostream& err)
{
    auto const rhos = need_grid(s.rho_grid, "--rho");
    auto const grid = need_grid(s.d_grid, "--d");
    Output o(s, out);
    auto& os = o.stream();
    os << "rho,d,bound,method,theta_star\n";
    Plot plot{"Peak AoI violation bound", "threshold d", "Pr{P > d} bound", {}};
    std::size_t valid = 0;
    for (double rho : rhos)
    {
        if (!(rho > 0.0 && rho < 1.0))
        {
            err << "warning: skipping rho=" << fmt17(rho) << " (needs 0 < rho < 1)\n";
            os << fmt17(rho) << ",skipped,skipped,skipped,skipped\n";
            continue;
        }
        ++valid;
        BoundCurveOptions opts;
        opts.force_generic = s.force_generic;
        auto const curve = make_bound_curve(model_at_rho(s, rho), grid, opts);
        PlotSeries series{"rho=" + fmt17(rho), {}, {}};
        for (auto const& p : curve.points)
        {
            os << fmt17(rho) << ',' << fmt17(p.d) << ',' << fmt17(p.bound) << ','
               << to_string(curve.method) << ',' << fmt17(curve.theta.value) << '\n';
            series.x.push_back(p.d);
            series.y.push_back(p.bound);
        }
        plot.series.push_back(std::move(series));
    }
    if (valid == 0)
    {
        throw UnstableModel("every rho in the grid was skipped");
    }
    if (s.svg)
    {
        write_svg(*s.svg, plot);
    }
    o.commit();
    return exit_ok;
}

int cmd_validate(Settings const& s, std::ostream& out, bool seed_given)
{
    ValidationOptions opts;
    opts.quick = s.quick;
    opts.theta_override = s.theta_override;
    if (seed_given)
    {
        opts.seed = s.sim.base_seed;
    }
    auto const report = run_validation(opts);
    auto const text = report.to_text();
    out << text;
    if (s.out)
    {
        std::ofstream os(*s.out);
        if (!os)
        {
            throw InvalidArgument("cannot open output " + *s.out);
        }
        os << text;
    }
    return report.all_passed() ? exit_ok : exit_validation_failure;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Probabilistic peak-AoI bounds for GI/GI/1 FCFS queues"};
    app.require_subcommand(1);

    Binder binder;
    std::string config_path;
    std::vector<CLI::App*> subs;
    auto add_sub = [&](char const* name, char const* desc) {
        auto* sub = app.add_subcommand(name, desc);
        add_common(sub, binder);
        sub->add_option("--config", config_path, "JSON config file (flags override)");
        subs.push_back(sub);
        return sub;
    };

    auto* bound = add_sub("bound", "Violation-probability bound over a threshold grid");
    auto* simulate = add_sub("simulate", "Empirical violation probabilities by simulation");
    auto* sweep_rho = add_sub("sweep-rho", "Bound (or mean bound) across utilizations");
    auto* sweep_d = add_sub("sweep-d", "Bound curves over d for several utilizations");
    auto* compare = add_sub("compare", "Bound next to simulation on one grid");
    auto* validate = add_sub("validate", "Run the invariant suite");

    for (auto* sub : {bound, compare, sweep_rho, sweep_d})
    {
        binder.flag(sub, "--force-generic", &Settings::force_generic,
                    "Use quadrature even when a closed form exists");
    }
    binder.member<std::string, std::string>(
        sweep_rho, "--mode", [](Settings& s) -> std::string& { return s.mode; },
        "violation | mean");
    binder.flag(sweep_rho, "--simulate", &Settings::simulate, "Add simulated columns");
    binder.option(simulate, "--raw-dir", &Settings::raw_dir,
                  "Directory for per-replication sample CSVs");
    binder.option(validate, "--theta-override", &Settings::theta_override,
                  "theta used by the feasibility check");

    std::vector<char const*> argv{"aoi_bound"};
    for (auto const& a : args)
    {
        argv.push_back(a.c_str());
    }

    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (CLI::CallForHelp const&)
    {
        out << app.help();
        return exit_ok;
    }
    catch (CLI::CallForAllHelp const&)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    }
    catch (CLI::ParseError const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_invalid_model;
    }

    try
    {
        Settings settings;
        if (!config_path.empty())
        {
            apply_config(settings, config_path);
        }
        binder.apply(settings);

        if (bound->parsed()) return cmd_bound(settings, out);
        if (simulate->parsed()) return cmd_simulate(settings, out);
        if (compare->parsed()) return cmd_compare(settings, out);
        if (sweep_rho->parsed()) return cmd_sweep_rho(settings, out, err);
        if (sweep_d->parsed()) return cmd_sweep_d(settings, out, err);
        if (validate->parsed())
        {
            return cmd_validate(settings, out, validate->get_option("--seed")->count() > 0);
        }
    }
    catch (UnstableModel const& e)
    {
        err << "error: UnstableModel: " << e.what() << '\n';
        return exit_invalid_model;
    }
    catch (NumericalError const& e)
    {
        err << "error: numerical failure: " << e.what() << '\n';
        return exit_numerical_failure;
    }
    catch (Error const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_invalid_model;
    }
    catch (std::exception const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_numerical_failure;
    }
    return exit_invalid_model;
}

}  // namespace aoi::cli
