// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#include "aoibound/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>

#include "aoibound/errors.hpp"
#include "aoibound/format.hpp"

namespace aoi {

void SimConfig::validate() const
{
    if (num_packets == 0)
    {
        throw InvalidArgument("num_packets must be positive");
    }
    if (warmup_packets >= num_packets)
    {
        throw InvalidArgument("warmup_packets must be < num_packets");
    }
    if (replications == 0)
    {
        throw InvalidArgument("replications must be >= 1");
    }
}

namespace {

void check_simulable(QueueModel const& model)
{
    // QueueModel already rejects ρ > 1.
    if (model.utilization() >= 1.0)
    {
        std::cerr << "warning: simulating a model at utilization 1; the queue "
                     "does not reach stationarity\n";
    }
}

// Hot loop shared by every entry point; the callback is a template so the
// streaming summaries are not paying for std::function per packet.
template<class Sink>
void packet_loop(QueueModel const& model, std::size_t n, Rng& rng, Sink&& sink)
{
    auto const& y_dist = model.interarrival();
    auto const& z_dist = model.service();
    double wait = 0.0;
    double prev_service = 0.0;
    for (std::size_t k = 1; k <= n; ++k)
    {
        double const y = sample(y_dist, rng);
        double const z = sample(z_dist, rng);
        if (k > 1)
        {
            wait = std::max(0.0, wait + prev_service - y);
        }
        sink(PacketRecord{k, y, z, wait, y + wait + z});
        prev_service = z;
    }
}

struct TailCounts
{
    std::uint64_t n = 0;
    std::vector<std::uint64_t> exceed;
    double sum = 0.0;
    double sum_sq = 0.0;
};

TailEstimate pool_tail(std::vector<TailCounts> const& reps, std::size_t idx, double threshold)
{
    std::uint64_t n = 0;
    std::uint64_t hits = 0;
    for (auto const& r : reps)
    {
        n += r.n;
        hits += r.exceed[idx];
    }
    double const p = n ? static_cast<double>(hits) / n : 0.0;
    double rep_se = 0.0;
    if (reps.size() > 1)
    {
        double m = 0.0;
        for (auto const& r : reps)
        {
            m += static_cast<double>(r.exceed[idx]) / r.n;
        }
        m /= reps.size();
        double ss = 0.0;
        for (auto const& r : reps)
        {
            double const dv = static_cast<double>(r.exceed[idx]) / r.n - m;
            ss += dv * dv;
        }
        rep_se = std::sqrt(ss / (reps.size() - 1) / reps.size());
    }
    return {threshold,
            p,
            n ? std::sqrt(p * (1.0 - p) / n) : 0.0,
            rep_se,
            n,
            p < low_confidence_level};
}

MeanEstimate pool_mean(std::vector<TailCounts> const& reps)
{
    std::uint64_t n = 0;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (auto const& r : reps)
    {
        n += r.n;
        sum += r.sum;
        sum_sq += r.sum_sq;
    }
    double const m = sum / n;
    double se;
    if (reps.size() > 1)
    {
        double ss = 0.0;
        for (auto const& r : reps)
        {
            double const dv = r.sum / r.n - m;
            ss += dv * dv;
        }
        se = std::sqrt(ss / (reps.size() - 1) / reps.size());
    }
    else
    {
        double const var = std::max(0.0, sum_sq / n - m * m);
        se = std::sqrt(var / n);
    }
    return {m, se, n};
}

std::vector<std::uint64_t> seeds_for(SimConfig const& cfg)
{
    std::vector<std::uint64_t> seeds(cfg.replications);
    for (std::size_t r = 0; r < cfg.replications; ++r)
    {
        seeds[r] = replication_seed(cfg.base_seed, r);
    }
    return seeds;
}

}  // namespace

void run_packets(QueueModel const& model,
                 std::size_t num_packets,
                 Rng& rng,
                 std::function<void(PacketRecord const&)> const& sink)
{
    packet_loop(model, num_packets, rng, sink);
}

SimResult simulate_peak_aoi(QueueModel const& model, SimConfig const& cfg)
{
    cfg.validate();
    check_simulable(model);
    SimResult result{model, {}, {}, seeds_for(cfg)};
    result.peak_samples.resize(cfg.replications);
    parallel_for(cfg.replications, [&](std::size_t r) {
        Rng rng(result.per_replication_seed[r]);
        auto& out = result.peak_samples[r];
        out.reserve(cfg.retained_per_replication());
        packet_loop(model, cfg.num_packets, rng, [&](PacketRecord const& p) {
            if (p.k > cfg.warmup_packets)
            {
                out.push_back(p.peak);
            }
        });
    });
    return result;
}

SimResult simulate_backlog(QueueModel const& model, SimConfig const& cfg)
{
    cfg.validate();
    model.require_strictly_stable();
    SimResult result{model, {}, {}, seeds_for(cfg)};
    result.peak_samples.resize(cfg.replications);
    result.backlog_samples.resize(cfg.replications);
    parallel_for(cfg.replications, [&](std::size_t r) {
        Rng rng(result.per_replication_seed[r]);
        auto& peaks = result.peak_samples[r];
        auto& backlog = result.backlog_samples[r];
        peaks.reserve(cfg.retained_per_replication());
        backlog.reserve(cfg.retained_per_replication());
        packet_loop(model, cfg.num_packets, rng, [&](PacketRecord const& p) {
            if (p.k > cfg.warmup_packets)
            {
                peaks.push_back(p.peak);
                backlog.push_back(p.wait);
            }
        });
    });
    return result;
}

std::vector<double> max_plus_reference(QueueModel const& model,
                                       std::size_t n_packets,
                                       Rng& rng)
{
    std::vector<double> y(n_packets + 1, 0.0);
    std::vector<double> z(n_packets + 1, 0.0);
    for (std::size_t k = 1; k <= n_packets; ++k)
    {
        y[k] = sample(model.interarrival(), rng);
        z[k] = sample(model.service(), rng);
    }

    std::vector<double> peaks;
    peaks.reserve(n_packets);
    for (std::size_t k = 1; k <= n_packets; ++k)
    {
        if (k == 1)
        {
            peaks.push_back(y[1] + z[1]);
            continue;
        }
        // B = max{ max_{1<=j<=k-2} Σ_{n=j}^{k-2} (Z_n − Y_{n+1}), 0 }
        double backlog = 0.0;
        double partial = 0.0;
        for (std::size_t j = k - 2; j >= 1; --j)
        {
            partial += z[j] - y[j + 1];
            backlog = std::max(backlog, partial);
        }
        peaks.push_back(std::max(backlog + z[k - 1], y[k]) + z[k]);
    }
    return peaks;
}

TailEstimate tail_estimate(std::vector<std::vector<double>> const& samples,
                           double threshold)
{
    std::vector<TailCounts> reps;
    reps.reserve(samples.size());
    for (auto const& rep : samples)
    {
        TailCounts c;
        c.n = rep.size();
        c.exceed.push_back(static_cast<std::uint64_t>(
            std::count_if(rep.begin(), rep.end(), [threshold](double v) {
                return v > threshold;
            })));
        reps.push_back(std::move(c));
    }
    return pool_tail(reps, 0, threshold);
}

MeanEstimate mean_estimate(std::vector<std::vector<double>> const& samples)
{
    std::vector<TailCounts> reps;
    for (auto const& rep : samples)
    {
        TailCounts c;
        c.n = rep.size();
        for (double v : rep)
        {
            c.sum += v;
            c.sum_sq += v * v;
        }
        reps.push_back(std::move(c));
    }
    return pool_mean(reps);
}

namespace {

template<class Select>
std::vector<TailCounts> stream_counts(QueueModel const& model,
                                      SimConfig const& cfg,
                                      std::span<double const> thresholds,
                                      std::vector<std::uint64_t> const& seeds,
                                      Select select)
{
    std::vector<double> sorted(thresholds.begin(), thresholds.end());
    if (!std::is_sorted(sorted.begin(), sorted.end()))
    {
        throw InvalidArgument("thresholds must be sorted");
    }
    std::vector<TailCounts> reps(cfg.replications);
    parallel_for(cfg.replications, [&](std::size_t r) {
        Rng rng(seeds[r]);
        TailCounts c;
        // Histogram over threshold bins, cumulated afterwards.
        std::vector<std::uint64_t> bins(sorted.size() + 1, 0);
        packet_loop(model, cfg.num_packets, rng, [&](PacketRecord const& p) {
            if (p.k <= cfg.warmup_packets)
            {
                return;
            }
            double const v = select(p);
            ++c.n;
            c.sum += v;
            c.sum_sq += v * v;
            // Number of thresholds strictly below v.
            auto const idx = static_cast<std::size_t>(
                std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
            ++bins[idx];
        });
        c.exceed.assign(sorted.size(), 0);
        std::uint64_t above = 0;
        for (std::size_t i = sorted.size(); i-- > 0;)
        {
            above += bins[i + 1];
            c.exceed[i] = above;
        }
        reps[r] = std::move(c);
    });
    return reps;
}

}  // namespace

PeakSummary summarize_peak_aoi(QueueModel const& model,
                               SimConfig const& cfg,
                               std::span<double const> thresholds)
{
    cfg.validate();
    check_simulable(model);
    PeakSummary summary;
    summary.per_replication_seed = seeds_for(cfg);
    auto reps = stream_counts(model, cfg, thresholds, summary.per_replication_seed,
                              [](PacketRecord const& p) { return p.peak; });
    for (std::size_t i = 0; i < thresholds.size(); ++i)
    {
        summary.violation.push_back(pool_tail(reps, i, thresholds[i]));
    }
    summary.mean = pool_mean(reps);
    return summary;
}

std::vector<TailEstimate> summarize_backlog_tail(QueueModel const& model,
                                                 SimConfig const& cfg,
                                                 std::span<double const> thresholds)
{
    cfg.validate();
    model.require_strictly_stable();
    auto reps = stream_counts(model, cfg, thresholds, seeds_for(cfg),
                              [](PacketRecord const& p) { return p.wait; });
    std::vector<TailEstimate> out;
    for (std::size_t i = 0; i < thresholds.size(); ++i)
    {
        out.push_back(pool_tail(reps, i, thresholds[i]));
    }
    return out;
}

std::vector<std::filesystem::path>
export_replication_csv(QueueModel const& model,
                       SimConfig const& cfg,
                       std::filesystem::path const& directory)
{
    cfg.validate();
    check_simulable(model);
    std::filesystem::create_directories(directory);
    auto const seeds = seeds_for(cfg);
    std::vector<std::filesystem::path> paths(cfg.replications);
    parallel_for(cfg.replications, [&](std::size_t r) {
        char name[64];
        std::snprintf(name, sizeof(name), "replication_%04zu.csv", r);
        paths[r] = directory / name;
        std::ofstream os(paths[r]);
        if (!os)
        {
            throw Error("cannot open " + paths[r].string());
        }
        os << "k,interarrival,service,wait,peak\n";
        Rng rng(seeds[r]);
        packet_loop(model, cfg.num_packets, rng, [&](PacketRecord const& p) {
            if (p.k > cfg.warmup_packets)
            {
                os << p.k << ',' << fmt17(p.interarrival) << ','
                   << fmt17(p.service) << ',' << fmt17(p.wait) << ','
                   << fmt17(p.peak) << '\n';
            }
        });
    });
    return paths;
}

std::size_t worker_count()
{
    if (char const* env = std::getenv("AOI_BOUND_THREADS"))
    {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
        {
            return v;
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, std::function<void(std::size_t)> const& task)
{
    std::size_t const workers = std::min(worker_count(), n);
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
        {
            task(i);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
    {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++)
            {
                try
                {
                    task(i);
                }
                catch (...)
                {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                    {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto& t : pool)
    {
        t.join();
    }
    if (failure)
    {
        std::rethrow_exception(failure);
    }
}

}  // namespace aoi
