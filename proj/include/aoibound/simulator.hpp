// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <vector>

#include "rng.hpp"
#include "theta_solver.hpp"

namespace aoi {

struct SimConfig
{
    std::size_t num_packets = 1'000'000;
    std::size_t warmup_packets = 10'000;
    std::size_t replications = 20;
    std::uint64_t base_seed = 1;

    //! Throws InvalidArgument on an inconsistent configuration.
    void validate() const;
    std::size_t retained_per_replication() const noexcept
    {
        return num_packets - warmup_packets;
    }
};

/*!
 * Per-replication Monte Carlo output.
 *
 * Samples are kept only for packets k > warmup_packets (1-based). The
 * backlog samples are W_k, which has the stationary law of B.
 */
struct SimResult
{
    QueueModel model;
    std::vector<std::vector<double>> peak_samples;
    std::vector<std::vector<double>> backlog_samples;
    std::vector<std::uint64_t> per_replication_seed;
};

/// One packet of the FCFS recursion, k is 1-based.
struct PacketRecord
{
    std::size_t k;
    double interarrival;  //!< Y_k
    double service;       //!< Z_k
    double wait;          //!< W_k
    double peak;          //!< P(k) = Y_k + W_k + Z_k
};

/*!
 * Run one replication's event loop.
 *
 * Draw order per packet is Y_k then Z_k from \c rng. Waiting times follow
 * W_1 = 0, W_k = max(0, W_{k−1} + Z_{k−1} − Y_k).
 */
void run_packets(QueueModel const& model,
                 std::size_t num_packets,
                 Rng& rng,
                 std::function<void(PacketRecord const&)> const& sink);

SimResult simulate_peak_aoi(QueueModel const& model, SimConfig const& cfg);

//! Stationary backlog samples; requires ρ < 1.
SimResult simulate_backlog(QueueModel const& model, SimConfig const& cfg);

/*!
 * Peaks from the nested max-plus expression, evaluated by brute force
 * (quadratic cost). Draws in the same order as run_packets.
 */
std::vector<double> max_plus_reference(QueueModel const& model,
                                       std::size_t n_packets,
                                       Rng& rng);

/// Tail estimate Pr{X > threshold} from pooled replications.
struct TailEstimate
{
    double threshold;
    double p_hat;
    //! √(p̂(1−p̂)/n) over all pooled samples.
    double stderr_binomial;
    //! Spread of the per-replication estimates / √R (0 when R = 1).
    double stderr_replication;
    std::uint64_t n_samples;
    bool low_confidence;  //!< p̂ < 1e-4
};

struct MeanEstimate
{
    double mean;
    //! Between-replication standard error (naive i.i.d. error when R = 1).
    double stderr;
    std::uint64_t n_samples;
};

inline constexpr double low_confidence_level = 1e-4;

TailEstimate tail_estimate(std::vector<std::vector<double>> const& samples,
                           double threshold);
MeanEstimate mean_estimate(std::vector<std::vector<double>> const& samples);

/// Streaming summary of a peak-AoI run; no samples are stored.
struct PeakSummary
{
    std::vector<TailEstimate> violation;
    MeanEstimate mean;
    std::vector<std::uint64_t> per_replication_seed;
};

/*!
 * Violation probabilities at every threshold and the mean peak, computed
 * replication-by-replication without keeping samples.
 */
PeakSummary summarize_peak_aoi(QueueModel const& model,
                               SimConfig const& cfg,
                               std::span<double const> thresholds);

//! Streaming counterpart of simulate_backlog followed by tail_estimate.
std::vector<TailEstimate> summarize_backlog_tail(QueueModel const& model,
                                                 SimConfig const& cfg,
                                                 std::span<double const> thresholds);

/*!
 * Write one CSV per replication with columns k,interarrival,service,wait,peak
 * (post-warmup rows). Returns the paths written.
 */
std::vector<std::filesystem::path>
export_replication_csv(QueueModel const& model,
                       SimConfig const& cfg,
                       std::filesystem::path const& directory);

//! Worker count: AOI_BOUND_THREADS if set and nonzero, else hardware.
std::size_t worker_count();

/*!
 * Run task(i) for i in [0, n) on up to worker_count() threads. Results must
 * be written to slots owned by index i.
 */
void parallel_for(std::size_t n, std::function<void(std::size_t)> const& task);

}  // namespace aoi
