// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace aoi {

/// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/*!
 * Seed for replication \c index of a run started from \c base_seed.
 *
 * Depends only on (base_seed, index), so replications can execute in any
 * order or concurrently and still reproduce.
 */
constexpr std::uint64_t replication_seed(std::uint64_t base_seed,
                                         std::uint64_t index) noexcept
{
    return splitmix64(base_seed ^ splitmix64(index + 0x5851f42d4c957f2dULL));
}

/*!
 * Deterministic generator state owned by exactly one worker.
 *
 * Uniform variates are built from raw 64-bit engine output rather than
 * std::uniform_real_distribution so streams are identical across standard
 * library implementations.
 */
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    //! Uniform on (0, 1].
    double uniform_open0() noexcept
    {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    std::uint64_t next_u64() noexcept { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace aoi
