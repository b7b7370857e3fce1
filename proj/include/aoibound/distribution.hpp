// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "rng.hpp"

namespace aoi {

// Distribution variants. All times are in dimensionless time units.

struct Exponential
{
    double mean_time;

    friend bool operator==(Exponential const&, Exponential const&) = default;
};

struct Deterministic
{
    double value;

    friend bool operator==(Deterministic const&, Deterministic const&) = default;
};

struct Erlang
{
    int shape;
    double mean_time;

    friend bool operator==(Erlang const&, Erlang const&) = default;
};

/*!
 * Nonnegative random-variable model for an inter-arrival or service time.
 *
 * Immutable once constructed; the constructor rejects invalid parameters.
 */
class Distribution
{
  public:
    using Variant = std::variant<Exponential, Deterministic, Erlang>;

    Distribution(Exponential e);
    Distribution(Deterministic d);
    Distribution(Erlang e);

    static Distribution exponential(double mean_time)
    {
        return Exponential{mean_time};
    }
    static Distribution deterministic(double value)
    {
        return Deterministic{value};
    }
    static Distribution erlang(int shape, double mean_time)
    {
        return Erlang{shape, mean_time};
    }

    Variant const& variant() const noexcept { return v_; }

    template<class T>
    bool is() const noexcept
    {
        return std::holds_alternative<T>(v_);
    }

    template<class T>
    T const& as() const
    {
        return std::get<T>(v_);
    }

    //! True when a density exists (Exponential, Erlang).
    bool is_continuous() const noexcept { return !is<Deterministic>(); }

    //! Same family with the mean rescaled to \c new_mean.
    Distribution with_mean(double new_mean) const;

    friend bool operator==(Distribution const&, Distribution const&) = default;

  private:
    Variant v_;
};

/// Moment generating function value: finite, or divergent past the domain.
class MgfValue
{
  public:
    static MgfValue finite(double v) noexcept { return MgfValue{v, true}; }
    static MgfValue divergent() noexcept { return MgfValue{0.0, false}; }

    bool is_finite() const noexcept { return finite_; }
    bool is_divergent() const noexcept { return !finite_; }

    //! Throws std::logic_error when divergent.
    double value() const;

    MgfValue operator*(MgfValue const& other) const noexcept;

  private:
    MgfValue(double v, bool f) noexcept : value_(v), finite_(f) {}

    double value_;
    bool finite_;
};

double mean(Distribution const& dist) noexcept;

//! Density at x; throws NotAbsolutelyContinuous for Deterministic.
double pdf(Distribution const& dist, double x);

double cdf(Distribution const& dist, double x) noexcept;

//! E[e^{θX}]; θ may be negative.
MgfValue mgf(Distribution const& dist, double theta) noexcept;

//! Supremum of the θ > 0 for which the MGF is finite (+inf if unbounded).
double mgf_domain_bound(Distribution const& dist) noexcept;

double sample(Distribution const& dist, Rng& rng) noexcept;

//! Parse `exp:mean=2`, `det:value=1`, `erlang:shape=3,mean=0.9`.
Distribution parse_distribution(std::string_view literal);

//! Canonical literal form accepted by parse_distribution.
std::string to_string(Distribution const& dist);

}  // namespace aoi
