// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#include "aoibound/distribution.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "aoibound/errors.hpp"

namespace aoi {
namespace {

template<class... Ts>
struct overloaded : Ts...
{
    using Ts::operator()...;
};
template<class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(double v, char const* what)
{
    if (!(v > 0.0) || !std::isfinite(v))
    {
        throw InvalidArgument(std::string(what) + " must be positive and finite");
    }
}

double erlang_rate(Erlang const& e)
{
    return e.shape / e.mean_time;
}

}  // namespace

Distribution::Distribution(Exponential e) : v_(e)
{
    require_positive(e.mean_time, "exponential mean");
}

Distribution::Distribution(Deterministic d) : v_(d)
{
    require_positive(d.value, "deterministic value");
}

Distribution::Distribution(Erlang e) : v_(e)
{
    if (e.shape < 1)
    {
        throw InvalidArgument("erlang shape must be >= 1");
    }
    require_positive(e.mean_time, "erlang mean");
}

Distribution Distribution::with_mean(double new_mean) const
{
    return std::visit(
        overloaded{
            [&](Exponential const&) { return Distribution{Exponential{new_mean}}; },
            [&](Deterministic const&) {
                return Distribution{Deterministic{new_mean}};
            },
            [&](Erlang const& e) { return Distribution{Erlang{e.shape, new_mean}}; },
        },
        v_);
}

double MgfValue::value() const
{
    if (!finite_)
    {
        throw std::logic_error("MGF is divergent");
    }
    return value_;
}

MgfValue MgfValue::operator*(MgfValue const& other) const noexcept
{
    if (!finite_ || !other.finite_)
    {
        return divergent();
    }
    return finite(value_ * other.value_);
}

double mean(Distribution const& dist) noexcept
{
    return std::visit(overloaded{
                          [](Exponential const& e) { return e.mean_time; },
                          [](Deterministic const& d) { return d.value; },
                          [](Erlang const& e) { return e.mean_time; },
                      },
                      dist.variant());
}

double pdf(Distribution const& dist, double x)
{
    if (x < 0.0)
    {
        if (!dist.is_continuous())
        {
            throw NotAbsolutelyContinuous("deterministic distribution has no density");
        }
        return 0.0;
    }
    return std::visit(
        overloaded{
            [x](Exponential const& e) { return std::exp(-x / e.mean_time) / e.mean_time; },
            [](Deterministic const&) -> double {
                throw NotAbsolutelyContinuous(
                    "deterministic distribution has no density");
            },
            [x](Erlang const& e) {
                double const rate = erlang_rate(e);
                if (x == 0.0)
                {
                    return e.shape == 1 ? rate : 0.0;
                }
                double const log_f = e.shape * std::log(rate)
                                     + (e.shape - 1) * std::log(x) - rate * x
                                     - std::lgamma(static_cast<double>(e.shape));
                return std::exp(log_f);
            },
        },
        dist.variant());
}

double cdf(Distribution const& dist, double x) noexcept
{
    if (x < 0.0)
    {
        return 0.0;
    }
    return std::visit(overloaded{
                          [x](Exponential const& e) { return -std::expm1(-x / e.mean_time); },
                          [x](Deterministic const& d) { return x < d.value ? 0.0 : 1.0; },
                          [x](Erlang const& e) {
                              // 1 - e^{-rx} sum_{n<k} (rx)^n / n!
                              double const rx = erlang_rate(e) * x;
                              double term = 1.0;
                              double sum = 1.0;
                              for (int n = 1; n < e.shape; ++n)
                              {
                                  term *= rx / n;
                                  sum += term;
                              }
                              double const tail = std::exp(-rx) * sum;
                              return tail >= 1.0 ? 0.0 : 1.0 - tail;
                          },
                      },
                      dist.variant());
}

MgfValue mgf(Distribution const& dist, double theta) noexcept
{
    if (theta == 0.0)
    {
        return MgfValue::finite(1.0);
    }
    return std::visit(
        overloaded{
            [theta](Exponential const& e) {
                double const denom = 1.0 - e.mean_time * theta;
                return denom > 0.0 ? MgfValue::finite(1.0 / denom)
                                   : MgfValue::divergent();
            },
            [theta](Deterministic const& d) {
                return MgfValue::finite(std::exp(theta * d.value));
            },
            [theta](Erlang const& e) {
                double const denom = 1.0 - theta / erlang_rate(e);
                return denom > 0.0 ? MgfValue::finite(std::pow(denom, -e.shape))
                                   : MgfValue::divergent();
            },
        },
        dist.variant());
}

double mgf_domain_bound(Distribution const& dist) noexcept
{
    return std::visit(overloaded{
                          [](Exponential const& e) { return 1.0 / e.mean_time; },
                          [](Deterministic const&) {
                              return std::numeric_limits<double>::infinity();
                          },
                          [](Erlang const& e) { return erlang_rate(e); },
                      },
                      dist.variant());
}

double sample(Distribution const& dist, Rng& rng) noexcept
{
    return std::visit(overloaded{
                          [&rng](Exponential const& e) {
                              return -e.mean_time * std::log(rng.uniform_open0());
                          },
                          [](Deterministic const& d) { return d.value; },
                          [&rng](Erlang const& e) {
                              // Sum of exponentials via a product of uniforms,
                              // renormalized periodically to avoid underflow.
                              double log_sum = 0.0;
                              double prod = 1.0;
                              for (int i = 0; i < e.shape; ++i)
                              {
                                  prod *= rng.uniform_open0();
                                  if (prod < 1e-280)
                                  {
                                      log_sum += std::log(prod);
                                      prod = 1.0;
                                  }
                              }
                              log_sum += std::log(prod);
                              return -log_sum / erlang_rate(e);
                          },
                      },
                      dist.variant());
}

namespace {

std::string lowercase(std::string_view s)
{
    std::string out(s);
    for (auto& c : out)
    {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    {
        s.remove_suffix(1);
    }
    return s;
}

double parse_number(std::string_view text, std::string_view literal)
{
    text = trim(text);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
    {
        throw InvalidArgument("bad number '" + std::string(text)
                              + "' in distribution literal '"
                              + std::string(literal) + "'");
    }
    return v;
}

}  // namespace

Distribution parse_distribution(std::string_view literal)
{
    auto const colon = literal.find(':');
    if (colon == std::string_view::npos)
    {
        throw InvalidArgument("distribution literal '" + std::string(literal)
                              + "' lacks ':'");
    }
    std::string const family = lowercase(trim(literal.substr(0, colon)));

    std::map<std::string, double> params;
    std::string_view rest = literal.substr(colon + 1);
    while (!rest.empty())
    {
        auto const comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{}
                                               : rest.substr(comma + 1);
        auto const eq = item.find('=');
        if (eq == std::string_view::npos)
        {
            throw InvalidArgument("expected key=value in '" + std::string(literal)
                                  + "'");
        }
        auto key = lowercase(trim(item.substr(0, eq)));
        if (!params.emplace(key, parse_number(item.substr(eq + 1), literal)).second)
        {
            throw InvalidArgument("duplicate key '" + key + "' in '"
                                  + std::string(literal) + "'");
        }
    }

    auto take = [&](char const* key) {
        auto it = params.find(key);
        if (it == params.end())
        {
            throw InvalidArgument(std::string("missing '") + key + "' in '"
                                  + std::string(literal) + "'");
        }
        double v = it->second;
        params.erase(it);
        return v;
    };
    auto finish = [&](Distribution d) {
        if (!params.empty())
        {
            throw InvalidArgument("unknown key '" + params.begin()->first
                                  + "' in '" + std::string(literal) + "'");
        }
        return d;
    };

    if (family == "exp")
    {
        return finish(Exponential{take("mean")});
    }
    if (family == "det")
    {
        return finish(Deterministic{take("value")});
    }
    if (family == "erlang")
    {
        double const shape = take("shape");
        if (shape != std::floor(shape) || shape < 1 || shape > 1e6)
        {
            throw InvalidArgument("erlang shape must be a positive integer");
        }
        double const m = take("mean");
        return finish(Erlang{static_cast<int>(shape), m});
    }
    throw InvalidArgument("unknown distribution family '" + family + "'");
}

std::string to_string(Distribution const& dist)
{
    std::ostringstream os;
    os.precision(17);
    std::visit(overloaded{
                   [&](Exponential const& e) { os << "exp:mean=" << e.mean_time; },
                   [&](Deterministic const& d) { os << "det:value=" << d.value; },
                   [&](Erlang const& e) {
                       os << "erlang:shape=" << e.shape << ",mean=" << e.mean_time;
                   },
               },
               dist.variant());
    return os.str();
}

}  // namespace aoi
