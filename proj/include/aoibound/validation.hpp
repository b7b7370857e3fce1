// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace aoi {

struct ValidationOptions
{
    bool quick = false;
    //! Replace θ* of the M/M/1 (λ=2, μ=1) feasibility check.
    std::optional<double> theta_override;
    std::uint64_t seed = 0x5eed;
};

struct CheckResult
{
    std::string name;
    bool passed;
    double margin;  //!< slack to the threshold; negative when failed
    std::string detail;
};

struct ValidationReport
{
    std::vector<CheckResult> checks;

    bool all_passed() const noexcept;
    std::string to_text() const;
};

/*!
 * Run the invariant suite: kernel feasibility, closed-form/quadrature
 * agreement, θ* identities, gap and argmin identities, bound dominance over
 * simulation, the backlog tail bound, max-plus equivalence and exact means.
 *
 * Quick mode shrinks grids and packet counts.
 */
ValidationReport run_validation(ValidationOptions const& opts);

}  // namespace aoi
