// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aoi::cli {

enum ExitCode : int
{
    exit_ok = 0,
    exit_validation_failure = 1,
    exit_invalid_model = 2,
    exit_numerical_failure = 3,
};

/*!
 * Entry point of the `aoi_bound` tool.
 *
 * \c args excludes the program name. CSV goes to \c out unless --out is
 * given; diagnostics go to \c err.
 */
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace aoi::cli
