// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#include <iostream>
#include <string>
#include <vector>

#include "aoibound/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return aoi::cli::run(args, std::cout, std::cerr);
}
