// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monolct Authors

#pragma once

#include <string>
#include <vector>

namespace monolct::cli {

struct Check {
  std::string suite;
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string relation;  // "<" or ">" or "=="
};

/// Known suite names; "all" runs every one of them.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
std::vector<Check> run_suite(const std::string& suite, unsigned seed);

}  // namespace monolct::cli
