// Copyright 2026 The Clevershop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Solver dispatch by name and the benchmark runner.

#ifndef CLEVERSHOP_BENCH_HPP
#define CLEVERSHOP_BENCH_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clevershop/instance.hpp"

namespace clevershop {

enum class Algorithm { Oracle, SubsetDp, PriceDp, Matching2, FStar, Greedy };

// Throws std::invalid_argument for unknown names.
Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm algo);

struct AlgoOutcome {
  // Absent only when the decision procedure answered no.
  std::optional<SolveResult> result;
  // Set by the decision procedure (price-dp) only.
  std::optional<bool> decision;
};

/// price-dp needs a budget: `budget`, else the instance's own.
AlgoOutcome run_algorithm(Algorithm algo, const Instance& instance,
                          std::optional<Money> budget = std::nullopt);

struct BenchCell {
  std::string instance;  // file name
  std::string algorithm;
  double wall_seconds = 0.0;
  bool timed_out = false;
  std::optional<Money> cost;
  std::optional<Money> discount;
  std::optional<bool> decision;
  std::optional<Money> oracle_cost;
  std::optional<Money> gap;  // cost - oracle_cost, never negative
  std::string error;         // "CODE: message" when the solver refused
};

struct BenchOptions {
  std::filesystem::path dir;
  std::vector<Algorithm> algorithms;
  double timeout_seconds = 10.0;
  unsigned jobs = 1;
};

/// Runs every (*.inst file, algorithm) pair of `dir` in a child process
/// with a wall-clock limit. Cells come back sorted by (file, algorithm
/// order). The oracle is run once per file for the gap column.
std::vector<BenchCell> run_bench(const BenchOptions& options);

std::string bench_report_json(const std::vector<BenchCell>& cells);

}  // namespace clevershop

#endif  // CLEVERSHOP_BENCH_HPP
