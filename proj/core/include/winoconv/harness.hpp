// Copyright 2026 the winoconv authors. All rights reserved.
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

#ifndef WINOCONV_HARNESS_HPP_
#define WINOCONV_HARNESS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "winoconv/engine.hpp"
#include "winoconv/report.hpp"
#include "winoconv/scheduler.hpp"
#include "winoconv/suite.hpp"

namespace winoconv {

// Deterministic per-entry input/filter seeds derived from the base seed, so
// two runs with the same seed see identical tensors. Values are uniform in
// [-1, 1], the range the oracle tolerances are stated for.
std::uint64_t entry_input_seed(std::uint64_t base_seed, std::size_t entry_index);
std::uint64_t entry_filter_seed(std::uint64_t base_seed, std::size_t entry_index);

struct VerifyOptions {
  int m = 4;  // 2 or 4
  std::uint64_t seed = 42;
  int workers = 1;
  SchedulerPolicy policy = SchedulerPolicy::kDynamic;
  std::size_t l1_budget = kDefaultL1Budget;
  // Overrides the per-m oracle tolerance when set (testing hook).
  std::optional<double> tolerance;
};

struct VerifyFailure {
  std::string entry_name;
  int m = 0;
  double error = 0.0;
  double tolerance = 0.0;
};

struct VerifyOutcome {
  BenchReport report;
  std::vector<VerifyFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Runs winograd_conv on every entry with seeded inputs and measures
// max_rel_error against the direct_conv(kF64) oracle, normalized by the
// oracle's max magnitude. Entries whose error exceeds the tolerance for the
// chosen m are reported as failures.
VerifyOutcome run_verify(const LayerSuite& suite, const VerifyOptions& options);

struct BenchOptions {
  int m = 4;
  int workers = 1;
  SchedulerPolicy policy = SchedulerPolicy::kDynamic;
  int repeats = 0;  // 0: use each entry's own repeats field
  int warmup = 3;
  bool verify = false;
  std::uint64_t seed = 42;
  std::size_t l1_budget = kDefaultL1Budget;
};

// Times winograd_conv (filter bank prebuilt, amortized) against the im2col
// baseline at the same worker count: `warmup` runs discarded, repeats runs
// timed, median and min reported per implementation. Verification against the
// direct_conv(kF64) oracle only runs when options.verify is set.
BenchReport run_bench(const LayerSuite& suite, const BenchOptions& options);

}  // namespace winoconv

#endif  // WINOCONV_HARNESS_HPP_
