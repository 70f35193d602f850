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

#ifndef WINOCONV_REPORT_HPP_
#define WINOCONV_REPORT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace winoconv {

// One row of a bench/verify report. Timing fields are absent for
// verification-only runs; max_rel_error is present whenever verification ran.
struct BenchEntry {
  std::string name;
  int m = 4;
  int workers = 1;
  std::string scheduler;  // "dynamic" | "static"
  std::optional<double> winograd_median_us;
  std::optional<double> winograd_min_us;
  std::optional<double> baseline_median_us;
  std::optional<double> baseline_min_us;
  std::optional<double> speedup;  // baseline_median / winograd_median, exact
  std::optional<double> max_rel_error;
  std::size_t winograd_aux_bytes = 0;
  std::size_t baseline_aux_bytes = 0;
  std::optional<double> paper_reference_speedup;
};

struct BenchReport {
  std::vector<BenchEntry> entries;
};

// Bit-exact CSV header; absent optionals serialize as empty cells.
inline constexpr std::string_view kCsvHeader =
    "name,m,workers,scheduler,winograd_median_us,baseline_median_us,speedup,"
    "max_rel_error,winograd_aux_bytes,baseline_aux_bytes,paper_reference_speedup";

std::string to_csv(const BenchReport& report);
std::string to_json(const BenchReport& report);

}  // namespace winoconv

#endif  // WINOCONV_REPORT_HPP_
