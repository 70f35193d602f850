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

#ifndef WINOCONV_SUITE_HPP_
#define WINOCONV_SUITE_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "winoconv/conv_spec.hpp"
#include "winoconv/tensor.hpp"

namespace winoconv {

// One benchmark/verification layer. Filter is [KW, KH, IC, OC] and
// activation [IW, IH, IC, N], the convention the built-in suite is stated in.
struct LayerEntry {
  std::string name;
  int kw = 3;
  int kh = 3;
  index_t ic = 0;
  index_t oc = 0;
  index_t iw = 0;
  index_t ih = 0;
  index_t n = 1;
  int padding = 1;
  int repeats = 10;
  std::optional<double> paper_reference_speedup;

  ConvSpec conv_spec() const { return ConvSpec{kh, kw, ic, oc, 1, padding}; }
  Shape4 activation_shape() const { return Shape4{n, ic, ih, iw}; }
  Shape4 filter_shape() const { return Shape4{oc, ic, kh, kw}; }

  bool operator==(const LayerEntry&) const = default;
};

using LayerSuite = std::vector<LayerEntry>;

// The five single-layer shapes from the reference measurements, padding 1
// ("same" 3x3), N=1, with the published M1-pro speedups attached as labeled
// reference values — reported, never asserted.
LayerSuite builtin_suite();

class SuiteParseError : public std::runtime_error {
 public:
  SuiteParseError(int line, const std::string& what)
      : std::runtime_error("suite line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Line-oriented suite format, one entry per `layer` record:
//
//   # comment
//   layer name=640-640-32x32 filter=3x3x640x640 activation=32x32x640x1 \
//         padding=1 repeats=10 ref_speedup=2.76
//
// filter is KWxKHxICxOC, activation IWxIHxICxN; padding, repeats and
// ref_speedup are optional (defaults 1, 10, none). Blank lines and `#`
// comments are ignored. Malformed input raises SuiteParseError naming the
// line and field; entries are validated (dims >= 1, repeats >= 1, activation
// IC equal to filter IC).
LayerSuite parse_suite(std::istream& in);
LayerSuite parse_suite_file(const std::string& path);

// Inverse of parse_suite: parse(serialize(s)) == s.
std::string serialize_suite(const LayerSuite& suite);

// Staging budget for plans: WINOCONV_L1_BUDGET (bytes) if set and positive,
// else the engine default.
std::size_t l1_budget_from_env();

}  // namespace winoconv

#endif  // WINOCONV_SUITE_HPP_
