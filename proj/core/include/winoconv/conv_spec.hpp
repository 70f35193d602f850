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

#ifndef WINOCONV_CONV_SPEC_HPP_
#define WINOCONV_CONV_SPEC_HPP_

#include "winoconv/tensor.hpp"

namespace winoconv {

// Convolution geometry. Padding is zero-fill, symmetric on all sides.
// The Winograd path requires a 3x3 kernel with stride 1; everything else is
// legal only for the reference convolutions.
struct ConvSpec {
  int kh = 3;
  int kw = 3;
  index_t ic = 0;
  index_t oc = 0;
  int stride = 1;
  int padding = 0;

  bool winograd_eligible() const { return kh == 3 && kw == 3 && stride == 1; }

  bool operator==(const ConvSpec&) const = default;
};

struct OutputDims {
  index_t oh = 0;
  index_t ow = 0;
};

// OH = (H + 2*padding - KH)/stride + 1, likewise OW. Throws
// std::invalid_argument if either comes out below 1.
OutputDims conv_output_dims(const ConvSpec& spec, index_t h, index_t w);

// Checks that `input` is (N, IC, H, W) and `filters` is (OC, IC, KH, KW)
// consistently with `spec`; throws std::invalid_argument naming the mismatch.
void validate_conv_shapes(const ConvSpec& spec, const Shape4& input, const Shape4& filters);

}  // namespace winoconv

#endif  // WINOCONV_CONV_SPEC_HPP_
