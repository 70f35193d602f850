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

#ifndef WINOCONV_REFERENCE_HPP_
#define WINOCONV_REFERENCE_HPP_

#include <cstddef>

#include "winoconv/conv_spec.hpp"
#include "winoconv/tensor.hpp"

namespace winoconv {

enum class Accumulate { kF32, kF64 };

// Direct correlation (no filter flip):
//
//   out(n,oc,oh,ow) = sum_{ic,kh,kw} in(n,ic,oh*s-p+kh,ow*s-p+kw) * flt(oc,ic,kh,kw)
//
// with zeros outside the image. Input is (N,IC,H,W), filters (OC,IC,KH,KW).
// kF64 accumulates every output element in double and rounds once at the
// end; that mode is the single oracle every other convolution in this repo
// is measured against. Single-threaded by design.
Tensor direct_conv(const Tensor& input, const Tensor& filters, const ConvSpec& spec,
                   Accumulate acc = Accumulate::kF32);

struct Im2colResult {
  Tensor output;
  // Peak intermediate buffer: the (IC*KH*KW) x (OH*OW) lowering matrix.
  std::size_t aux_bytes = 0;
};

// Lowering-then-GEMM baseline standing in for the unoptimized operator this
// library replaces: materializes every receptive field as a matrix column and
// runs one straightforward blocked f32 GEMM per batch element. Intentionally
// nothing fancier — it is a measurement baseline, not a contender. Results
// equal direct_conv(kF32) up to f32 reassociation. `workers` parallelizes
// over output-channel rows with disjoint writes; results are identical to the
// single-threaded run.
Im2colResult im2col_conv(const Tensor& input, const Tensor& filters, const ConvSpec& spec,
                         int workers = 1);

// Size of the lowering matrix in bytes for the given geometry, without
// running anything.
std::size_t im2col_aux_bytes(const ConvSpec& spec, const Shape4& input_shape);

}  // namespace winoconv

#endif  // WINOCONV_REFERENCE_HPP_
