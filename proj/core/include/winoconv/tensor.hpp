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

#ifndef WINOCONV_TENSOR_HPP_
#define WINOCONV_TENSOR_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace winoconv {

using index_t = std::int64_t;

// Memory order of a dense 4-D tensor.
//   kChannelMajor:       (n, c, h, w) — NCHW, the engine's canonical layout.
//   kChannelInterleaved: (n, h, w, c) — NHWC, kept for I/O compatibility.
enum class Layout { kChannelMajor, kChannelInterleaved };

// Element storage. Arithmetic is always f32; kF16 is storage-only and
// round-trips through f32 on every access.
enum class DType { kF32, kF16 };

// IEEE 754 binary16 <-> binary32, round to nearest even.
std::uint16_t f16_from_f32(float v);
float f32_from_f16(std::uint16_t bits);

struct Shape4 {
  index_t n = 0;  // batch
  index_t c = 0;  // channels
  index_t h = 0;  // rows
  index_t w = 0;  // cols

  bool operator==(const Shape4&) const = default;
};

struct Fill {
  enum class Kind { kZeros, kConstant, kSeededUniform };

  Kind kind = Kind::kZeros;
  float value = 0.0f;
  std::uint64_t seed = 0;
  float lo = 0.0f;
  float hi = 1.0f;

  static Fill zeros() { return {}; }
  static Fill constant(float v) { return {Kind::kConstant, v, 0, 0.0f, 0.0f}; }
  static Fill seeded_uniform(std::uint64_t seed, float lo, float hi) {
    return {Kind::kSeededUniform, 0.0f, seed, lo, hi};
  }
};

// Dense 4-D tensor. Immutable from the engine's point of view once filled;
// kernels write only into output tensors they own or into caller-provided
// disjoint regions, so read-only sharing across workers is safe.
class Tensor {
 public:
  Tensor() = default;
  Tensor(Shape4 shape, Layout layout, DType dtype);

  Shape4 shape() const { return shape_; }
  Layout layout() const { return layout_; }
  DType dtype() const { return dtype_; }
  index_t elem_count() const { return shape_.n * shape_.c * shape_.h * shape_.w; }
  std::size_t size_bytes() const;
  bool empty() const { return elem_count() == 0; }

  // Logical element access independent of layout/dtype. f16 storage converts
  // on the fly.
  float at(index_t n, index_t c, index_t h, index_t w) const;
  void set(index_t n, index_t c, index_t h, index_t w, float v);

  index_t offset(index_t n, index_t c, index_t h, index_t w) const {
    if (layout_ == Layout::kChannelMajor) {
      return ((n * shape_.c + c) * shape_.h + h) * shape_.w + w;
    }
    return ((n * shape_.h + h) * shape_.w + w) * shape_.c + c;
  }

  // Flat buffer access in storage order. f32 tensors only.
  const float* f32_data() const;
  float* f32_data();
  const std::uint16_t* f16_data() const;
  std::uint16_t* f16_data();

 private:
  Shape4 shape_{};
  Layout layout_ = Layout::kChannelMajor;
  DType dtype_ = DType::kF32;
  std::vector<float> f32_;
  std::vector<std::uint16_t> f16_;
};

// Allocates and fills a tensor. Shape components must be >= 1; index
// arithmetic that would overflow is refused with std::length_error.
// Seeded fills draw from SplitMix64 (see rng.hpp) in storage order, so the
// same (fill, seed, layout) always produces bit-identical buffers.
Tensor make_tensor(Shape4 shape, Layout layout, DType dtype, const Fill& fill);

// Reorders storage to `target`; logical elements are unchanged and converting
// there-and-back is the bitwise identity.
Tensor convert_layout(const Tensor& t, Layout target);

// Returns a channel-major f32 view-copy (or the input itself when it already
// is one) — the form every kernel in this library consumes.
Tensor to_channel_major_f32(const Tensor& t);

// max over elements of |a - b| / max(|b|, floor). Shapes must match; layouts
// and dtypes may differ (comparison is logical).
double max_rel_error(const Tensor& a, const Tensor& b, double floor);

// Largest |element|, used to pick normalization floors for oracle comparisons.
double max_abs(const Tensor& t);

}  // namespace winoconv

#endif  // WINOCONV_TENSOR_HPP_
