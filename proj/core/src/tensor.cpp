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

#include "winoconv/tensor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <string>

#include "winoconv/rng.hpp"

namespace winoconv {

namespace {

void check_shape(const Shape4& s) {
  if (s.n < 1 || s.c < 1 || s.h < 1 || s.w < 1) {
    throw std::invalid_argument("tensor shape components must be >= 1, got (" +
                                std::to_string(s.n) + "," + std::to_string(s.c) + "," +
                                std::to_string(s.h) + "," + std::to_string(s.w) + ")");
  }
}

// N*C*H*W with overflow detection; overflow refuses the allocation.
index_t checked_elem_count(const Shape4& s) {
  index_t total = 1;
  for (index_t d : {s.n, s.c, s.h, s.w}) {
    if (__builtin_mul_overflow(total, d, &total)) {
      throw std::length_error("tensor size overflows index arithmetic");
    }
  }
  return total;
}

}  // namespace

std::uint16_t f16_from_f32(float v) {
  const std::uint32_t bits = std::bit_cast<std::uint32_t>(v);
  const std::uint32_t sign = (bits >> 16) & 0x8000u;
  const std::uint32_t exp = (bits >> 23) & 0xFFu;
  const std::uint32_t mant = bits & 0x7FFFFFu;

  if (exp == 0xFF) {  // inf / nan
    return static_cast<std::uint16_t>(sign | 0x7C00u | (mant ? 0x200u : 0));
  }
  const int unbiased = static_cast<int>(exp) - 127;
  if (unbiased > 15) {  // overflow -> inf
    return static_cast<std::uint16_t>(sign | 0x7C00u);
  }
  if (unbiased < -25) {  // below half the smallest subnormal -> signed zero
    return static_cast<std::uint16_t>(sign);
  }
  const std::uint32_t mant24 = mant | 0x800000u;  // implicit leading one
  std::uint32_t base;
  int shift;  // bits dropped when narrowing the 24-bit mantissa
  if (unbiased < -14) {
    // Subnormal half: value = m * 2^-24, m = mant24 * 2^(unbiased+1).
    base = 0;
    shift = -1 - unbiased;
  } else {
    base = static_cast<std::uint32_t>(unbiased + 15) << 10;
    shift = 13;
  }
  std::uint32_t out = base | ((mant24 >> shift) & 0x3FFu);
  // Round to nearest even; a carry into the exponent (or up to the smallest
  // normal, or to infinity) is correct IEEE behavior.
  const std::uint32_t rem = mant24 & ((1u << shift) - 1);
  const std::uint32_t halfway = 1u << (shift - 1);
  if (rem > halfway || (rem == halfway && (out & 1))) {
    out += 1;
  }
  return static_cast<std::uint16_t>(sign | out);
}

float f32_from_f16(std::uint16_t bits) {
  const std::uint32_t sign = static_cast<std::uint32_t>(bits & 0x8000u) << 16;
  const std::uint32_t exp = (bits >> 10) & 0x1Fu;
  const std::uint32_t mant = bits & 0x3FFu;

  std::uint32_t out;
  if (exp == 0) {
    if (mant == 0) {
      out = sign;
    } else {  // subnormal: renormalize
      int e = -1;
      std::uint32_t m = mant;
      do {
        ++e;
        m <<= 1;
      } while ((m & 0x400u) == 0);
      out = sign | static_cast<std::uint32_t>(127 - 15 - e) << 23 | ((m & 0x3FFu) << 13);
    }
  } else if (exp == 0x1F) {
    out = sign | 0x7F800000u | (mant << 13);
  } else {
    out = sign | ((exp - 15 + 127) << 23) | (mant << 13);
  }
  return std::bit_cast<float>(out);
}

Tensor::Tensor(Shape4 shape, Layout layout, DType dtype)
    : shape_(shape), layout_(layout), dtype_(dtype) {
  check_shape(shape);
  const auto total = static_cast<std::size_t>(checked_elem_count(shape));
  if (dtype == DType::kF32) {
    f32_.assign(total, 0.0f);
  } else {
    f16_.assign(total, 0);
  }
}

std::size_t Tensor::size_bytes() const {
  return dtype_ == DType::kF32 ? f32_.size() * sizeof(float) : f16_.size() * sizeof(std::uint16_t);
}

float Tensor::at(index_t n, index_t c, index_t h, index_t w) const {
  const index_t i = offset(n, c, h, w);
  return dtype_ == DType::kF32 ? f32_[i] : f32_from_f16(f16_[i]);
}

void Tensor::set(index_t n, index_t c, index_t h, index_t w, float v) {
  const index_t i = offset(n, c, h, w);
  if (dtype_ == DType::kF32) {
    f32_[i] = v;
  } else {
    f16_[i] = f16_from_f32(v);
  }
}

const float* Tensor::f32_data() const {
  if (dtype_ != DType::kF32) throw std::logic_error("f32_data() on f16-storage tensor");
  return f32_.data();
}

float* Tensor::f32_data() {
  if (dtype_ != DType::kF32) throw std::logic_error("f32_data() on f16-storage tensor");
  return f32_.data();
}

const std::uint16_t* Tensor::f16_data() const {
  if (dtype_ != DType::kF16) throw std::logic_error("f16_data() on f32 tensor");
  return f16_.data();
}

std::uint16_t* Tensor::f16_data() {
  if (dtype_ != DType::kF16) throw std::logic_error("f16_data() on f32 tensor");
  return f16_.data();
}

Tensor make_tensor(Shape4 shape, Layout layout, DType dtype, const Fill& fill) {
  Tensor t(shape, layout, dtype);
  const index_t total = t.elem_count();
  switch (fill.kind) {
    case Fill::Kind::kZeros:
      break;  // buffers are zero-initialized
    case Fill::Kind::kConstant: {
      if (dtype == DType::kF32) {
        std::fill_n(t.f32_data(), total, fill.value);
      } else {
        std::fill_n(t.f16_data(), total, f16_from_f32(fill.value));
      }
      break;
    }
    case Fill::Kind::kSeededUniform: {
      // Storage-order fill from the counter stream: element i gets value i,
      // independent of platform.
      SplitMix64 rng(fill.seed);
      if (dtype == DType::kF32) {
        float* p = t.f32_data();
        for (index_t i = 0; i < total; ++i) p[i] = rng.next_uniform(fill.lo, fill.hi);
      } else {
        std::uint16_t* p = t.f16_data();
        for (index_t i = 0; i < total; ++i) {
          p[i] = f16_from_f32(rng.next_uniform(fill.lo, fill.hi));
        }
      }
      break;
    }
  }
  return t;
}

Tensor convert_layout(const Tensor& t, Layout target) {
  if (t.layout() == target) return t;
  Tensor out(t.shape(), target, t.dtype());
  const Shape4 s = t.shape();
  for (index_t n = 0; n < s.n; ++n) {
    for (index_t c = 0; c < s.c; ++c) {
      for (index_t h = 0; h < s.h; ++h) {
        for (index_t w = 0; w < s.w; ++w) {
          if (t.dtype() == DType::kF32) {
            out.f32_data()[out.offset(n, c, h, w)] = t.f32_data()[t.offset(n, c, h, w)];
          } else {
            out.f16_data()[out.offset(n, c, h, w)] = t.f16_data()[t.offset(n, c, h, w)];
          }
        }
      }
    }
  }
  return out;
}

Tensor to_channel_major_f32(const Tensor& t) {
  if (t.layout() == Layout::kChannelMajor && t.dtype() == DType::kF32) return t;
  const Tensor* src = &t;
  Tensor reordered;
  if (t.layout() != Layout::kChannelMajor) {
    reordered = convert_layout(t, Layout::kChannelMajor);
    src = &reordered;
  }
  if (src->dtype() == DType::kF32) return *src;
  Tensor out(src->shape(), Layout::kChannelMajor, DType::kF32);
  const std::uint16_t* in = src->f16_data();
  float* dst = out.f32_data();
  const index_t total = out.elem_count();
  for (index_t i = 0; i < total; ++i) dst[i] = f32_from_f16(in[i]);
  return out;
}

double max_rel_error(const Tensor& a, const Tensor& b, double floor) {
  if (!(a.shape() == b.shape())) {
    throw std::invalid_argument("max_rel_error: shape mismatch");
  }
  const Shape4 s = a.shape();
  double worst = 0.0;
  for (index_t n = 0; n < s.n; ++n) {
    for (index_t c = 0; c < s.c; ++c) {
      for (index_t h = 0; h < s.h; ++h) {
        for (index_t w = 0; w < s.w; ++w) {
          const double av = a.at(n, c, h, w);
          const double bv = b.at(n, c, h, w);
          const double denom = std::max(std::abs(bv), floor);
          worst = std::max(worst, std::abs(av - bv) / denom);
        }
      }
    }
  }
  return worst;
}

double max_abs(const Tensor& t) {
  const Shape4 s = t.shape();
  double worst = 0.0;
  for (index_t n = 0; n < s.n; ++n) {
    for (index_t c = 0; c < s.c; ++c) {
      for (index_t h = 0; h < s.h; ++h) {
        for (index_t w = 0; w < s.w; ++w) {
          worst = std::max(worst, std::abs(static_cast<double>(t.at(n, c, h, w))));
        }
      }
    }
  }
  return worst;
}

}  // namespace winoconv
