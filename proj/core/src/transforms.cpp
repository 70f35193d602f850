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

#include "winoconv/transforms.hpp"

#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include "winoconv/rng.hpp"

namespace winoconv {

SmallMat::SmallMat(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || rows > kMaxDim || cols < 0 || cols > kMaxDim) {
    throw std::invalid_argument("SmallMat dimensions out of range");
  }
}

SmallMat matmul(const SmallMat& a, const SmallMat& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: inner dimensions differ (" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + ")");
  }
  SmallMat out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      double acc = 0.0;
      for (int k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

SmallMat transpose(const SmallMat& a) {
  SmallMat out(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

namespace {

SmallMat from_rows(int rows, int cols, std::initializer_list<double> values) {
  SmallMat out(rows, cols);
  auto it = values.begin();
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) out(i, j) = *it++;
  }
  return out;
}

TransformSet make_set_m2() {
  TransformSet ts;
  ts.m = 2;
  ts.r = 3;
  ts.alpha = 4;
  ts.g = from_rows(4, 3,
                   {1.0, 0.0, 0.0,    //
                    0.5, 0.5, 0.5,    //
                    0.5, -0.5, 0.5,   //
                    0.0, 0.0, 1.0});
  ts.bt = from_rows(4, 4,
                    {1.0, 0.0, -1.0, 0.0,   //
                     0.0, 1.0, 1.0, 0.0,    //
                     0.0, -1.0, 1.0, 0.0,   //
                     0.0, 1.0, 0.0, -1.0});
  ts.at = from_rows(2, 4,
                    {1.0, 1.0, 1.0, 0.0,  //
                     0.0, 1.0, -1.0, -1.0});
  return ts;
}

// Derived from the interpolation points {0, 1, -1, 2, -2} with the customary
// row scaling that keeps Bt integral.
TransformSet make_set_m4() {
  TransformSet ts;
  ts.m = 4;
  ts.r = 3;
  ts.alpha = 6;
  ts.g = from_rows(6, 3,
                   {1.0 / 4, 0.0, 0.0,            //
                    -1.0 / 6, -1.0 / 6, -1.0 / 6,  //
                    -1.0 / 6, 1.0 / 6, -1.0 / 6,   //
                    1.0 / 24, 1.0 / 12, 1.0 / 6,   //
                    1.0 / 24, -1.0 / 12, 1.0 / 6,  //
                    0.0, 0.0, 1.0});
  ts.bt = from_rows(6, 6,
                    {4.0, 0.0, -5.0, 0.0, 1.0, 0.0,   //
                     0.0, -4.0, -4.0, 1.0, 1.0, 0.0,  //
                     0.0, 4.0, -4.0, -1.0, 1.0, 0.0,  //
                     0.0, -2.0, -1.0, 2.0, 1.0, 0.0,  //
                     0.0, 2.0, -1.0, -2.0, 1.0, 0.0,  //
                     0.0, 4.0, 0.0, -5.0, 0.0, 1.0});
  ts.at = from_rows(4, 6,
                    {1.0, 1.0, 1.0, 1.0, 1.0, 0.0,    //
                     0.0, 1.0, -1.0, 2.0, -2.0, 0.0,  //
                     0.0, 1.0, 1.0, 4.0, 4.0, 0.0,    //
                     0.0, 1.0, -1.0, 8.0, -8.0, 1.0});
  return ts;
}

// Direct m x m valid correlation of an alpha x alpha tile with an r x r
// filter — the ground truth the transform triple must reproduce.
SmallMat correlate_tile(const SmallMat& d, const SmallMat& g, int m) {
  SmallMat out(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      double acc = 0.0;
      for (int ki = 0; ki < g.rows(); ++ki) {
        for (int kj = 0; kj < g.cols(); ++kj) acc += d(i + ki, j + kj) * g(ki, kj);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

// Random-pair check of the defining identity. Constants that fail here would
// silently corrupt every convolution, so a set is never handed out unchecked.
void validate(const TransformSet& ts) {
  SplitMix64 rng(0x5EEDu + static_cast<std::uint64_t>(ts.m));
  constexpr int kPairs = 64;
  for (int it = 0; it < kPairs; ++it) {
    SmallMat g(ts.r, ts.r);
    SmallMat d(ts.alpha, ts.alpha);
    for (int i = 0; i < ts.r; ++i) {
      for (int j = 0; j < ts.r; ++j) g(i, j) = rng.next_uniform(-1.0f, 1.0f);
    }
    for (int i = 0; i < ts.alpha; ++i) {
      for (int j = 0; j < ts.alpha; ++j) d(i, j) = rng.next_uniform(-1.0f, 1.0f);
    }
    const SmallMat u = filter_transform(g, ts);
    const SmallMat v = input_transform(d, ts);
    SmallMat prod(ts.alpha, ts.alpha);
    for (int i = 0; i < ts.alpha; ++i) {
      for (int j = 0; j < ts.alpha; ++j) prod(i, j) = u(i, j) * v(i, j);
    }
    const SmallMat got = output_transform(prod, ts);
    const SmallMat want = correlate_tile(d, g, ts.m);
    double scale = 0.0;
    for (int i = 0; i < ts.m; ++i) {
      for (int j = 0; j < ts.m; ++j) scale = std::max(scale, std::abs(want(i, j)));
    }
    for (int i = 0; i < ts.m; ++i) {
      for (int j = 0; j < ts.m; ++j) {
        if (std::abs(got(i, j) - want(i, j)) > 1e-12 * std::max(scale, 1.0)) {
          throw std::logic_error("transform constants for m=" + std::to_string(ts.m) +
                                 " fail the correctness identity");
        }
      }
    }
  }
}

}  // namespace

const TransformSet& transform_set(int m) {
  if (m == 2) {
    static const TransformSet ts = [] {
      TransformSet t = make_set_m2();
      validate(t);
      return t;
    }();
    return ts;
  }
  if (m == 4) {
    static const TransformSet ts = [] {
      TransformSet t = make_set_m4();
      validate(t);
      return t;
    }();
    return ts;
  }
  throw std::invalid_argument("transform_set: unsupported tile size m=" + std::to_string(m) +
                              " (supported: 2, 4)");
}

SmallMat filter_transform(const SmallMat& g, const TransformSet& ts) {
  if (g.rows() != ts.r || g.cols() != ts.r) {
    throw std::invalid_argument("filter_transform: filter must be " + std::to_string(ts.r) + "x" +
                                std::to_string(ts.r));
  }
  return matmul(matmul(ts.g, g), transpose(ts.g));
}

SmallMat input_transform(const SmallMat& d, const TransformSet& ts) {
  if (d.rows() != ts.alpha || d.cols() != ts.alpha) {
    throw std::invalid_argument("input_transform: tile must be " + std::to_string(ts.alpha) + "x" +
                                std::to_string(ts.alpha));
  }
  return matmul(matmul(ts.bt, d), transpose(ts.bt));
}

SmallMat output_transform(const SmallMat& m, const TransformSet& ts) {
  if (m.rows() != ts.alpha || m.cols() != ts.alpha) {
    throw std::invalid_argument("output_transform: tile must be " + std::to_string(ts.alpha) +
                                "x" + std::to_string(ts.alpha));
  }
  return matmul(matmul(ts.at, m), transpose(ts.at));
}

MulCount mul_count(const TransformSet& ts) {
  const std::int64_t alpha2 = static_cast<std::int64_t>(ts.alpha) * ts.alpha;
  const std::int64_t direct = static_cast<std::int64_t>(ts.m) * ts.m * ts.r * ts.r;
  return MulCount{alpha2, direct};
}

}  // namespace winoconv
