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

#ifndef WINOCONV_TRANSFORMS_HPP_
#define WINOCONV_TRANSFORMS_HPP_

#include <array>
#include <cstdint>

namespace winoconv {

// Small fixed-capacity row-major matrix for the transform algebra. Nothing in
// the minimal-filtering pipeline exceeds 6x6.
class SmallMat {
 public:
  static constexpr int kMaxDim = 6;

  SmallMat() = default;
  SmallMat(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int r, int c) { return a_[r * cols_ + c]; }
  double operator()(int r, int c) const { return a_[r * cols_ + c]; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::array<double, kMaxDim * kMaxDim> a_{};
};

SmallMat matmul(const SmallMat& a, const SmallMat& b);
SmallMat transpose(const SmallMat& a);

// The minimal-filtering transform triple for computing an m x m output tile
// of a 3x3 correlation from an alpha x alpha data tile, alpha = m + r - 1:
//
//   output = At * [ (G g Gt) .* (Bt d B) ] * A
//
// G is alpha x r (filter transform), Bt is alpha x alpha (input transform),
// At is m x alpha (output transform). Entries are exact rationals stored as
// f64. The defining correctness identity above — equality with the direct
// m x m valid correlation of d with g — is validated against a brute-force
// tile oracle once per process before a set is handed out.
struct TransformSet {
  int m = 0;      // output tile edge (2 or 4)
  int r = 3;      // kernel edge
  int alpha = 0;  // m + r - 1
  SmallMat g;     // alpha x r
  SmallMat bt;    // alpha x alpha
  SmallMat at;    // m x alpha
};

// Returns the validated transform set for m in {2, 4}. The m=4 constants are
// derived from the interpolation points {0, 1, -1, 2, -2}; the validation
// check, not the particular point set, is what is normative. Throws
// std::invalid_argument for unsupported m.
const TransformSet& transform_set(int m);

// G g Gt for an r x r filter tile.
SmallMat filter_transform(const SmallMat& g, const TransformSet& ts);

// Bt d B for an alpha x alpha data tile.
SmallMat input_transform(const SmallMat& d, const TransformSet& ts);

// At M A for an alpha x alpha product tile; yields the m x m output tile.
SmallMat output_transform(const SmallMat& m, const TransformSet& ts);

// Per-tile multiplication counts in the channel-product stage: alpha^2 for
// the minimal-filtering route vs m^2 * r^2 for direct correlation.
struct MulCount {
  std::int64_t winograd_per_tile = 0;
  std::int64_t direct_per_tile = 0;
};

MulCount mul_count(const TransformSet& ts);

}  // namespace winoconv

#endif  // WINOCONV_TRANSFORMS_HPP_
