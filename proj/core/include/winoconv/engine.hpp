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

#ifndef WINOCONV_ENGINE_HPP_
#define WINOCONV_ENGINE_HPP_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "winoconv/conv_spec.hpp"
#include "winoconv/scheduler.hpp"
#include "winoconv/tensor.hpp"
#include "winoconv/transforms.hpp"
#include "winoconv/work_block.hpp"

namespace winoconv {

// Width of the tile dimension in the channel-product microkernel; tiles per
// block is always a multiple of this.
inline constexpr int kMicrokernelWidth = 4;

// Default staging budget: a typical per-core L1d. Overridable because the
// target hardware may have considerably larger L1 caches.
inline constexpr std::size_t kDefaultL1Budget = 32 * 1024;

// Max relative error of winograd_conv against the direct_conv(kF64) oracle on
// inputs and weights uniform in [-1, 1]. The m=4 transform constants amplify
// f32 rounding, hence the looser bound; both were set from measured error
// distributions with at least 4x headroom.
inline constexpr double kOracleTolM2 = 1e-4;
inline constexpr double kOracleTolM4 = 2e-3;

inline double oracle_tolerance(int m) { return m == 2 ? kOracleTolM2 : kOracleTolM4; }

struct BlockingParams {
  std::int64_t tiles_per_block = 0;  // P_b, multiple of kMicrokernelWidth
  std::int64_t chans_per_block = 0;  // OC_b
  // True when the staged-block footprint alpha^2*(IC+OC_b)*P_b*4 fits the
  // budget. Large-IC geometries cannot satisfy that at any P_b >= 1; the
  // plan then falls back to sizing the per-position V panel (IC*P_b*4) to
  // the budget and widening OC_b to amortize per-block input transforms.
  bool fits_l1 = false;
};

// Everything winograd_conv needs that depends only on geometry: tile grid,
// transform constants, and cache blocking. Immutable after creation.
struct WinogradPlan {
  TransformSet ts;
  ConvSpec spec;
  Shape4 input_shape;
  index_t oh = 0;
  index_t ow = 0;
  index_t tiles_h = 0;  // ceil(OH / m); the last tile row may overhang
  index_t tiles_w = 0;
  index_t tile_count = 0;  // P = N * tiles_h * tiles_w
  BlockingParams blocking;
  std::size_t l1_budget = kDefaultL1Budget;

  // Transform constants as f32, the precision they are applied in.
  std::array<float, SmallMat::kMaxDim * 3> g_f32{};
  std::array<float, SmallMat::kMaxDim * SmallMat::kMaxDim> bt_f32{};
  std::array<float, SmallMat::kMaxDim * SmallMat::kMaxDim> at_f32{};

  int alpha() const { return ts.alpha; }
  int alpha2() const { return ts.alpha * ts.alpha; }

  // Staged V block: [alpha^2][IC][P_b] f32.
  std::size_t staged_v_bytes() const {
    return static_cast<std::size_t>(alpha2()) * spec.ic * blocking.tiles_per_block * sizeof(float);
  }
  // Staged M block: [alpha^2][OC_b][P_b] f32.
  std::size_t staged_m_bytes() const {
    return static_cast<std::size_t>(alpha2()) * blocking.chans_per_block *
           blocking.tiles_per_block * sizeof(float);
  }
  std::size_t staged_block_bytes() const { return staged_v_bytes() + staged_m_bytes(); }
};

// Builds a plan for a 3x3 stride-1 convolution with tile size m in {2, 4}.
// Throws std::invalid_argument for non-Winograd-eligible geometry, directing
// the caller to the reference convolutions.
WinogradPlan plan(const ConvSpec& spec, const Shape4& input_shape, int m,
                  std::size_t l1_budget = kDefaultL1Budget);

// Preprocessed filters in position-major layout [alpha^2][OC][IC]: entry
// (x, oc, ic) is element x of G g Gt for filter (oc, ic). Built once, reused
// across winograd_conv calls with the same filters.
struct TransformedFilterBank {
  std::vector<float> data;
  int alpha2 = 0;
  index_t oc = 0;
  index_t ic = 0;
  ConvSpec provenance;

  float at(int pos, index_t oc_idx, index_t ic_idx) const {
    return data[(static_cast<std::size_t>(pos) * oc + oc_idx) * ic + ic_idx];
  }
  std::size_t bytes() const { return data.size() * sizeof(float); }
};

TransformedFilterBank transform_filters(const Tensor& filters, const WinogradPlan& plan);

// Optional runtime instrumentation.
//   write_counts: one counter per output element, incremented on every
//     scatter-store — the exactly-once coverage check.
//   channel_product_muls: exact number of multiplications executed in the
//     channel-product stage.
struct EngineInstrument {
  std::unique_ptr<std::atomic<std::uint32_t>[]> write_counts;
  std::int64_t write_count_size = 0;
  std::atomic<std::uint64_t> channel_product_muls{0};

  void reset_write_counts(std::int64_t size);
};

// Enumerates the blocks that partition (tile x OC) for this plan:
// channel-range major, tile-range minor.
std::vector<WorkBlock> make_blocks(const WinogradPlan& plan);

// Stage (i) for one block: gather-loads each alpha x alpha input tile in the
// block's tile range (zero-filled outside the image), applies the input
// transform, and scatter-stores position-major into `v_block` with layout
// [alpha^2][IC][P_b] so the channel-product stage reads contiguous rows.
// Input must be channel-major f32.
void gather_tiles(const Tensor& input, const WinogradPlan& plan, const WorkBlock& block,
                  float* v_block);

// Stage (ii): for each transform position x, the (OC_b x IC) x (IC x P_b)
// product M[x] = U[x][c0:c1][:] * V[x], f32 accumulation in a fixed order —
// alpha^2 independent GEMMs per block. Output layout [alpha^2][OC_b][P_b].
void channel_product(const TransformedFilterBank& bank, const float* v_block,
                     const WinogradPlan& plan, const WorkBlock& block, float* m_block,
                     EngineInstrument* instrument = nullptr);

// Stage (iii): applies the output transform to every (oc, tile) pair in the
// block and writes the m x m patch at (tile_h*m, tile_w*m), trimmed where the
// last tile row/column overhangs OH/OW. Each output element is written by
// exactly one (block, tile, oc) triple.
void scatter_output(const float* m_block, const WinogradPlan& plan, const WorkBlock& block,
                    Tensor& output, EngineInstrument* instrument = nullptr);

struct WinogradOptions {
  int workers = 1;
  SchedulerPolicy policy = SchedulerPolicy::kDynamic;
  EngineInstrument* instrument = nullptr;
};

// The full pipeline: gather -> channel product -> scatter over all blocks,
// dispatched by the chosen scheduler policy. The plan and filter bank are
// shared read-only; each worker owns a private staging buffer and every block
// writes a disjoint output region, so the result is bitwise identical across
// worker counts and policies.
Tensor winograd_conv(const Tensor& input, const TransformedFilterBank& bank,
                     const WinogradPlan& plan, const WinogradOptions& options = {});

// Convenience overload that builds the filter bank ad hoc.
Tensor winograd_conv(const Tensor& input, const Tensor& filters, const WinogradPlan& plan,
                     const WinogradOptions& options = {});

// Peak auxiliary memory: the filter bank plus one staged (V + M) block per
// worker. Reported next to the im2col baseline's lowering-matrix size.
std::size_t winograd_aux_bytes(const WinogradPlan& plan, int workers);

}  // namespace winoconv

#endif  // WINOCONV_ENGINE_HPP_
