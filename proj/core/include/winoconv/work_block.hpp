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

#ifndef WINOCONV_WORK_BLOCK_HPP_
#define WINOCONV_WORK_BLOCK_HPP_

#include <cstdint>

namespace winoconv {

// One unit of independent computation: a tile range crossed with an
// output-channel range. Blocks partition the (tile x OC) iteration space —
// pairwise disjoint, union complete — so any worker may execute any block
// with no synchronization beyond handout.
struct WorkBlock {
  std::int64_t tile_begin = 0;  // [tile_begin, tile_end)
  std::int64_t tile_end = 0;
  std::int64_t chan_begin = 0;  // [chan_begin, chan_end)
  std::int64_t chan_end = 0;

  std::int64_t tile_count() const { return tile_end - tile_begin; }
  std::int64_t chan_count() const { return chan_end - chan_begin; }

  bool operator==(const WorkBlock&) const = default;
};

}  // namespace winoconv

#endif  // WINOCONV_WORK_BLOCK_HPP_
