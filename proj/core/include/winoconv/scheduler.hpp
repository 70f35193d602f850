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

#ifndef WINOCONV_SCHEDULER_HPP_
#define WINOCONV_SCHEDULER_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "winoconv/work_block.hpp"

namespace winoconv {

// kDynamic: workers pull the next block from a single shared cursor as they
//   finish — the pull-queue policy. Handout is linearizable and monotone
//   (block start order equals queue order).
// kStatic: blocks are pre-partitioned into worker_count contiguous chunks of
//   near-equal size (differing by at most 1), mirroring an equal-split
//   shared-state runtime.
enum class SchedulerPolicy { kDynamic, kStatic };

struct RunStats {
  std::vector<std::int64_t> blocks_per_worker;
  double wall_seconds = 0.0;
};

// Test-only heterogeneity descriptor: slowdown 1 is an unperturbed worker,
// slowdown k makes every block cost k times more on that worker.
struct WorkerProfile {
  int id = 0;
  double slowdown = 1.0;
};

class SchedulerError : public std::runtime_error {
 public:
  SchedulerError(std::int64_t block_index, const std::string& what)
      : std::runtime_error(what), block_index_(block_index) {}

  std::int64_t block_index() const { return block_index_; }

 private:
  std::int64_t block_index_;
};

// The body is invoked once per block, possibly concurrently on distinct
// blocks; it must confine writes to the block's disjoint region. `worker` is
// the executing worker's index in [0, worker_count), for per-worker scratch.
using BlockBody = std::function<void(const WorkBlock& block, int worker)>;

// Executes every block exactly once. worker_count <= 1 degenerates to a
// sequential in-order loop on the calling thread. A body exception aborts
// handout and is rethrown as SchedulerError carrying the failing block index.
RunStats run_dynamic(std::span<const WorkBlock> blocks, int worker_count, const BlockBody& body);
RunStats run_static(std::span<const WorkBlock> blocks, int worker_count, const BlockBody& body);
RunStats run_blocks(std::span<const WorkBlock> blocks, int worker_count, SchedulerPolicy policy,
                    const BlockBody& body);

// Makespan (seconds) of `block_count` uniform synthetic blocks over the given
// worker profiles: each block sleeps cost * slowdown(worker). With profiles
// {1,1,1,2} and >= 64 blocks the dynamic policy rebalances around the slow
// worker while the static split is bottlenecked by its fixed share.
double simulate_heterogeneous(std::int64_t block_count, std::chrono::microseconds block_cost,
                              std::span<const WorkerProfile> profiles, SchedulerPolicy policy);

}  // namespace winoconv

#endif  // WINOCONV_SCHEDULER_HPP_
