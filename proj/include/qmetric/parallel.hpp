// Copyright 2026 The qmetric Authors
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

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

#include "qmetric/rng.hpp"

namespace qmetric {

inline int resolve_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Deterministic parallel sweep over n items. Work is split into fixed-size
// chunks whose seeds depend only on (root_seed, chunk index) via
// chunk_seed = root_seed ^ splitmix64(chunk); partial accumulators merge in
// chunk order. The worker count therefore never changes the result.
//
// ItemFn: void(Acc&, std::size_t item_index, Rng&).
// MergeFn: void(Acc&, const Acc&).
template <class Acc, class ItemFn, class MergeFn>
Acc parallel_sweep(std::uint64_t root_seed, std::size_t n, int workers, ItemFn item,
                   MergeFn merge, std::size_t chunk_size = 2048) {
  const std::size_t n_chunks = (n + chunk_size - 1) / chunk_size;
  std::vector<Acc> parts(n_chunks);
  const int pool = std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(n_chunks, 1));

  std::atomic<std::size_t> next{0};
  auto run = [&]() {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      Rng rng(derive_seed(root_seed, c));
      Acc acc{};
      const std::size_t lo = c * chunk_size;
      const std::size_t hi = std::min(n, lo + chunk_size);
      for (std::size_t i = lo; i < hi; ++i) {
        item(acc, i, rng);
      }
      parts[c] = std::move(acc);
    }
  };

  if (pool <= 1) {
    run();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(pool));
    for (int t = 0; t < pool; ++t) {
      threads.emplace_back(run);
    }
    for (auto& t : threads) {
      t.join();
    }
  }

  Acc total{};
  for (const auto& p : parts) {
    merge(total, p);
  }
  return total;
}

}  // namespace qmetric
