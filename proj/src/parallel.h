// Copyright 2026 The eeaowf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace eeaowf::internal {

// Splits [0, total) into contiguous chunks and hands them to `workers`
// threads. fn(chunk_index, begin, end) must only touch state owned by its
// chunk; callers merge per-chunk results in chunk order.
template <class Fn>
void RunChunked(std::uint64_t total, std::size_t chunks, unsigned workers,
                Fn&& fn) {
  if (total == 0 || chunks == 0) {
    return;
  }
  const std::uint64_t step = (total + chunks - 1) / chunks;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto drain = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks) {
        return;
      }
      const std::uint64_t begin = std::min<std::uint64_t>(c * step, total);
      const std::uint64_t end = std::min<std::uint64_t>(begin + step, total);
      try {
        fn(c, begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) {
          failure = std::current_exception();
        }
        next.store(chunks);
        return;
      }
    }
  };

  const unsigned n = std::max(1u, std::min<unsigned>(
                                      workers, static_cast<unsigned>(chunks)));
  std::vector<std::thread> pool;
  pool.reserve(n - 1);
  for (unsigned i = 1; i < n; ++i) {
    pool.emplace_back(drain);
  }
  drain();
  for (auto& t : pool) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

inline std::size_t ChunkCount(std::uint64_t total, unsigned workers) {
  const std::uint64_t want = std::max(1u, workers) * 8ULL;
  return static_cast<std::size_t>(std::min<std::uint64_t>(total, want));
}

}  // namespace eeaowf::internal
