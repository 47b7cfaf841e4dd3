// Copyright 2026 The auraspace Authors
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

#ifndef AURASPACE_SRC_PARALLEL_HPP_
#define AURASPACE_SRC_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace auraspace::detail {

/// Splits [0, total) into fixed chunks and hands them to `jobs` workers that
/// pull the next chunk from a shared counter. `fn(chunk, begin, end)` must
/// only write to state owned by `chunk`, so results merge deterministically.
/// Returning false from `fn` stops handing out chunks after the current one.
template <typename Fn>
void parallel_chunks(std::uint64_t total, std::uint64_t chunk_size, int jobs, Fn&& fn) {
  if (total == 0) return;
  chunk_size = std::max<std::uint64_t>(chunk_size, 1);
  const std::uint64_t chunks = (total + chunk_size - 1) / chunk_size;
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      if (stop.load(std::memory_order_relaxed)) return;
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      const std::uint64_t begin = c * chunk_size;
      const std::uint64_t end = std::min(total, begin + chunk_size);
      try {
        if (!fn(c, begin, end)) stop = true;
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        stop = true;
      }
    }
  };

  const int threads = static_cast<int>(std::min<std::uint64_t>(std::max(jobs, 1), chunks));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace auraspace::detail

#endif  // AURASPACE_SRC_PARALLEL_HPP_
