// Copyright 2026 The corpkit Authors.
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
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace corpkit {

// 0 means "one per hardware thread".
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [0, n) into at most `threads` contiguous shards and runs
// fn(shard, begin, end) for each. Shard boundaries depend only on n and the
// shard count, so callers that reduce shards in index order get results
// independent of scheduling. The first exception thrown by any shard is
// rethrown after all shards finish.
template <typename Fn>
std::size_t for_each_shard(std::size_t n, unsigned threads, Fn&& fn) {
  const std::size_t shards =
      std::max<std::size_t>(1, std::min<std::size_t>(resolve_threads(threads), n));
  if (shards == 1) {
    fn(std::size_t{0}, std::size_t{0}, n);
    return 1;
  }
  std::vector<std::exception_ptr> errors(shards);
  {
    std::vector<std::jthread> workers;
    workers.reserve(shards);
    for (std::size_t s = 0; s < shards; ++s) {
      const std::size_t begin = n * s / shards;
      const std::size_t end = n * (s + 1) / shards;
      workers.emplace_back([&, s, begin, end] {
        try {
          fn(s, begin, end);
        } catch (...) {
          errors[s] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return shards;
}

// Number of shards for_each_shard(n, threads, ...) will use.
inline std::size_t shard_count(std::size_t n, unsigned threads) {
  return std::max<std::size_t>(1, std::min<std::size_t>(resolve_threads(threads), n));
}

}  // namespace corpkit
