/*
 * Copyright 2026 The bentkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

namespace bentkit {

inline int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs worker(thread_index, begin, end) over [0, total) in blocks handed out
/// by an atomic counter. Workers own disjoint ranges, so any merge of
/// per-thread accumulators is independent of the thread count.
template <class Worker>
void parallel_blocks(std::uint64_t total, std::uint64_t block, int threads, Worker&& worker) {
    threads = resolve_thread_count(threads);
    if (threads <= 1 || total <= block) {
        worker(0, std::uint64_t{0}, total);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (;;) {
                const std::uint64_t begin = next.fetch_add(block);
                if (begin >= total) return;
                worker(t, begin, std::min(begin + block, total));
            }
        });
    }
    for (std::thread& th : pool) th.join();
}

}  // namespace bentkit
