// Copyright 2026 The fqemag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fqemag/parallel.h"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace fqemag {
namespace {
std::atomic<int> g_threads{1};
constexpr std::size_t kMinChunk = 64;
}  // namespace

void set_thread_count(int n) { g_threads.store(std::max(1, n)); }

int thread_count() { return g_threads.load(); }

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)> &body) {
    std::size_t workers = static_cast<std::size_t>(thread_count());
    workers = std::min(workers, (n + kMinChunk - 1) / kMinChunk);
    if (workers <= 1) {
        if (n > 0) {
            body(0, n);
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 1; w < workers; ++w) {
        std::size_t b = w * chunk;
        std::size_t e = std::min(n, b + chunk);
        if (b < e) {
            pool.emplace_back(body, b, e);
        }
    }
    body(0, std::min(n, chunk));
    for (auto &t : pool) {
        t.join();
    }
}

}  // namespace fqemag
