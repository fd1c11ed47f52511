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

#ifndef FQEMAG_PARALLEL_H
#define FQEMAG_PARALLEL_H

#include <cstddef>
#include <functional>

namespace fqemag {

/// Sets the number of worker threads used by batched kernels (minimum 1).
void set_thread_count(int n);
int thread_count();

/// Runs body(begin, end) over [0, n) split into contiguous chunks, one per
/// worker. Runs inline when one thread is configured or n is small.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)> &body);

}  // namespace fqemag

#endif
