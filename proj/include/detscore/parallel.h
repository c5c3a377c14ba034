// Copyright 2026 The detscore Authors.
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

#ifndef DETSCORE_PARALLEL_H_
#define DETSCORE_PARALLEL_H_

#include <cstddef>
#include <exception>
#include <vector>

#include <omp.h>

namespace detscore {

// 0 means "OpenMP default"; negative values are treated as 1.
inline int ResolveThreads(int requested) {
  if (requested == 0) return omp_get_max_threads();
  return requested < 0 ? 1 : requested;
}

// Runs body(i) for i in [0, n) on `threads` threads. Exceptions cannot cross
// an OpenMP region, so each one is captured per index; the lowest-index
// failure is rethrown afterwards, which keeps error reporting deterministic.
template <typename Body>
void ParallelFor(std::size_t n, int threads, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(ResolveThreads(threads))
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace detscore

#endif  // DETSCORE_PARALLEL_H_
