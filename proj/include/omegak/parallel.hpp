// Copyright 2026 The omegak Authors
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

#include <cstddef>
#include <functional>

namespace omegak {

/// Worker count: OMEGAK_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int default_thread_count();

/// Calls body(i) for i in [0, count) on up to `threads` threads.  Each index
/// is visited exactly once; the first exception thrown is rethrown after all
/// workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, int threads = 0);

}  // namespace omegak
