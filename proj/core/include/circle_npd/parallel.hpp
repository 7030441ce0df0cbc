// Copyright 2026 The circle-npd Authors
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

namespace npd {

/// Worker count: env CIRCLE_NPD_THREADS, where 0 or unset means one worker
/// per hardware thread.
std::size_t resolve_threads();

/// Run fn(begin, end) over a static contiguous partition of [0, n). Each
/// index is visited exactly once; workers must only write disjoint state per
/// index so results cannot depend on the partition. The first exception
/// thrown by any worker is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace npd
