//
// Copyright 2026 The DPLP Authors
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
//

#ifndef DPLP_PARALLEL_HPP_
#define DPLP_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace dplp {

int default_thread_count();

// Runs body(i) for i in [0, count). threads <= 0 means default_thread_count().
// Tasks must be independent; each writes to its own output slot so results
// never depend on scheduling. The first exception thrown by a task is
// rethrown on the caller thread after all workers join.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace dplp

#endif  // DPLP_PARALLEL_HPP_
