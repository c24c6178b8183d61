// Copyright 2026 The Glets Authors. All Rights Reserved.
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

#ifndef GLETS_SRC_PARALLEL_HPP_
#define GLETS_SRC_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace glets::detail {

// Worker cap from GLETS_THREADS; unset or 0 means hardware concurrency.
unsigned thread_limit();

// Runs fn(i) for i in [begin, end). Tasks must write to disjoint state;
// results are independent of the schedule. Falls back to a plain loop when
// the effective thread count is 1.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& fn);

}  // namespace glets::detail

#endif  // GLETS_SRC_PARALLEL_HPP_
