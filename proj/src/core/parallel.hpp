/*
 * Copyright (c) 2026 The sdfseg Authors. All Rights Reserved
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SDFSEG_PARALLEL_HPP
#define SDFSEG_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace sdfseg::detail
{

/// Worker count from SDFSEG_THREADS (unset or 0 = hardware concurrency).
std::size_t thread_count();

/// Runs body(i) for i in [0, n), split into contiguous chunks across
/// threads when the job is large enough. Each index is visited once, so
/// results do not depend on the thread count.
void parallel_for(std::size_t n, std::size_t work_per_item,
                  const std::function<void(std::size_t)> &body);

} // namespace sdfseg::detail

#endif // SDFSEG_PARALLEL_HPP
