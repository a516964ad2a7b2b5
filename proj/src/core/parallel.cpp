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

#include "parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace sdfseg::detail
{

namespace
{

constexpr std::size_t kMinWorkPerThread = 1 << 15;

} // namespace

std::size_t thread_count()
{
  std::size_t requested = 0;
  if (const char *env = std::getenv("SDFSEG_THREADS"))
  {
    try
    {
      requested = static_cast<std::size_t>(std::stoul(env));
    }
    catch (const std::exception &)
    {
      requested = 0;
    }
  }
  if (requested == 0)
    requested = std::max(1u, std::thread::hardware_concurrency());
  return requested;
}

void parallel_for(std::size_t n, std::size_t work_per_item,
                  const std::function<void(std::size_t)> &body)
{
  const std::size_t total_work = n * std::max<std::size_t>(work_per_item, 1);
  const std::size_t workers =
    std::min({thread_count(), n, std::max<std::size_t>(1, total_work / kMinWorkPerThread)});
  if (workers <= 1)
  {
    for (std::size_t i = 0; i < n; ++i)
      body(i);
    return;
  }

  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
  {
    threads.emplace_back([&, w] {
      try
      {
        const std::size_t first = w * chunk;
        const std::size_t last = std::min(n, first + chunk);
        for (std::size_t i = first; i < last; ++i)
          body(i);
      }
      catch (...)
      {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto &t : threads)
    t.join();
  for (auto &e : errors)
  {
    if (e)
      std::rethrow_exception(e);
  }
}

} // namespace sdfseg::detail
