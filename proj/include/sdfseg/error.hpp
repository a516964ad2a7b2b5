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

#ifndef SDFSEG_ERROR_HPP
#define SDFSEG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sdfseg
{

enum class Errc
{
  invalid_argument = 1,
  dimension_mismatch,
  degenerate_mask,
  separation_violation,
  format,
  io,
  empty_set,
  empty_ground_truth,
};

const char *errc_name(Errc code) noexcept;

/// Exception type thrown by every operation in the library. The code maps
/// one-to-one onto the C API status values.
class Error : public std::runtime_error
{
public:
  Error(Errc code, const std::string &what) : std::runtime_error(what), _code(code) {}

  Errc code() const noexcept { return _code; }

private:
  Errc _code;
};

} // namespace sdfseg

#endif // SDFSEG_ERROR_HPP
