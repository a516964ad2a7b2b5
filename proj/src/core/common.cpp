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

#include "sdfseg/error.hpp"
#include "sdfseg/grid.hpp"

#include <cmath>

namespace sdfseg
{

const char *errc_name(Errc code) noexcept
{
  switch (code)
  {
    case Errc::invalid_argument:
      return "invalid argument";
    case Errc::dimension_mismatch:
      return "dimension mismatch";
    case Errc::degenerate_mask:
      return "degenerate mask";
    case Errc::separation_violation:
      return "separation violation";
    case Errc::format:
      return "format error";
    case Errc::io:
      return "i/o error";
    case Errc::empty_set:
      return "empty set";
    case Errc::empty_ground_truth:
      return "empty ground truth";
  }
  return "unknown error";
}

std::string shape_string(std::size_t width, std::size_t height)
{
  return std::to_string(width) + "x" + std::to_string(height);
}

void validate_mask(const BinaryMask &mask)
{
  for (std::size_t i = 0; i < mask.size(); ++i)
  {
    if (mask[i] > 1)
      throw Error(Errc::invalid_argument, "binary mask value " + std::to_string(mask[i]) +
                                            " at index " + std::to_string(i) + " is not 0 or 1");
  }
}

void validate_finite(const ScalarField &field, const char *what)
{
  for (std::size_t i = 0; i < field.size(); ++i)
  {
    if (!std::isfinite(field[i]))
      throw Error(Errc::invalid_argument,
                  std::string(what) + ": non-finite value at index " + std::to_string(i));
  }
}

} // namespace sdfseg
