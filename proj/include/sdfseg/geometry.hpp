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

#ifndef SDFSEG_GEOMETRY_HPP
#define SDFSEG_GEOMETRY_HPP

#include "sdfseg/grid.hpp"

#include <cstdint>

namespace sdfseg
{

/// Exact squared Euclidean distance from every pixel center to the nearest
/// pixel whose value equals `target`. Separable two-phase lower-envelope
/// transform, linear in the pixel count per phase; all arithmetic is integer.
///
/// Throws degenerate_mask when no pixel equals `target`.
Grid<std::int64_t> squared_distance_transform(const BinaryMask &mask, std::uint8_t target);

/// Distance to the nearest background (0) pixel. Foreground-free masks are
/// fine; an all-foreground mask throws degenerate_mask.
ScalarField euclidean_distance_transform(const BinaryMask &mask);

struct SignedDistance
{
  ScalarField phi;
  /// Set when the mask holds a single class; phi is then the constant
  /// +/- max_distance().
  bool degenerate = false;
};

/// Signed distance with the interface between pixel centers:
/// +(d - 0.5) inside, -(d - 0.5) outside, d being the distance to the nearest
/// pixel of the opposite class.
SignedDistance signed_distance(const BinaryMask &mask);

/// Image diagonal, sqrt(width^2 + height^2).
double max_distance(std::size_t width, std::size_t height) noexcept;

} // namespace sdfseg

#endif // SDFSEG_GEOMETRY_HPP
