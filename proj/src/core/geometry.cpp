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

#include "sdfseg/geometry.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace sdfseg
{

namespace
{

std::int64_t floor_div(std::int64_t num, std::int64_t den)
{
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0)))
    --q;
  return q;
}

} // namespace

Grid<std::int64_t> squared_distance_transform(const BinaryMask &mask, std::uint8_t target)
{
  if (mask.empty())
    throw Error(Errc::invalid_argument, "distance transform of an empty grid");
  validate_mask(mask);
  if (std::find(mask.begin(), mask.end(), target) == mask.end())
    throw Error(Errc::degenerate_mask, "distance transform: no pixel of value " +
                                         std::to_string(target) + " in the mask");

  const auto width = static_cast<std::int64_t>(mask.width());
  const auto height = static_cast<std::int64_t>(mask.height());
  // Exceeds every achievable in-image distance.
  const std::int64_t unreachable = width + height;

  // Phase 1: vertical distance to the nearest target in the same column.
  Grid<std::int64_t> column_dist(mask.width(), mask.height());
  detail::parallel_for(mask.width(), mask.height(), [&](std::size_t xi) {
    column_dist(0, xi) = mask(0, xi) == target ? 0 : unreachable;
    for (std::int64_t y = 1; y < height; ++y)
    {
      const std::int64_t above = column_dist(y - 1, xi);
      column_dist(y, xi) =
        mask(y, xi) == target ? 0 : std::min(unreachable, above + 1);
    }
    for (std::int64_t y = height - 2; y >= 0; --y)
    {
      const std::int64_t below = column_dist(y + 1, xi);
      if (below < column_dist(y, xi))
        column_dist(y, xi) = below + 1;
    }
  });

  // Phase 2: lower envelope of the parabolas (x - i)^2 + g(i)^2 along each row.
  Grid<std::int64_t> out(mask.width(), mask.height());
  detail::parallel_for(mask.height(), mask.width(), [&](std::size_t yi) {
    std::vector<std::int64_t> g(static_cast<std::size_t>(width));
    for (std::int64_t x = 0; x < width; ++x)
      g[x] = column_dist(yi, x);

    const auto f = [&](std::int64_t x, std::int64_t i) { return (x - i) * (x - i) + g[i] * g[i]; };
    const auto sep = [&](std::int64_t i, std::int64_t u) {
      return floor_div(u * u - i * i + g[u] * g[u] - g[i] * g[i], 2 * (u - i));
    };

    std::vector<std::int64_t> site(static_cast<std::size_t>(width));
    std::vector<std::int64_t> start(static_cast<std::size_t>(width));
    std::int64_t q = 0;
    site[0] = 0;
    start[0] = 0;
    for (std::int64_t u = 1; u < width; ++u)
    {
      while (q >= 0 && f(start[q], site[q]) > f(start[q], u))
        --q;
      if (q < 0)
      {
        q = 0;
        site[0] = u;
      }
      else
      {
        const std::int64_t w = 1 + sep(site[q], u);
        if (w < width)
        {
          ++q;
          site[q] = u;
          start[q] = w;
        }
      }
    }
    for (std::int64_t u = width - 1; u >= 0; --u)
    {
      out(yi, u) = f(u, site[q]);
      if (u == start[q])
        --q;
    }
  });
  return out;
}

ScalarField euclidean_distance_transform(const BinaryMask &mask)
{
  const auto squared = squared_distance_transform(mask, 0);
  ScalarField out(mask.width(), mask.height());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = std::sqrt(static_cast<double>(squared[i]));
  return out;
}

double max_distance(std::size_t width, std::size_t height) noexcept
{
  const auto w = static_cast<double>(width);
  const auto h = static_cast<double>(height);
  return std::sqrt(w * w + h * h);
}

SignedDistance signed_distance(const BinaryMask &mask)
{
  if (mask.empty())
    throw Error(Errc::invalid_argument, "signed distance of an empty grid");
  validate_mask(mask);

  const auto ones = static_cast<std::size_t>(std::count(mask.begin(), mask.end(), 1));
  if (ones == 0 || ones == mask.size())
  {
    const double clamp = max_distance(mask.width(), mask.height());
    return {ScalarField(mask.width(), mask.height(), ones == 0 ? -clamp : clamp), true};
  }

  const auto to_background = squared_distance_transform(mask, 0);
  const auto to_foreground = squared_distance_transform(mask, 1);
  ScalarField phi(mask.width(), mask.height());
  for (std::size_t i = 0; i < phi.size(); ++i)
  {
    if (mask[i] == 1)
      phi[i] = std::sqrt(static_cast<double>(to_background[i])) - 0.5;
    else
      phi[i] = -(std::sqrt(static_cast<double>(to_foreground[i])) - 0.5);
  }
  return {std::move(phi), false};
}

} // namespace sdfseg
