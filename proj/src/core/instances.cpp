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

#include "sdfseg/instances.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace sdfseg
{

namespace
{

/// True if an 8-neighbor of (row, col) holds a nonzero label other than own.
bool touches_foreign_label(const LabelMap &labels, std::size_t row, std::size_t col,
                           std::uint32_t own)
{
  const std::size_t r0 = row == 0 ? 0 : row - 1;
  const std::size_t c0 = col == 0 ? 0 : col - 1;
  const std::size_t r1 = std::min(row + 1, labels.height() - 1);
  const std::size_t c1 = std::min(col + 1, labels.width() - 1);
  for (std::size_t r = r0; r <= r1; ++r)
  {
    for (std::size_t c = c0; c <= c1; ++c)
    {
      const std::uint32_t v = labels(r, c);
      if (v != 0 && v != own)
        return true;
    }
  }
  return false;
}

} // namespace

LabelMap clean_borders(const LabelMap &labels)
{
  LabelMap out = labels;
  for (std::size_t r = 0; r < labels.height(); ++r)
  {
    for (std::size_t c = 0; c < labels.width(); ++c)
    {
      const std::uint32_t own = labels(r, c);
      if (own != 0 && touches_foreign_label(labels, r, c, own))
        out(r, c) = 0;
    }
  }
  return out;
}

BinaryMask labels_to_binary(const LabelMap &labels)
{
  BinaryMask mask(labels.width(), labels.height(), 0);
  for (std::size_t r = 0; r < labels.height(); ++r)
  {
    for (std::size_t c = 0; c < labels.width(); ++c)
    {
      const std::uint32_t own = labels(r, c);
      if (own == 0)
        continue;
      if (touches_foreign_label(labels, r, c, own))
        throw Error(Errc::separation_violation,
                    "label " + std::to_string(own) + " at (" + std::to_string(r) + ", " +
                      std::to_string(c) + ") touches another instance; run clean_borders first");
      mask(r, c) = 1;
    }
  }
  return mask;
}

std::vector<std::uint32_t> label_ids(const LabelMap &labels)
{
  std::set<std::uint32_t> ids;
  for (const auto v : labels)
  {
    if (v != 0)
      ids.insert(v);
  }
  return {ids.begin(), ids.end()};
}

std::vector<InstanceMask> instance_masks(const LabelMap &labels)
{
  std::vector<InstanceMask> out;
  for (const auto id : label_ids(labels))
  {
    BinaryMask mask(labels.width(), labels.height(), 0);
    for (std::size_t i = 0; i < labels.size(); ++i)
      mask[i] = labels[i] == id ? 1 : 0;
    out.push_back({id, std::move(mask)});
  }
  return out;
}

BinaryMask threshold_probability(const ScalarField &phi, const SigmoidParams &p)
{
  p.validate();
  BinaryMask mask(phi.width(), phi.height(), 0);
  for (std::size_t i = 0; i < phi.size(); ++i)
    mask[i] = p.alpha * phi[i] + p.beta > 0.0 ? 1 : 0;
  return mask;
}

LabelMap connected_components(const BinaryMask &mask)
{
  LabelMap labels(mask.width(), mask.height(), 0);
  std::vector<std::size_t> stack;
  std::uint32_t next = 0;
  const std::size_t width = mask.width();
  for (std::size_t seed = 0; seed < mask.size(); ++seed)
  {
    if (mask[seed] == 0 || labels[seed] != 0)
      continue;
    ++next;
    labels[seed] = next;
    stack.push_back(seed);
    while (!stack.empty())
    {
      const std::size_t i = stack.back();
      stack.pop_back();
      const std::size_t row = i / width;
      const std::size_t col = i % width;
      const auto visit = [&](std::size_t j) {
        if (mask[j] != 0 && labels[j] == 0)
        {
          labels[j] = next;
          stack.push_back(j);
        }
      };
      if (row > 0)
        visit(i - width);
      if (row + 1 < mask.height())
        visit(i + width);
      if (col > 0)
        visit(i - 1);
      if (col + 1 < width)
        visit(i + 1);
    }
  }
  return labels;
}

} // namespace sdfseg
