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

#ifndef SDFSEG_INSTANCES_HPP
#define SDFSEG_INSTANCES_HPP

#include "sdfseg/grid.hpp"
#include "sdfseg/mappings.hpp"

#include <cstdint>
#include <vector>

namespace sdfseg
{

/// Zeroes every labeled pixel whose 8-neighborhood holds a different nonzero
/// label. Both sides of a contact are removed.
LabelMap clean_borders(const LabelMap &labels);

/// Foreground of a cleaned label map. Throws separation_violation if two
/// different labels are still 8-adjacent.
BinaryMask labels_to_binary(const LabelMap &labels);

struct InstanceMask
{
  std::uint32_t label = 0;
  BinaryMask mask;
};

/// One mask per nonzero id, ascending.
std::vector<InstanceMask> instance_masks(const LabelMap &labels);

/// Distinct nonzero ids, ascending.
std::vector<std::uint32_t> label_ids(const LabelMap &labels);

/// 1 where alpha * phi + beta > 0, i.e. sigmoid(phi) > 0.5.
BinaryMask threshold_probability(const ScalarField &phi, const SigmoidParams &p);

/// 4-connected components numbered 1..K in row-major discovery order.
LabelMap connected_components(const BinaryMask &mask);

} // namespace sdfseg

#endif // SDFSEG_INSTANCES_HPP
