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

#ifndef SDFSEG_MAPPINGS_HPP
#define SDFSEG_MAPPINGS_HPP

#include "sdfseg/grid.hpp"

namespace sdfseg
{

/// Slope and offset of the learned sigmoid, sigma(z) = 1 / (1 + exp(-(alpha z + beta))).
struct SigmoidParams
{
  double alpha = 4.0;
  double beta = 0.0;

  /// alpha > 0 and both finite, else invalid_argument.
  void validate() const;
};

/// Overflow-free logistic function 1 / (1 + exp(-t)).
double logistic(double t) noexcept;

double sigmoid(double z, const SigmoidParams &p) noexcept;

/// 2 * sigmoid(z, p) - 1. Range (-1, 1), odd in alpha z + beta.
double tanh_ab(double z, const SigmoidParams &p) noexcept;

/// sigmoid(phi) * sigmoid(-phi); both factors use the same +beta.
double soft_boundary(double phi, const SigmoidParams &p) noexcept;
ScalarField soft_boundary(const ScalarField &phi, const SigmoidParams &p);

struct MappingPartials
{
  double sigmoid_dz;
  double sigmoid_dalpha;
  double sigmoid_dbeta;
  double tanh_dz;
  double tanh_dalpha;
  double tanh_dbeta;
};

MappingPartials mapping_partials(double z, const SigmoidParams &p) noexcept;

} // namespace sdfseg

#endif // SDFSEG_MAPPINGS_HPP
