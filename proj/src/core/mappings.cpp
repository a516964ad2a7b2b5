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

#include "sdfseg/mappings.hpp"

#include <cmath>
#include <string>

namespace sdfseg
{

void SigmoidParams::validate() const
{
  if (!std::isfinite(alpha) || !std::isfinite(beta))
    throw Error(Errc::invalid_argument, "sigmoid parameters must be finite");
  if (!(alpha > 0.0))
    throw Error(Errc::invalid_argument,
                "sigmoid slope alpha must be positive, got " + std::to_string(alpha));
}

double logistic(double t) noexcept
{
  if (t >= 0.0)
    return 1.0 / (1.0 + std::exp(-t));
  const double e = std::exp(t);
  return e / (1.0 + e);
}

double sigmoid(double z, const SigmoidParams &p) noexcept { return logistic(p.alpha * z + p.beta); }

double tanh_ab(double z, const SigmoidParams &p) noexcept { return 2.0 * sigmoid(z, p) - 1.0; }

double soft_boundary(double phi, const SigmoidParams &p) noexcept
{
  return sigmoid(phi, p) * sigmoid(-phi, p);
}

ScalarField soft_boundary(const ScalarField &phi, const SigmoidParams &p)
{
  p.validate();
  ScalarField out(phi.width(), phi.height());
  for (std::size_t i = 0; i < phi.size(); ++i)
    out[i] = soft_boundary(phi[i], p);
  return out;
}

MappingPartials mapping_partials(double z, const SigmoidParams &p) noexcept
{
  const double t = p.alpha * z + p.beta;
  // sigma (1 - sigma), with 1 - sigma(t) evaluated as sigma(-t).
  const double slope = logistic(t) * logistic(-t);
  MappingPartials d{};
  d.sigmoid_dz = p.alpha * slope;
  d.sigmoid_dalpha = z * slope;
  d.sigmoid_dbeta = slope;
  d.tanh_dz = 2.0 * d.sigmoid_dz;
  d.tanh_dalpha = 2.0 * d.sigmoid_dalpha;
  d.tanh_dbeta = 2.0 * d.sigmoid_dbeta;
  return d;
}

} // namespace sdfseg
