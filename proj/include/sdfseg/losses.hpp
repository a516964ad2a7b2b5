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

#ifndef SDFSEG_LOSSES_HPP
#define SDFSEG_LOSSES_HPP

#include "sdfseg/grid.hpp"
#include "sdfseg/mappings.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sdfseg
{

struct LossWeights
{
  double lmhd = 0.9;
  double rmhd = 0.1;
  double lse = 1.0;
  double ce = 1.0;

  void validate() const;
};

/// How the per-pixel LSE and CE terms are reduced over the image. The two
/// boundary terms are always summed.
enum class Reduction
{
  sum,
  mean,
};

struct LossOptions
{
  Reduction region_reduction = Reduction::sum;
  /// Propagate d/d(alpha, beta) through B_GT and tanh(phi_GT) as well.
  bool param_grad_through_gt = true;
};

struct LossBreakdown
{
  double lmhd = 0.0;
  double rmhd = 0.0;
  double lse = 0.0;
  double ce = 0.0;
  double total = 0.0;
};

struct LossGradients
{
  ScalarField d_phi;
  double d_alpha = 0.0;
  double d_beta = 0.0;
};

inline constexpr double kCeClamp = 1e-12;

/// Sum over pixels of B_GT * |tanh(phi_pred)|.
double loss_lmhd(const ScalarField &phi_pred, const ScalarField &phi_gt, const SigmoidParams &p);

/// Sum over pixels of B_PRED * |tanh(phi_gt)|.
double loss_rmhd(const ScalarField &phi_pred, const ScalarField &phi_gt, const SigmoidParams &p);

double loss_lse(const ScalarField &phi_pred, const ScalarField &phi_gt, const SigmoidParams &p,
                Reduction reduction = LossOptions{}.region_reduction);

/// Binary cross-entropy of sigmoid(phi_pred) against the GT mask, with log
/// arguments clamped to [kCeClamp, 1].
double loss_ce(const ScalarField &phi_pred, const BinaryMask &s_gt, const SigmoidParams &p,
               Reduction reduction = LossOptions{}.region_reduction);

LossBreakdown loss_total(const ScalarField &phi_pred, const ScalarField &phi_gt,
                         const BinaryMask &s_gt, const SigmoidParams &p, const LossWeights &w,
                         const LossOptions &options = {});

/// Closed-form gradient of loss_total with respect to every pixel of
/// phi_pred and to (alpha, beta). The |x| subgradient at 0 is 0.
LossGradients loss_backward(const ScalarField &phi_pred, const ScalarField &phi_gt,
                            const BinaryMask &s_gt, const SigmoidParams &p, const LossWeights &w,
                            const LossOptions &options = {});

struct FitOptions
{
  std::size_t steps = 2000;
  double learning_rate = 0.1;
  /// Also descend on (alpha, beta); alpha is kept above min_alpha.
  bool learn_params = false;
  double min_alpha = 1e-3;
};

struct FitResult
{
  ScalarField phi;
  SigmoidParams params;
  LossBreakdown initial;
  LossBreakdown final;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  double final_learning_rate = 0.0;
  /// Total loss after each iteration (accepted or not, the current value).
  std::vector<double> history;
};

/// Plain gradient descent on the pixel field starting from phi = 0. A step
/// that increases the total loss is rejected and the learning rate halved.
FitResult fit_sdf(const ScalarField &phi_gt, const BinaryMask &s_gt, const SigmoidParams &p,
                  const LossWeights &w, const FitOptions &fit = {},
                  const LossOptions &options = {});

struct GradCheckOptions
{
  std::uint64_t seed = 0;
  std::size_t size = 16;
  std::size_t trials = 20;
  double step = 1e-4;
  double rel_tolerance = 1e-5;
  double abs_tolerance = 1e-8;
  /// Below this analytic magnitude the absolute tolerance applies.
  double small_magnitude = 1e-6;
  LossWeights weights{};
  LossOptions loss{};
};

struct GradCheckTrial
{
  SigmoidParams params;
  double max_rel_error = 0.0;
  double max_abs_error_small = 0.0;
  std::size_t failures = 0;
  /// Pixels whose difference stencil crosses the |tanh| kink at
  /// alpha z + beta = 0; not compared.
  std::size_t skipped_kinks = 0;
};

struct GradCheckReport
{
  std::vector<GradCheckTrial> trials;
  double max_rel_error = 0.0;
  double max_abs_error_small = 0.0;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::size_t skipped_kinks = 0;

  bool passed() const noexcept { return failures == 0 && checked > 0; }
};

/// Compares loss_backward against central differences of loss_total on
/// random instances.
GradCheckReport run_grad_check(const GradCheckOptions &options);

} // namespace sdfseg

#endif // SDFSEG_LOSSES_HPP
