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

#include "sdfseg/losses.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sdfseg
{

namespace
{

/// Sigmoid values of one pixel, evaluated without cancellation.
struct Activation
{
  double s;         // sigma(alpha z + beta)
  double s_comp;    // 1 - s
  double r;         // sigma(-alpha z + beta), the "-phi" factor of the boundary map
  double r_comp;    // 1 - r
  double boundary;  // s * r
  double tanh;      // 2 s - 1

  Activation(double z, const SigmoidParams &p)
  {
    const double t = p.alpha * z + p.beta;
    const double u = -p.alpha * z + p.beta;
    s = logistic(t);
    s_comp = logistic(-t);
    r = logistic(u);
    r_comp = logistic(-u);
    boundary = s * r;
    tanh = 2.0 * s - 1.0;
  }

  // d tanh / d(z, alpha, beta)
  double tanh_dz(double alpha) const { return 2.0 * alpha * s * s_comp; }
  double tanh_dalpha(double z) const { return 2.0 * z * s * s_comp; }
  double tanh_dbeta() const { return 2.0 * s * s_comp; }

  // d boundary / d(z, alpha, beta)
  double boundary_dz(double alpha) const { return alpha * s * r * (s_comp - r_comp); }
  double boundary_dalpha(double z) const { return z * s * r * (s_comp - r_comp); }
  double boundary_dbeta() const { return s * r * (s_comp + r_comp); }
};

double sign(double v) noexcept { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

double reduction_scale(Reduction reduction, std::size_t n)
{
  return reduction == Reduction::mean ? 1.0 / static_cast<double>(n) : 1.0;
}

double ce_pixel(const Activation &a, std::uint8_t label)
{
  if (label == 1)
    return -std::log(std::max(a.s, kCeClamp));
  return -std::log(std::max(a.s_comp, kCeClamp));
}

/// d(ce_pixel) / dt where t = alpha z + beta. Zero inside the clamp.
double ce_pixel_dt(const Activation &a, std::uint8_t label)
{
  if (label == 1)
    return a.s > kCeClamp ? -a.s_comp : 0.0;
  return a.s_comp > kCeClamp ? a.s : 0.0;
}

void check_pair(const ScalarField &phi_pred, const ScalarField &phi_gt, const SigmoidParams &p)
{
  require_same_shape(phi_pred, phi_gt, "predicted vs ground-truth field");
  if (phi_pred.empty())
    throw Error(Errc::invalid_argument, "loss of an empty field");
  p.validate();
  validate_finite(phi_pred, "predicted field");
  validate_finite(phi_gt, "ground-truth field");
}

void check_inputs(const ScalarField &phi_pred, const ScalarField &phi_gt, const BinaryMask &s_gt,
                  const SigmoidParams &p, const LossWeights &w)
{
  check_pair(phi_pred, phi_gt, p);
  require_same_shape(phi_pred, s_gt, "predicted field vs ground-truth mask");
  validate_mask(s_gt);
  w.validate();
}

} // namespace

void LossWeights::validate() const
{
  for (const double v : {lmhd, rmhd, lse, ce})
  {
    if (!std::isfinite(v) || v < 0.0)
      throw Error(Errc::invalid_argument,
                  "loss weights must be finite and non-negative, got " + std::to_string(v));
  }
}

double loss_lmhd(const ScalarField &phi_pred, const ScalarField &phi_gt, const SigmoidParams &p)
{
  check_pair(phi_pred, phi_gt, p);
  double sum = 0.0;
  for (std::size_t i = 0; i < phi_pred.size(); ++i)
    sum += soft_boundary(phi_gt[i], p) * std::abs(tanh_ab(phi_pred[i], p));
  return sum;
}

double loss_rmhd(const ScalarField &phi_pred, const ScalarField &phi_gt, const SigmoidParams &p)
{
  check_pair(phi_pred, phi_gt, p);
  double sum = 0.0;
  for (std::size_t i = 0; i < phi_pred.size(); ++i)
    sum += soft_boundary(phi_pred[i], p) * std::abs(tanh_ab(phi_gt[i], p));
  return sum;
}

double loss_lse(const ScalarField &phi_pred, const ScalarField &phi_gt, const SigmoidParams &p,
                Reduction reduction)
{
  check_pair(phi_pred, phi_gt, p);
  double sum = 0.0;
  for (std::size_t i = 0; i < phi_pred.size(); ++i)
  {
    const double d = tanh_ab(phi_pred[i], p) - tanh_ab(phi_gt[i], p);
    sum += d * d;
  }
  return sum * reduction_scale(reduction, phi_pred.size());
}

double loss_ce(const ScalarField &phi_pred, const BinaryMask &s_gt, const SigmoidParams &p,
               Reduction reduction)
{
  require_same_shape(phi_pred, s_gt, "predicted field vs ground-truth mask");
  if (phi_pred.empty())
    throw Error(Errc::invalid_argument, "loss of an empty field");
  p.validate();
  validate_finite(phi_pred, "predicted field");
  validate_mask(s_gt);
  double sum = 0.0;
  for (std::size_t i = 0; i < phi_pred.size(); ++i)
    sum += ce_pixel(Activation(phi_pred[i], p), s_gt[i]);
  return sum * reduction_scale(reduction, phi_pred.size());
}

LossBreakdown loss_total(const ScalarField &phi_pred, const ScalarField &phi_gt,
                         const BinaryMask &s_gt, const SigmoidParams &p, const LossWeights &w,
                         const LossOptions &options)
{
  check_inputs(phi_pred, phi_gt, s_gt, p, w);

  LossBreakdown out;
  for (std::size_t i = 0; i < phi_pred.size(); ++i)
  {
    const Activation pred(phi_pred[i], p);
    const Activation gt(phi_gt[i], p);
    out.lmhd += gt.boundary * std::abs(pred.tanh);
    out.rmhd += pred.boundary * std::abs(gt.tanh);
    const double d = pred.tanh - gt.tanh;
    out.lse += d * d;
    out.ce += ce_pixel(pred, s_gt[i]);
  }
  const double scale = reduction_scale(options.region_reduction, phi_pred.size());
  out.lse *= scale;
  out.ce *= scale;
  out.total = w.lmhd * out.lmhd + w.rmhd * out.rmhd + w.lse * out.lse + w.ce * out.ce;
  return out;
}

LossGradients loss_backward(const ScalarField &phi_pred, const ScalarField &phi_gt,
                            const BinaryMask &s_gt, const SigmoidParams &p, const LossWeights &w,
                            const LossOptions &options)
{
  check_inputs(phi_pred, phi_gt, s_gt, p, w);

  const double scale = reduction_scale(options.region_reduction, phi_pred.size());
  const double gt_paths = options.param_grad_through_gt ? 1.0 : 0.0;
  LossGradients out{ScalarField(phi_pred.width(), phi_pred.height()), 0.0, 0.0};

  for (std::size_t i = 0; i < phi_pred.size(); ++i)
  {
    const double zp = phi_pred[i];
    const double zg = phi_gt[i];
    const Activation pred(zp, p);
    const Activation gt(zg, p);
    const double sign_pred = sign(pred.tanh);
    const double sign_gt = sign(gt.tanh);
    const double diff = pred.tanh - gt.tanh;
    const double ce_dt = ce_pixel_dt(pred, s_gt[i]);

    out.d_phi[i] = w.lmhd * gt.boundary * sign_pred * pred.tanh_dz(p.alpha) +
                   w.rmhd * std::abs(gt.tanh) * pred.boundary_dz(p.alpha) +
                   w.lse * scale * 2.0 * diff * pred.tanh_dz(p.alpha) +
                   w.ce * scale * ce_dt * p.alpha;

    out.d_alpha +=
      w.lmhd * (gt_paths * gt.boundary_dalpha(zg) * std::abs(pred.tanh) +
                gt.boundary * sign_pred * pred.tanh_dalpha(zp)) +
      w.rmhd * (pred.boundary_dalpha(zp) * std::abs(gt.tanh) +
                gt_paths * pred.boundary * sign_gt * gt.tanh_dalpha(zg)) +
      w.lse * scale * 2.0 * diff * (pred.tanh_dalpha(zp) - gt_paths * gt.tanh_dalpha(zg)) +
      w.ce * scale * ce_dt * zp;

    out.d_beta +=
      w.lmhd * (gt_paths * gt.boundary_dbeta() * std::abs(pred.tanh) +
                gt.boundary * sign_pred * pred.tanh_dbeta()) +
      w.rmhd * (pred.boundary_dbeta() * std::abs(gt.tanh) +
                gt_paths * pred.boundary * sign_gt * gt.tanh_dbeta()) +
      w.lse * scale * 2.0 * diff * (pred.tanh_dbeta() - gt_paths * gt.tanh_dbeta()) +
      w.ce * scale * ce_dt;
  }
  return out;
}

FitResult fit_sdf(const ScalarField &phi_gt, const BinaryMask &s_gt, const SigmoidParams &p,
                  const LossWeights &w, const FitOptions &fit, const LossOptions &options)
{
  if (fit.steps == 0)
    throw Error(Errc::invalid_argument, "fit needs at least one step");
  if (!(fit.learning_rate > 0.0) || !std::isfinite(fit.learning_rate))
    throw Error(Errc::invalid_argument, "fit learning rate must be positive");
  if (!(fit.min_alpha > 0.0))
    throw Error(Errc::invalid_argument, "fit min_alpha must be positive");
  validate_finite(phi_gt, "ground-truth field");

  FitResult result;
  result.phi = ScalarField(phi_gt.width(), phi_gt.height(), 0.0);
  result.params = p;
  result.initial = loss_total(result.phi, phi_gt, s_gt, p, w, options);
  result.history.reserve(fit.steps);

  LossBreakdown current = result.initial;
  double lr = fit.learning_rate;
  ScalarField candidate(phi_gt.width(), phi_gt.height());
  for (std::size_t step = 0; step < fit.steps; ++step)
  {
    const auto grad = loss_backward(result.phi, phi_gt, s_gt, result.params, w, options);
    for (std::size_t i = 0; i < candidate.size(); ++i)
      candidate[i] = result.phi[i] - lr * grad.d_phi[i];

    SigmoidParams next = result.params;
    if (fit.learn_params)
    {
      next.alpha = std::max(fit.min_alpha, next.alpha - lr * grad.d_alpha);
      next.beta -= lr * grad.d_beta;
    }

    const auto trial = loss_total(candidate, phi_gt, s_gt, next, w, options);
    if (trial.total <= current.total)
    {
      std::swap(result.phi, candidate);
      result.params = next;
      current = trial;
      ++result.accepted_steps;
    }
    else
    {
      lr *= 0.5;
      ++result.rejected_steps;
    }
    result.history.push_back(current.total);
  }
  result.final = current;
  result.final_learning_rate = lr;
  return result;
}

} // namespace sdfseg
