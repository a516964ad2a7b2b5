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
#include "sdfseg/losses.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace sdfseg
{

namespace
{

/// Portable uniform/normal draws on top of mt19937_64, whose output
/// sequence is fixed by the standard.
class Rng
{
public:
  explicit Rng(std::uint64_t seed) : _engine(seed) {}

  double uniform() { return static_cast<double>(_engine() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal()
  {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

private:
  std::mt19937_64 _engine;
};

BinaryMask random_blobs(Rng &rng, std::size_t size)
{
  const double n = static_cast<double>(size);
  for (;;)
  {
    BinaryMask mask(size, size, 0);
    const int blobs = 1 + static_cast<int>(rng.uniform() * 3.0);
    for (int b = 0; b < blobs; ++b)
    {
      const double cy = rng.uniform(0.0, n);
      const double cx = rng.uniform(0.0, n);
      const double radius = rng.uniform(1.5, std::max(2.0, n / 3.0));
      for (std::size_t y = 0; y < size; ++y)
      {
        for (std::size_t x = 0; x < size; ++x)
        {
          const double dy = static_cast<double>(y) - cy;
          const double dx = static_cast<double>(x) - cx;
          if (dy * dy + dx * dx <= radius * radius)
            mask(y, x) = 1;
        }
      }
    }
    const auto ones = std::count(mask.begin(), mask.end(), 1);
    if (ones > 0 && static_cast<std::size_t>(ones) < mask.size())
      return mask;
  }
}

struct ErrorTracker
{
  const GradCheckOptions &opts;
  GradCheckTrial &trial;
  std::size_t checked = 0;

  void compare(double analytic, double numeric)
  {
    ++checked;
    const double abs_err = std::abs(analytic - numeric);
    if (std::abs(analytic) < opts.small_magnitude)
    {
      trial.max_abs_error_small = std::max(trial.max_abs_error_small, abs_err);
      if (!(abs_err < opts.abs_tolerance))
        ++trial.failures;
      return;
    }
    const double rel = abs_err / std::max(std::abs(analytic), std::abs(numeric));
    trial.max_rel_error = std::max(trial.max_rel_error, rel);
    if (!(rel < opts.rel_tolerance))
      ++trial.failures;
  }
};

} // namespace

GradCheckReport run_grad_check(const GradCheckOptions &opts)
{
  if (opts.trials == 0)
    throw Error(Errc::invalid_argument, "gradient check needs at least one trial");
  if (opts.size < 2)
    throw Error(Errc::invalid_argument, "gradient check field size must be at least 2");
  if (!(opts.step > 0.0))
    throw Error(Errc::invalid_argument, "finite-difference step must be positive");
  opts.weights.validate();
  if (!opts.loss.param_grad_through_gt)
    throw Error(Errc::invalid_argument,
                "gradient check compares against the full objective; enable param_grad_through_gt");

  Rng rng(opts.seed);
  GradCheckReport report;
  for (std::size_t t = 0; t < opts.trials; ++t)
  {
    const BinaryMask mask = random_blobs(rng, opts.size);
    const ScalarField phi_gt = signed_distance(mask).phi;
    ScalarField phi_pred = signed_distance(random_blobs(rng, opts.size)).phi;
    for (std::size_t i = 0; i < phi_pred.size(); ++i)
      phi_pred[i] += 0.75 * rng.normal();

    SigmoidParams params;
    if (t > 0)
      params = {rng.uniform(1.0, 6.0), rng.uniform(-1.0, 1.0)};

    // loss_total is a sum of independent per-pixel terms, so
    // L(phi + h e_i) - L(phi - h e_i) equals the difference of pixel i's own
    // term. Evaluating that term on a 1x1 instance keeps the difference free
    // of the cancellation error of the full-image sum.
    const double scale = opts.loss.region_reduction == Reduction::mean
                           ? 1.0 / static_cast<double>(phi_pred.size())
                           : 1.0;
    const auto pixel_total = [&](std::size_t i, double z, const SigmoidParams &p) {
      const ScalarField pred(1, 1, z);
      const ScalarField gt(1, 1, phi_gt[i]);
      const BinaryMask s(1, 1, mask[i]);
      const auto b = loss_total(pred, gt, s, p, opts.weights, opts.loss);
      return opts.weights.lmhd * b.lmhd + opts.weights.rmhd * b.rmhd +
             scale * (opts.weights.lse * b.lse + opts.weights.ce * b.ce);
    };
    const auto grad = loss_backward(phi_pred, phi_gt, mask, params, opts.weights, opts.loss);

    GradCheckTrial trial;
    trial.params = params;
    ErrorTracker tracker{opts, trial};
    const double h = opts.step;

    double alpha_diff = 0.0;
    double beta_diff = 0.0;
    for (std::size_t i = 0; i < phi_pred.size(); ++i)
    {
      const double z = phi_pred[i];
      const double up = pixel_total(i, z + h, params);
      const double down = pixel_total(i, z - h, params);
      // |tanh| is not differentiable where alpha z + beta = 0.
      if (std::abs(params.alpha * z + params.beta) <= params.alpha * h)
        ++trial.skipped_kinks;
      else
        tracker.compare(grad.d_phi[i], (up - down) / (2.0 * h));
      alpha_diff += pixel_total(i, z, {params.alpha + h, params.beta}) -
                    pixel_total(i, z, {params.alpha - h, params.beta});
      beta_diff += pixel_total(i, z, {params.alpha, params.beta + h}) -
                   pixel_total(i, z, {params.alpha, params.beta - h});
    }
    tracker.compare(grad.d_alpha, alpha_diff / (2.0 * h));
    tracker.compare(grad.d_beta, beta_diff / (2.0 * h));

    report.checked += tracker.checked;
    report.skipped_kinks += trial.skipped_kinks;
    report.failures += trial.failures;
    report.max_rel_error = std::max(report.max_rel_error, trial.max_rel_error);
    report.max_abs_error_small = std::max(report.max_abs_error_small, trial.max_abs_error_small);
    report.trials.push_back(trial);
  }
  return report;
}

} // namespace sdfseg
