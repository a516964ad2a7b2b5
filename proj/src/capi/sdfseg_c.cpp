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

#include "sdfseg/sdfseg.h"

#include "sdfseg/error.hpp"
#include "sdfseg/geometry.hpp"
#include "sdfseg/instances.hpp"
#include "sdfseg/io.hpp"
#include "sdfseg/losses.hpp"
#include "sdfseg/mappings.hpp"
#include "sdfseg/metrics.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

struct sdfseg_field
{
  sdfseg::ScalarField value;
};

struct sdfseg_mask
{
  sdfseg::BinaryMask value;
};

struct sdfseg_labels
{
  sdfseg::LabelMap value;
};

struct sdfseg_seg_report
{
  sdfseg::SegReport value;
};

struct sdfseg_grad_report
{
  sdfseg::GradCheckReport value;
};

namespace
{

thread_local std::string g_last_error;

sdfseg_status to_status(sdfseg::Errc code)
{
  switch (code)
  {
  case sdfseg::Errc::invalid_argument:
    return SDFSEG_ERROR_INVALID_ARGUMENT;
  case sdfseg::Errc::dimension_mismatch:
    return SDFSEG_ERROR_DIMENSION_MISMATCH;
  case sdfseg::Errc::degenerate_mask:
    return SDFSEG_ERROR_DEGENERATE;
  case sdfseg::Errc::separation_violation:
    return SDFSEG_ERROR_SEPARATION;
  case sdfseg::Errc::format:
    return SDFSEG_ERROR_FORMAT;
  case sdfseg::Errc::io:
    return SDFSEG_ERROR_IO;
  case sdfseg::Errc::empty_set:
    return SDFSEG_ERROR_EMPTY_SET;
  case sdfseg::Errc::empty_ground_truth:
    return SDFSEG_ERROR_EMPTY_GROUND_TRUTH;
  }
  return SDFSEG_ERROR_INTERNAL;
}

sdfseg_status fail(sdfseg_status status, const char *message)
{
  g_last_error = message;
  return status;
}

template <typename Body> sdfseg_status guarded(Body &&body)
{
  try
  {
    body();
    g_last_error.clear();
    return SDFSEG_OK;
  }
  catch (const sdfseg::Error &e)
  {
    return fail(to_status(e.code()), e.what());
  }
  catch (const std::bad_alloc &)
  {
    return fail(SDFSEG_ERROR_OUT_OF_MEMORY, "out of memory");
  }
  catch (const std::exception &e)
  {
    return fail(SDFSEG_ERROR_INTERNAL, e.what());
  }
  catch (...)
  {
    return fail(SDFSEG_ERROR_INTERNAL, "unknown error");
  }
}

#define SDFSEG_REQUIRE(ptr)                                                                        \
  do                                                                                               \
  {                                                                                                \
    if ((ptr) == nullptr)                                                                          \
      return fail(SDFSEG_ERROR_NULL_POINTER, #ptr " is NULL");                                     \
  } while (0)

template <typename T> std::vector<T> copy_values(size_t width, size_t height, const T *values)
{
  if (width != 0 && height > SIZE_MAX / width)
    throw sdfseg::Error(sdfseg::Errc::invalid_argument, "grid size overflows");
  const size_t n = width * height;
  if (values == nullptr)
    return std::vector<T>(n, T{});
  return std::vector<T>(values, values + n);
}

sdfseg::SigmoidParams to_params(sdfseg_params p)
{
  sdfseg::SigmoidParams out{p.alpha, p.beta};
  out.validate();
  return out;
}

sdfseg_params from_params(const sdfseg::SigmoidParams &p) { return {p.alpha, p.beta}; }

sdfseg::LossWeights to_weights(sdfseg_weights w)
{
  sdfseg::LossWeights out{w.lmhd, w.rmhd, w.lse, w.ce};
  out.validate();
  return out;
}

sdfseg::LossOptions to_options(const sdfseg_loss_options *o)
{
  sdfseg::LossOptions out;
  if (o == nullptr)
    return out;
  switch (o->region_reduction)
  {
  case SDFSEG_REDUCTION_SUM:
    out.region_reduction = sdfseg::Reduction::sum;
    break;
  case SDFSEG_REDUCTION_MEAN:
    out.region_reduction = sdfseg::Reduction::mean;
    break;
  default:
    throw sdfseg::Error(sdfseg::Errc::invalid_argument, "unknown reduction");
  }
  out.param_grad_through_gt = o->param_grad_through_gt != 0;
  return out;
}

sdfseg_loss_breakdown from_breakdown(const sdfseg::LossBreakdown &b)
{
  return {b.lmhd, b.rmhd, b.lse, b.ce, b.total};
}

char *duplicate(const std::string &text)
{
  auto *out = static_cast<char *>(std::malloc(text.size() + 1));
  if (out == nullptr)
    throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

sdfseg::PointSet to_points(const int32_t *rc, size_t count)
{
  sdfseg::PointSet out(count);
  for (size_t i = 0; i < count; ++i)
    out[i] = {rc[2 * i], rc[2 * i + 1]};
  return out;
}

double point_distance(const sdfseg::PointSet &a, const sdfseg::PointSet &b,
                      sdfseg_distance_mode mode)
{
  switch (mode)
  {
  case SDFSEG_DISTANCE_HAUSDORFF:
    return sdfseg::hausdorff(a, b);
  case SDFSEG_DISTANCE_MHD:
    return sdfseg::mhd(a, b, false);
  case SDFSEG_DISTANCE_MHD_NORMALIZED:
    return sdfseg::mhd(a, b, true);
  default:
    throw sdfseg::Error(sdfseg::Errc::invalid_argument,
                        "distance mode not defined for point sets");
  }
}

} // namespace

extern "C" {

const char *sdfseg_version(void) { return "0.1.0"; }

const char *sdfseg_status_string(sdfseg_status status)
{
  switch (status)
  {
  case SDFSEG_OK:
    return "ok";
  case SDFSEG_ERROR_INVALID_ARGUMENT:
    return "invalid argument";
  case SDFSEG_ERROR_DIMENSION_MISMATCH:
    return "dimension mismatch";
  case SDFSEG_ERROR_DEGENERATE:
    return "degenerate mask";
  case SDFSEG_ERROR_SEPARATION:
    return "separation violation";
  case SDFSEG_ERROR_FORMAT:
    return "format error";
  case SDFSEG_ERROR_IO:
    return "i/o error";
  case SDFSEG_ERROR_EMPTY_SET:
    return "empty set";
  case SDFSEG_ERROR_EMPTY_GROUND_TRUTH:
    return "empty ground truth";
  case SDFSEG_ERROR_NULL_POINTER:
    return "null pointer";
  case SDFSEG_ERROR_OUT_OF_MEMORY:
    return "out of memory";
  case SDFSEG_ERROR_INTERNAL:
    return "internal error";
  }
  return "unknown status";
}

const char *sdfseg_last_error_message(void) { return g_last_error.c_str(); }

sdfseg_params sdfseg_default_params(void) { return from_params(sdfseg::SigmoidParams{}); }

sdfseg_weights sdfseg_default_weights(void)
{
  const sdfseg::LossWeights w;
  return {w.lmhd, w.rmhd, w.lse, w.ce};
}

sdfseg_loss_options sdfseg_default_loss_options(void)
{
  const sdfseg::LossOptions o;
  return {o.region_reduction == sdfseg::Reduction::mean ? SDFSEG_REDUCTION_MEAN
                                                        : SDFSEG_REDUCTION_SUM,
          o.param_grad_through_gt ? 1 : 0};
}

sdfseg_fit_options sdfseg_default_fit_options(void)
{
  const sdfseg::FitOptions f;
  return {f.steps, f.learning_rate, f.learn_params ? 1 : 0};
}

sdfseg_grad_check_options sdfseg_default_grad_check_options(void)
{
  const sdfseg::GradCheckOptions g;
  return {g.seed, g.size, g.trials, g.step, g.rel_tolerance, g.abs_tolerance, g.small_magnitude};
}

size_t sdfseg_format_real(double value, char *buffer, size_t size)
{
  std::string text;
  try
  {
    text = sdfseg::format_real(value);
  }
  catch (...)
  {
    return 0;
  }
  if (buffer != nullptr && size > text.size())
    std::memcpy(buffer, text.c_str(), text.size() + 1);
  return text.size();
}

void sdfseg_string_free(char *text) { std::free(text); }

// Fields

sdfseg_status sdfseg_field_create(size_t width, size_t height, const double *values,
                                  sdfseg_field **out)
{
  SDFSEG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto data = copy_values(width, height, values);
    *out = new sdfseg_field{sdfseg::ScalarField(width, height, std::move(data))};
  });
}

void sdfseg_field_destroy(sdfseg_field *field) { delete field; }

sdfseg_status sdfseg_field_shape(const sdfseg_field *field, size_t *width, size_t *height)
{
  SDFSEG_REQUIRE(field);
  if (width != nullptr)
    *width = field->value.width();
  if (height != nullptr)
    *height = field->value.height();
  return SDFSEG_OK;
}

const double *sdfseg_field_data(const sdfseg_field *field)
{
  return field == nullptr ? nullptr : field->value.values().data();
}

sdfseg_status sdfseg_field_read(const char *path, sdfseg_field **out)
{
  SDFSEG_REQUIRE(path);
  SDFSEG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new sdfseg_field{sdfseg::read_field(path)}; });
}

sdfseg_status sdfseg_field_write(const sdfseg_field *field, const char *path)
{
  SDFSEG_REQUIRE(field);
  SDFSEG_REQUIRE(path);
  return guarded([&] { sdfseg::write_field(field->value, path); });
}

// Masks

sdfseg_status sdfseg_mask_create(size_t width, size_t height, const uint8_t *values,
                                 sdfseg_mask **out)
{
  SDFSEG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    sdfseg::BinaryMask mask(width, height, copy_values(width, height, values));
    sdfseg::validate_mask(mask);
    *out = new sdfseg_mask{std::move(mask)};
  });
}

void sdfseg_mask_destroy(sdfseg_mask *mask) { delete mask; }

sdfseg_status sdfseg_mask_shape(const sdfseg_mask *mask, size_t *width, size_t *height)
{
  SDFSEG_REQUIRE(mask);
  if (width != nullptr)
    *width = mask->value.width();
  if (height != nullptr)
    *height = mask->value.height();
  return SDFSEG_OK;
}

const uint8_t *sdfseg_mask_data(const sdfseg_mask *mask)
{
  return mask == nullptr ? nullptr : mask->value.values().data();
}

// Label maps

sdfseg_status sdfseg_labels_create(size_t width, size_t height, const uint32_t *values,
                                   sdfseg_labels **out)
{
  SDFSEG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new sdfseg_labels{sdfseg::LabelMap(width, height, copy_values(width, height, values))};
  });
}

void sdfseg_labels_destroy(sdfseg_labels *labels) { delete labels; }

sdfseg_status sdfseg_labels_shape(const sdfseg_labels *labels, size_t *width, size_t *height)
{
  SDFSEG_REQUIRE(labels);
  if (width != nullptr)
    *width = labels->value.width();
  if (height != nullptr)
    *height = labels->value.height();
  return SDFSEG_OK;
}

const uint32_t *sdfseg_labels_data(const sdfseg_labels *labels)
{
  return labels == nullptr ? nullptr : labels->value.values().data();
}

sdfseg_status sdfseg_labels_count(const sdfseg_labels *labels, size_t *count)
{
  SDFSEG_REQUIRE(labels);
  SDFSEG_REQUIRE(count);
  return guarded([&] { *count = sdfseg::label_ids(labels->value).size(); });
}

sdfseg_status sdfseg_labels_read(const char *path, sdfseg_labels **out)
{
  SDFSEG_REQUIRE(path);
  SDFSEG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new sdfseg_labels{sdfseg::read_labels(path)}; });
}

sdfseg_status sdfseg_labels_write(const sdfseg_labels *labels, const char *path,
                                  sdfseg_label_format format)
{
  SDFSEG_REQUIRE(labels);
  SDFSEG_REQUIRE(path);
  return guarded([&] {
    switch (format)
    {
    case SDFSEG_LABELS_BY_EXTENSION:
      sdfseg::write_labels(labels->value, path);
      break;
    case SDFSEG_LABELS_PNG16:
      sdfseg::write_labels(labels->value, path, sdfseg::LabelFormat::png16);
      break;
    case SDFSEG_LABELS_PGM_BINARY:
      sdfseg::write_labels(labels->value, path, sdfseg::LabelFormat::pgm_binary);
      break;
    case SDFSEG_LABELS_PGM_ASCII:
      sdfseg::write_labels(labels->value, path, sdfseg::LabelFormat::pgm_ascii);
      break;
    default:
      throw sdfseg::Error(sdfseg::Errc::invalid_argument, "unknown label format");
    }
  });
}

// Geometry

sdfseg_status sdfseg_distance_transform(const sdfseg_mask *mask, sdfseg_field **out)
{
  SDFSEG_REQUIRE(mask);
  SDFSEG_REQUIRE(out);
  *out = nullptr;
  return guarded(
      [&] { *out = new sdfseg_field{sdfseg::euclidean_distance_transform(mask->value)}; });
}

sdfseg_status sdfseg_signed_distance(const sdfseg_mask *mask, sdfseg_field **out, int *degenerate)
{
  SDFSEG_REQUIRE(mask);
  SDFSEG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto sd = sdfseg::signed_distance(mask->value);
    *out = new sdfseg_field{std::move(sd.phi)};
    if (degenerate != nullptr)
      *degenerate = sd.degenerate ? 1 : 0;
  });
}

sdfseg_status sdfseg_labels_signed_distance(const sdfseg_labels *labels, sdfseg_field **out,
                                            int *degenerate)
{
  SDFSEG_REQUIRE(labels);
  SDFSEG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto binary = sdfseg::labels_to_binary(sdfseg::clean_borders(labels->value));
    auto sd = sdfseg::signed_distance(binary);
    *out = new sdfseg_field{std::move(sd.phi)};
    if (degenerate != nullptr)
      *degenerate = sd.degenerate ? 1 : 0;
  });
}

// Mappings

double sdfseg_sigmoid(double z, sdfseg_params params)
{
  return sdfseg::sigmoid(z, {params.alpha, params.beta});
}

double sdfseg_tanh(double z, sdfseg_params params)
{
  return sdfseg::tanh_ab(z, {params.alpha, params.beta});
}

sdfseg_status sdfseg_soft_boundary(const sdfseg_field *phi, sdfseg_params params,
                                   sdfseg_field **out)
{
  SDFSEG_REQUIRE(phi);
  SDFSEG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new sdfseg_field{sdfseg::soft_boundary(phi->value, to_params(params))};
  });
}

// Losses

sdfseg_status sdfseg_loss_total(const sdfseg_field *phi_pred, const sdfseg_field *phi_gt,
                                const sdfseg_mask *s_gt, sdfseg_params params,
                                sdfseg_weights weights, const sdfseg_loss_options *options,
                                sdfseg_loss_breakdown *out)
{
  SDFSEG_REQUIRE(phi_pred);
  SDFSEG_REQUIRE(phi_gt);
  SDFSEG_REQUIRE(s_gt);
  SDFSEG_REQUIRE(out);
  return guarded([&] {
    *out = from_breakdown(sdfseg::loss_total(phi_pred->value, phi_gt->value, s_gt->value,
                                             to_params(params), to_weights(weights),
                                             to_options(options)));
  });
}

sdfseg_status sdfseg_loss_backward(const sdfseg_field *phi_pred, const sdfseg_field *phi_gt,
                                   const sdfseg_mask *s_gt, sdfseg_params params,
                                   sdfseg_weights weights, const sdfseg_loss_options *options,
                                   sdfseg_loss_breakdown *breakdown, sdfseg_field **d_phi,
                                   double *d_alpha, double *d_beta)
{
  SDFSEG_REQUIRE(phi_pred);
  SDFSEG_REQUIRE(phi_gt);
  SDFSEG_REQUIRE(s_gt);
  SDFSEG_REQUIRE(d_phi);
  *d_phi = nullptr;
  return guarded([&] {
    const auto p = to_params(params);
    const auto w = to_weights(weights);
    const auto o = to_options(options);
    auto grads = sdfseg::loss_backward(phi_pred->value, phi_gt->value, s_gt->value, p, w, o);
    if (breakdown != nullptr)
      *breakdown =
          from_breakdown(sdfseg::loss_total(phi_pred->value, phi_gt->value, s_gt->value, p, w, o));
    *d_phi = new sdfseg_field{std::move(grads.d_phi)};
    if (d_alpha != nullptr)
      *d_alpha = grads.d_alpha;
    if (d_beta != nullptr)
      *d_beta = grads.d_beta;
  });
}

sdfseg_status sdfseg_fit(const sdfseg_field *phi_gt, const sdfseg_mask *s_gt,
                         sdfseg_params params, sdfseg_weights weights,
                         const sdfseg_fit_options *fit, const sdfseg_loss_options *options,
                         sdfseg_field **phi, sdfseg_fit_summary *summary)
{
  SDFSEG_REQUIRE(phi_gt);
  SDFSEG_REQUIRE(s_gt);
  SDFSEG_REQUIRE(phi);
  *phi = nullptr;
  return guarded([&] {
    sdfseg::FitOptions f;
    if (fit != nullptr)
    {
      f.steps = fit->steps;
      f.learning_rate = fit->learning_rate;
      f.learn_params = fit->learn_params != 0;
    }
    auto result = sdfseg::fit_sdf(phi_gt->value, s_gt->value, to_params(params),
                                  to_weights(weights), f, to_options(options));
    if (summary != nullptr)
    {
      summary->initial = from_breakdown(result.initial);
      summary->final = from_breakdown(result.final);
      summary->params = from_params(result.params);
      summary->accepted_steps = result.accepted_steps;
      summary->rejected_steps = result.rejected_steps;
      summary->final_learning_rate = result.final_learning_rate;
    }
    *phi = new sdfseg_field{std::move(result.phi)};
  });
}

sdfseg_status sdfseg_grad_check(const sdfseg_grad_check_options *options, sdfseg_grad_report **out)
{
  SDFSEG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    sdfseg::GradCheckOptions g;
    if (options != nullptr)
    {
      g.seed = options->seed;
      g.size = options->size;
      g.trials = options->trials;
      g.step = options->step;
      g.rel_tolerance = options->rel_tolerance;
      g.abs_tolerance = options->abs_tolerance;
      g.small_magnitude = options->small_magnitude;
    }
    *out = new sdfseg_grad_report{sdfseg::run_grad_check(g)};
  });
}

void sdfseg_grad_report_destroy(sdfseg_grad_report *report) { delete report; }

sdfseg_status sdfseg_grad_report_summary(const sdfseg_grad_report *report,
                                         sdfseg_grad_check_summary *out)
{
  SDFSEG_REQUIRE(report);
  SDFSEG_REQUIRE(out);
  const auto &r = report->value;
  *out = {r.max_rel_error, r.max_abs_error_small, r.checked, r.failures, r.skipped_kinks,
          r.passed() ? 1 : 0};
  return SDFSEG_OK;
}

size_t sdfseg_grad_report_trial_count(const sdfseg_grad_report *report)
{
  return report == nullptr ? 0 : report->value.trials.size();
}

sdfseg_status sdfseg_grad_report_trial(const sdfseg_grad_report *report, size_t index,
                                       sdfseg_grad_check_trial *out)
{
  SDFSEG_REQUIRE(report);
  SDFSEG_REQUIRE(out);
  if (index >= report->value.trials.size())
    return fail(SDFSEG_ERROR_INVALID_ARGUMENT, "trial index out of range");
  const auto &t = report->value.trials[index];
  *out = {from_params(t.params), t.max_rel_error, t.max_abs_error_small, t.failures,
          t.skipped_kinks};
  return SDFSEG_OK;
}

// Instances

sdfseg_status sdfseg_clean_borders(const sdfseg_labels *labels, sdfseg_labels **out)
{
  SDFSEG_REQUIRE(labels);
  SDFSEG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new sdfseg_labels{sdfseg::clean_borders(labels->value)}; });
}

sdfseg_status sdfseg_labels_to_binary(const sdfseg_labels *labels, sdfseg_mask **out)
{
  SDFSEG_REQUIRE(labels);
  SDFSEG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new sdfseg_mask{sdfseg::labels_to_binary(labels->value)}; });
}

sdfseg_status sdfseg_instance_mask(const sdfseg_labels *labels, uint32_t label, sdfseg_mask **out)
{
  SDFSEG_REQUIRE(labels);
  SDFSEG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    if (label == 0)
      throw sdfseg::Error(sdfseg::Errc::invalid_argument, "label 0 is background");
    const auto &src = labels->value;
    std::vector<uint8_t> data(src.size());
    std::transform(src.begin(), src.end(), data.begin(),
                   [label](uint32_t v) { return static_cast<uint8_t>(v == label); });
    *out = new sdfseg_mask{sdfseg::BinaryMask(src.width(), src.height(), std::move(data))};
  });
}

sdfseg_status sdfseg_threshold_probability(const sdfseg_field *phi, sdfseg_params params,
                                           sdfseg_mask **out)
{
  SDFSEG_REQUIRE(phi);
  SDFSEG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new sdfseg_mask{sdfseg::threshold_probability(phi->value, to_params(params))};
  });
}

sdfseg_status sdfseg_connected_components(const sdfseg_mask *mask, sdfseg_labels **out,
                                          size_t *count)
{
  SDFSEG_REQUIRE(mask);
  SDFSEG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto labels = sdfseg::connected_components(mask->value);
    if (count != nullptr)
      *count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
    *out = new sdfseg_labels{std::move(labels)};
  });
}

// Metrics

sdfseg_status sdfseg_mask_distance(const sdfseg_mask *a, const sdfseg_mask *b,
                                   sdfseg_distance_mode mode, double *out)
{
  SDFSEG_REQUIRE(a);
  SDFSEG_REQUIRE(b);
  SDFSEG_REQUIRE(out);
  return guarded([&] {
    sdfseg::require_same_shape(a->value, b->value, "mask distance");
    if (mode == SDFSEG_DISTANCE_CMH)
    {
      *out = sdfseg::cmh(a->value, b->value);
      return;
    }
    *out = point_distance(sdfseg::foreground_points(a->value),
                          sdfseg::foreground_points(b->value), mode);
  });
}

sdfseg_status sdfseg_point_distance(const int32_t *a, size_t a_count, const int32_t *b,
                                    size_t b_count, sdfseg_distance_mode mode, double *out)
{
  SDFSEG_REQUIRE(out);
  if ((a == nullptr && a_count > 0) || (b == nullptr && b_count > 0))
    return fail(SDFSEG_ERROR_NULL_POINTER, "point array is NULL");
  return guarded([&] { *out = point_distance(to_points(a, a_count), to_points(b, b_count), mode); });
}

sdfseg_status sdfseg_seg_score(const sdfseg_labels *gt, const sdfseg_labels *pred,
                               sdfseg_seg_rule rule, sdfseg_seg_report **out)
{
  SDFSEG_REQUIRE(gt);
  SDFSEG_REQUIRE(pred);
  SDFSEG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    sdfseg::SegMatchRule r;
    switch (rule)
    {
    case SDFSEG_SEG_OVERLAP_HALF_GT:
      r = sdfseg::SegMatchRule::overlap_half_gt;
      break;
    case SDFSEG_SEG_JACCARD_HALF:
      r = sdfseg::SegMatchRule::jaccard_half;
      break;
    default:
      throw sdfseg::Error(sdfseg::Errc::invalid_argument, "unknown SEG rule");
    }
    *out = new sdfseg_seg_report{sdfseg::seg_score(gt->value, pred->value, r)};
  });
}

void sdfseg_seg_report_destroy(sdfseg_seg_report *report) { delete report; }

size_t sdfseg_seg_report_size(const sdfseg_seg_report *report)
{
  return report == nullptr ? 0 : report->value.per_object.size();
}

double sdfseg_seg_report_mean(const sdfseg_seg_report *report)
{
  return report == nullptr ? 0.0 : report->value.seg_mean;
}

sdfseg_status sdfseg_seg_report_entry(const sdfseg_seg_report *report, size_t index,
                                      uint32_t *gt_label, int64_t *pred_label, double *jaccard)
{
  SDFSEG_REQUIRE(report);
  if (index >= report->value.per_object.size())
    return fail(SDFSEG_ERROR_INVALID_ARGUMENT, "entry index out of range");
  const auto &e = report->value.per_object[index];
  if (gt_label != nullptr)
    *gt_label = e.gt_label;
  if (pred_label != nullptr)
    *pred_label = e.pred_label ? static_cast<int64_t>(*e.pred_label) : -1;
  if (jaccard != nullptr)
    *jaccard = e.jaccard;
  return SDFSEG_OK;
}

sdfseg_status sdfseg_seg_report_csv(const sdfseg_seg_report *report, char **out)
{
  SDFSEG_REQUIRE(report);
  SDFSEG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = duplicate(sdfseg::seg_report_csv(report->value)); });
}

sdfseg_status sdfseg_seg_report_json(const sdfseg_seg_report *report, char **out)
{
  SDFSEG_REQUIRE(report);
  SDFSEG_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = duplicate(sdfseg::seg_report_json(report->value)); });
}

} // extern "C"
