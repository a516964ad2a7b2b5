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

/*
 * C interface of libsdfseg.
 *
 * All objects are opaque handles created by sdfseg_*_create / read / compute
 * functions and released with the matching *_destroy. Every fallible call
 * returns an sdfseg_status; on failure the output handles are set to NULL and
 * sdfseg_last_error_message() describes the problem (per thread). Inputs are
 * never modified. Grids are row-major, element (row, col) at row * width + col.
 */

#ifndef SDFSEG_H
#define SDFSEG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SDFSEG_API __declspec(dllexport)
#else
#define SDFSEG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sdfseg_status
{
  SDFSEG_OK = 0,
  SDFSEG_ERROR_INVALID_ARGUMENT = 1,
  SDFSEG_ERROR_DIMENSION_MISMATCH = 2,
  SDFSEG_ERROR_DEGENERATE = 3,
  SDFSEG_ERROR_SEPARATION = 4,
  SDFSEG_ERROR_FORMAT = 5,
  SDFSEG_ERROR_IO = 6,
  SDFSEG_ERROR_EMPTY_SET = 7,
  SDFSEG_ERROR_EMPTY_GROUND_TRUTH = 8,
  SDFSEG_ERROR_NULL_POINTER = 9,
  SDFSEG_ERROR_OUT_OF_MEMORY = 10,
  SDFSEG_ERROR_INTERNAL = 11
} sdfseg_status;

typedef struct sdfseg_field sdfseg_field;           /* 64-bit real grid */
typedef struct sdfseg_mask sdfseg_mask;             /* {0,1} grid */
typedef struct sdfseg_labels sdfseg_labels;         /* instance ids, 0 = background */
typedef struct sdfseg_seg_report sdfseg_seg_report; /* SEG evaluation result */
typedef struct sdfseg_grad_report sdfseg_grad_report;

typedef struct sdfseg_params
{
  double alpha;
  double beta;
} sdfseg_params;

typedef struct sdfseg_weights
{
  double lmhd;
  double rmhd;
  double lse;
  double ce;
} sdfseg_weights;

typedef enum sdfseg_reduction
{
  SDFSEG_REDUCTION_SUM = 0,
  SDFSEG_REDUCTION_MEAN = 1
} sdfseg_reduction;

typedef struct sdfseg_loss_options
{
  sdfseg_reduction region_reduction; /* LSE and CE; boundary terms always sum */
  int param_grad_through_gt;         /* nonzero: d/d(alpha,beta) includes GT paths */
} sdfseg_loss_options;

typedef struct sdfseg_loss_breakdown
{
  double lmhd;
  double rmhd;
  double lse;
  double ce;
  double total;
} sdfseg_loss_breakdown;

typedef struct sdfseg_fit_options
{
  uint64_t steps;
  double learning_rate;
  int learn_params;
} sdfseg_fit_options;

typedef struct sdfseg_fit_summary
{
  sdfseg_loss_breakdown initial;
  sdfseg_loss_breakdown final;
  sdfseg_params params;
  uint64_t accepted_steps;
  uint64_t rejected_steps;
  double final_learning_rate;
} sdfseg_fit_summary;

typedef struct sdfseg_grad_check_options
{
  uint64_t seed;
  uint64_t size;
  uint64_t trials;
  double step;
  double rel_tolerance;
  double abs_tolerance;
  double small_magnitude;
} sdfseg_grad_check_options;

typedef struct sdfseg_grad_check_trial
{
  sdfseg_params params;
  double max_rel_error;
  double max_abs_error_small;
  uint64_t failures;
  uint64_t skipped_kinks;
} sdfseg_grad_check_trial;

typedef struct sdfseg_grad_check_summary
{
  double max_rel_error;
  double max_abs_error_small;
  uint64_t checked;
  uint64_t failures;
  uint64_t skipped_kinks;
  int passed;
} sdfseg_grad_check_summary;

typedef enum sdfseg_distance_mode
{
  SDFSEG_DISTANCE_HAUSDORFF = 0,
  SDFSEG_DISTANCE_MHD = 1,
  SDFSEG_DISTANCE_MHD_NORMALIZED = 2,
  SDFSEG_DISTANCE_CMH = 3
} sdfseg_distance_mode;

typedef enum sdfseg_seg_rule
{
  SDFSEG_SEG_OVERLAP_HALF_GT = 0, /* |R n S| > 0.5 |R| */
  SDFSEG_SEG_JACCARD_HALF = 1     /* |R n S| / |R u S| > 0.5 */
} sdfseg_seg_rule;

typedef enum sdfseg_label_format
{
  SDFSEG_LABELS_BY_EXTENSION = 0, /* .png -> PNG, otherwise binary PGM */
  SDFSEG_LABELS_PNG16 = 1,
  SDFSEG_LABELS_PGM_BINARY = 2,
  SDFSEG_LABELS_PGM_ASCII = 3
} sdfseg_label_format;

/* ---- library ------------------------------------------------------------ */

SDFSEG_API const char *sdfseg_version(void);
SDFSEG_API const char *sdfseg_status_string(sdfseg_status status);
/* Message of the last failed call on this thread; "" if none. */
SDFSEG_API const char *sdfseg_last_error_message(void);

SDFSEG_API sdfseg_params sdfseg_default_params(void);
SDFSEG_API sdfseg_weights sdfseg_default_weights(void);
SDFSEG_API sdfseg_loss_options sdfseg_default_loss_options(void);
SDFSEG_API sdfseg_fit_options sdfseg_default_fit_options(void);
SDFSEG_API sdfseg_grad_check_options sdfseg_default_grad_check_options(void);

/* Shortest round-trip decimal text of value, always with a fraction or
 * exponent. Returns the length written (excluding NUL), or the required
 * buffer size minus one if `size` is too small. */
SDFSEG_API size_t sdfseg_format_real(double value, char *buffer, size_t size);

/* Frees strings returned by this library. */
SDFSEG_API void sdfseg_string_free(char *text);

/* ---- fields ------------------------------------------------------------- */

/* values may be NULL for an all-zero field. */
SDFSEG_API sdfseg_status sdfseg_field_create(size_t width, size_t height, const double *values,
                                             sdfseg_field **out);
SDFSEG_API void sdfseg_field_destroy(sdfseg_field *field);
SDFSEG_API sdfseg_status sdfseg_field_shape(const sdfseg_field *field, size_t *width,
                                            size_t *height);
SDFSEG_API const double *sdfseg_field_data(const sdfseg_field *field);
SDFSEG_API sdfseg_status sdfseg_field_read(const char *path, sdfseg_field **out);
SDFSEG_API sdfseg_status sdfseg_field_write(const sdfseg_field *field, const char *path);

/* ---- masks -------------------------------------------------------------- */

SDFSEG_API sdfseg_status sdfseg_mask_create(size_t width, size_t height, const uint8_t *values,
                                            sdfseg_mask **out);
SDFSEG_API void sdfseg_mask_destroy(sdfseg_mask *mask);
SDFSEG_API sdfseg_status sdfseg_mask_shape(const sdfseg_mask *mask, size_t *width, size_t *height);
SDFSEG_API const uint8_t *sdfseg_mask_data(const sdfseg_mask *mask);

/* ---- label maps --------------------------------------------------------- */

SDFSEG_API sdfseg_status sdfseg_labels_create(size_t width, size_t height, const uint32_t *values,
                                              sdfseg_labels **out);
SDFSEG_API void sdfseg_labels_destroy(sdfseg_labels *labels);
SDFSEG_API sdfseg_status sdfseg_labels_shape(const sdfseg_labels *labels, size_t *width,
                                             size_t *height);
SDFSEG_API const uint32_t *sdfseg_labels_data(const sdfseg_labels *labels);
/* Number of distinct nonzero ids. */
SDFSEG_API sdfseg_status sdfseg_labels_count(const sdfseg_labels *labels, size_t *count);
SDFSEG_API sdfseg_status sdfseg_labels_read(const char *path, sdfseg_labels **out);
SDFSEG_API sdfseg_status sdfseg_labels_write(const sdfseg_labels *labels, const char *path,
                                             sdfseg_label_format format);

/* ---- geometry ----------------------------------------------------------- */

/* Distance to the nearest background pixel; all-foreground is DEGENERATE. */
SDFSEG_API sdfseg_status sdfseg_distance_transform(const sdfseg_mask *mask, sdfseg_field **out);
/* degenerate (nullable) receives 1 for single-class masks (constant field). */
SDFSEG_API sdfseg_status sdfseg_signed_distance(const sdfseg_mask *mask, sdfseg_field **out,
                                                int *degenerate);
/* clean_borders -> labels_to_binary -> signed_distance. */
SDFSEG_API sdfseg_status sdfseg_labels_signed_distance(const sdfseg_labels *labels,
                                                       sdfseg_field **out, int *degenerate);

/* ---- mappings ----------------------------------------------------------- */

SDFSEG_API double sdfseg_sigmoid(double z, sdfseg_params params);
SDFSEG_API double sdfseg_tanh(double z, sdfseg_params params);
SDFSEG_API sdfseg_status sdfseg_soft_boundary(const sdfseg_field *phi, sdfseg_params params,
                                              sdfseg_field **out);

/* ---- losses ------------------------------------------------------------- */

/* options may be NULL for defaults. */
SDFSEG_API sdfseg_status sdfseg_loss_total(const sdfseg_field *phi_pred,
                                           const sdfseg_field *phi_gt, const sdfseg_mask *s_gt,
                                           sdfseg_params params, sdfseg_weights weights,
                                           const sdfseg_loss_options *options,
                                           sdfseg_loss_breakdown *out);

/* breakdown (nullable) receives the forward value of the same call. */
SDFSEG_API sdfseg_status sdfseg_loss_backward(const sdfseg_field *phi_pred,
                                              const sdfseg_field *phi_gt, const sdfseg_mask *s_gt,
                                              sdfseg_params params, sdfseg_weights weights,
                                              const sdfseg_loss_options *options,
                                              sdfseg_loss_breakdown *breakdown,
                                              sdfseg_field **d_phi, double *d_alpha,
                                              double *d_beta);

SDFSEG_API sdfseg_status sdfseg_fit(const sdfseg_field *phi_gt, const sdfseg_mask *s_gt,
                                    sdfseg_params params, sdfseg_weights weights,
                                    const sdfseg_fit_options *fit,
                                    const sdfseg_loss_options *options, sdfseg_field **phi,
                                    sdfseg_fit_summary *summary);

SDFSEG_API sdfseg_status sdfseg_grad_check(const sdfseg_grad_check_options *options,
                                           sdfseg_grad_report **out);
SDFSEG_API void sdfseg_grad_report_destroy(sdfseg_grad_report *report);
SDFSEG_API sdfseg_status sdfseg_grad_report_summary(const sdfseg_grad_report *report,
                                                    sdfseg_grad_check_summary *out);
SDFSEG_API size_t sdfseg_grad_report_trial_count(const sdfseg_grad_report *report);
SDFSEG_API sdfseg_status sdfseg_grad_report_trial(const sdfseg_grad_report *report, size_t index,
                                                  sdfseg_grad_check_trial *out);

/* ---- instances ---------------------------------------------------------- */

SDFSEG_API sdfseg_status sdfseg_clean_borders(const sdfseg_labels *labels, sdfseg_labels **out);
SDFSEG_API sdfseg_status sdfseg_labels_to_binary(const sdfseg_labels *labels, sdfseg_mask **out);
SDFSEG_API sdfseg_status sdfseg_instance_mask(const sdfseg_labels *labels, uint32_t label,
                                              sdfseg_mask **out);
SDFSEG_API sdfseg_status sdfseg_threshold_probability(const sdfseg_field *phi,
                                                      sdfseg_params params, sdfseg_mask **out);
/* count (nullable) receives the number of components. */
SDFSEG_API sdfseg_status sdfseg_connected_components(const sdfseg_mask *mask,
                                                     sdfseg_labels **out, size_t *count);

/* ---- reference metrics -------------------------------------------------- */

/* Distance between the foregrounds of two masks. */
SDFSEG_API sdfseg_status sdfseg_mask_distance(const sdfseg_mask *a, const sdfseg_mask *b,
                                              sdfseg_distance_mode mode, double *out);
/* Point sets as interleaved (row, col) pairs; CMH is not defined here. */
SDFSEG_API sdfseg_status sdfseg_point_distance(const int32_t *a, size_t a_count,
                                               const int32_t *b, size_t b_count,
                                               sdfseg_distance_mode mode, double *out);

SDFSEG_API sdfseg_status sdfseg_seg_score(const sdfseg_labels *gt, const sdfseg_labels *pred,
                                          sdfseg_seg_rule rule, sdfseg_seg_report **out);
SDFSEG_API void sdfseg_seg_report_destroy(sdfseg_seg_report *report);
SDFSEG_API size_t sdfseg_seg_report_size(const sdfseg_seg_report *report);
SDFSEG_API double sdfseg_seg_report_mean(const sdfseg_seg_report *report);
/* pred_label receives -1 when the object is unmatched. */
SDFSEG_API sdfseg_status sdfseg_seg_report_entry(const sdfseg_seg_report *report, size_t index,
                                                 uint32_t *gt_label, int64_t *pred_label,
                                                 double *jaccard);
/* Strings are released with sdfseg_string_free. */
SDFSEG_API sdfseg_status sdfseg_seg_report_csv(const sdfseg_seg_report *report, char **out);
SDFSEG_API sdfseg_status sdfseg_seg_report_json(const sdfseg_seg_report *report, char **out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SDFSEG_H */
