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

#ifndef SDFSEG_METRICS_HPP
#define SDFSEG_METRICS_HPP

#include "sdfseg/grid.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sdfseg
{

struct Point
{
  std::int32_t row = 0;
  std::int32_t col = 0;

  friend bool operator==(const Point &, const Point &) = default;
  friend auto operator<=>(const Point &, const Point &) = default;
};

using PointSet = std::vector<Point>;

/// Foreground pixel coordinates in row-major order.
PointSet foreground_points(const BinaryMask &mask);

/// Foreground pixels with at least one in-image background 4-neighbor.
PointSet boundary_points(const BinaryMask &mask);

/// sup over a of inf over b of the Euclidean distance.
double directed_hausdorff(const PointSet &a, const PointSet &b);

double hausdorff(const PointSet &a, const PointSet &b);

/// Sum over a of the distance to b plus the sum over b of the distance to a.
/// With `normalized`, each sum is divided by its set size instead.
double mhd(const PointSet &a, const PointSet &b, bool normalized = false);

/// Discrete boundary-integral form: |phi_pred| summed over the GT boundary
/// plus |phi_gt| summed over the predicted boundary.
double cmh(const BinaryMask &s_gt, const BinaryMask &s_pred);

enum class SegMatchRule
{
  /// |R n S| > 0.5 |R|
  overlap_half_gt,
  /// |R n S| / |R u S| > 0.5
  jaccard_half,
};

struct SegEntry
{
  std::uint32_t gt_label = 0;
  std::optional<std::uint32_t> pred_label;
  double jaccard = 0.0;
};

struct SegReport
{
  /// Ascending GT label.
  std::vector<SegEntry> per_object;
  double seg_mean = 0.0;
};

SegReport seg_score(const LabelMap &gt, const LabelMap &pred,
                    SegMatchRule rule = SegMatchRule::overlap_half_gt);

/// `gt_label,pred_label,jaccard` rows then `SEG,<mean>`; unmatched objects
/// leave pred_label empty. Newline-terminated.
std::string seg_report_csv(const SegReport &report);
std::string seg_report_json(const SegReport &report);

/// Shortest round-trip decimal form, always with a fractional part or an
/// exponent ("1.0", "0.5", "1e-05").
std::string format_real(double value);

} // namespace sdfseg

#endif // SDFSEG_METRICS_HPP
