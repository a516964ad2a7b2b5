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

#include "sdfseg/metrics.hpp"

#include "sdfseg/geometry.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

namespace sdfseg
{

namespace
{

constexpr std::int64_t kMaxRasterPixels = std::int64_t{1} << 24;

void validate_point_set(const PointSet &points, const char *name)
{
  if (points.empty())
    throw Error(Errc::empty_set, std::string(name) + " point set is empty");
  PointSet sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(Errc::invalid_argument, std::string(name) + " point set contains duplicates");
}

std::int64_t squared_gap(const Point &a, const Point &b)
{
  const std::int64_t dr = std::int64_t{a.row} - b.row;
  const std::int64_t dc = std::int64_t{a.col} - b.col;
  return dr * dr + dc * dc;
}

/// Squared distance from every point of `from` to its nearest point of `to`.
/// Rasterizes both sets into their joint bounding box and runs the exact
/// distance transform; very sparse sets fall back to a direct scan.
std::vector<std::int64_t> nearest_squared(const PointSet &from, const PointSet &to)
{
  std::int64_t r0 = std::numeric_limits<std::int64_t>::max();
  std::int64_t c0 = r0;
  std::int64_t r1 = std::numeric_limits<std::int64_t>::min();
  std::int64_t c1 = r1;
  for (const auto *set : {&from, &to})
  {
    for (const auto &p : *set)
    {
      r0 = std::min<std::int64_t>(r0, p.row);
      r1 = std::max<std::int64_t>(r1, p.row);
      c0 = std::min<std::int64_t>(c0, p.col);
      c1 = std::max<std::int64_t>(c1, p.col);
    }
  }
  const std::int64_t height = r1 - r0 + 1;
  const std::int64_t width = c1 - c0 + 1;

  std::vector<std::int64_t> out(from.size());
  if (height * width > kMaxRasterPixels)
  {
    for (std::size_t i = 0; i < from.size(); ++i)
    {
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      for (const auto &q : to)
        best = std::min(best, squared_gap(from[i], q));
      out[i] = best;
    }
    return out;
  }

  BinaryMask raster(static_cast<std::size_t>(width), static_cast<std::size_t>(height), 0);
  for (const auto &q : to)
    raster(static_cast<std::size_t>(q.row - r0), static_cast<std::size_t>(q.col - c0)) = 1;
  const auto dist = squared_distance_transform(raster, 1);
  for (std::size_t i = 0; i < from.size(); ++i)
    out[i] = dist(static_cast<std::size_t>(from[i].row - r0),
                  static_cast<std::size_t>(from[i].col - c0));
  return out;
}

double sum_of_roots(const std::vector<std::int64_t> &squared)
{
  double sum = 0.0;
  for (const auto d : squared)
    sum += std::sqrt(static_cast<double>(d));
  return sum;
}

void require_non_degenerate(const BinaryMask &mask, const char *name)
{
  const auto ones = static_cast<std::size_t>(std::count(mask.begin(), mask.end(), 1));
  if (ones == 0 || ones == mask.size())
    throw Error(Errc::degenerate_mask, std::string(name) + " mask holds a single class");
}

} // namespace

PointSet foreground_points(const BinaryMask &mask)
{
  PointSet out;
  for (std::size_t r = 0; r < mask.height(); ++r)
  {
    for (std::size_t c = 0; c < mask.width(); ++c)
    {
      if (mask(r, c) != 0)
        out.push_back({static_cast<std::int32_t>(r), static_cast<std::int32_t>(c)});
    }
  }
  return out;
}

PointSet boundary_points(const BinaryMask &mask)
{
  PointSet out;
  for (std::size_t r = 0; r < mask.height(); ++r)
  {
    for (std::size_t c = 0; c < mask.width(); ++c)
    {
      if (mask(r, c) == 0)
        continue;
      const bool edge = (r > 0 && mask(r - 1, c) == 0) ||
                        (r + 1 < mask.height() && mask(r + 1, c) == 0) ||
                        (c > 0 && mask(r, c - 1) == 0) ||
                        (c + 1 < mask.width() && mask(r, c + 1) == 0);
      if (edge)
        out.push_back({static_cast<std::int32_t>(r), static_cast<std::int32_t>(c)});
    }
  }
  return out;
}

double directed_hausdorff(const PointSet &a, const PointSet &b)
{
  validate_point_set(a, "first");
  validate_point_set(b, "second");
  const auto d = nearest_squared(a, b);
  return std::sqrt(static_cast<double>(*std::max_element(d.begin(), d.end())));
}

double hausdorff(const PointSet &a, const PointSet &b)
{
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double mhd(const PointSet &a, const PointSet &b, bool normalized)
{
  validate_point_set(a, "first");
  validate_point_set(b, "second");
  double forward = sum_of_roots(nearest_squared(a, b));
  double backward = sum_of_roots(nearest_squared(b, a));
  if (normalized)
  {
    forward /= static_cast<double>(a.size());
    backward /= static_cast<double>(b.size());
  }
  return forward + backward;
}

double cmh(const BinaryMask &s_gt, const BinaryMask &s_pred)
{
  require_same_shape(s_gt, s_pred, "cmh");
  validate_mask(s_gt);
  validate_mask(s_pred);
  require_non_degenerate(s_gt, "ground-truth");
  require_non_degenerate(s_pred, "predicted");

  const auto phi_gt = signed_distance(s_gt).phi;
  const auto phi_pred = signed_distance(s_pred).phi;
  double sum = 0.0;
  for (const auto &p : boundary_points(s_gt))
    sum += std::abs(phi_pred(static_cast<std::size_t>(p.row), static_cast<std::size_t>(p.col)));
  for (const auto &p : boundary_points(s_pred))
    sum += std::abs(phi_gt(static_cast<std::size_t>(p.row), static_cast<std::size_t>(p.col)));
  return sum;
}

SegReport seg_score(const LabelMap &gt, const LabelMap &pred, SegMatchRule rule)
{
  require_same_shape(gt, pred, "SEG ground truth vs prediction");

  std::map<std::uint32_t, std::uint64_t> gt_size;
  std::map<std::uint32_t, std::uint64_t> pred_size;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> overlap;
  for (std::size_t i = 0; i < gt.size(); ++i)
  {
    if (gt[i] != 0)
      ++gt_size[gt[i]];
    if (pred[i] != 0)
      ++pred_size[pred[i]];
    if (gt[i] != 0 && pred[i] != 0)
      ++overlap[{gt[i], pred[i]}];
  }
  if (gt_size.empty())
    throw Error(Errc::empty_ground_truth, "SEG is undefined without ground-truth objects");

  SegReport report;
  double sum = 0.0;
  for (const auto &[label, size] : gt_size)
  {
    SegEntry entry;
    entry.gt_label = label;
    for (auto it = overlap.lower_bound({label, 0}); it != overlap.end() && it->first.first == label;
         ++it)
    {
      const std::uint32_t candidate = it->first.second;
      const std::uint64_t inter = it->second;
      const std::uint64_t uni = size + pred_size[candidate] - inter;
      const bool match = rule == SegMatchRule::overlap_half_gt ? 2 * inter > size : 2 * inter > uni;
      if (!match)
        continue;
      if (entry.pred_label)
        throw std::logic_error("SEG: more than one prediction exceeds half of a GT object");
      entry.pred_label = candidate;
      entry.jaccard = static_cast<double>(inter) / static_cast<double>(uni);
    }
    sum += entry.jaccard;
    report.per_object.push_back(entry);
  }
  report.seg_mean = sum / static_cast<double>(report.per_object.size());
  return report;
}

std::string format_real(double value)
{
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  std::string out(buf, res.ptr);
  if (out.find_first_of(".en") == std::string::npos)
    out += ".0";
  return out;
}

std::string seg_report_csv(const SegReport &report)
{
  std::string out = "gt_label,pred_label,jaccard\n";
  for (const auto &e : report.per_object)
  {
    out += std::to_string(e.gt_label);
    out += ',';
    if (e.pred_label)
      out += std::to_string(*e.pred_label);
    out += ',';
    out += format_real(e.jaccard);
    out += '\n';
  }
  out += "SEG," + format_real(report.seg_mean) + "\n";
  return out;
}

std::string seg_report_json(const SegReport &report)
{
  nlohmann::ordered_json objects = nlohmann::ordered_json::array();
  for (const auto &e : report.per_object)
  {
    nlohmann::ordered_json item;
    item["gt_label"] = e.gt_label;
    item["pred_label"] = e.pred_label ? nlohmann::ordered_json(*e.pred_label) : nullptr;
    item["jaccard"] = e.jaccard;
    objects.push_back(std::move(item));
  }
  nlohmann::ordered_json doc;
  doc["per_object"] = std::move(objects);
  doc["seg_mean"] = report.seg_mean;
  return doc.dump(2) + "\n";
}

} // namespace sdfseg
