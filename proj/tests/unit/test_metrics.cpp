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

#include "oracles.hpp"

#include "sdfseg/error.hpp"
#include "sdfseg/metrics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace sdfseg;

namespace
{

Errc error_of(auto &&f)
{
  try
  {
    f();
  }
  catch (const Error &e)
  {
    return e.code();
  }
  return Errc{};
}

LabelMap labels(std::size_t w, std::size_t h, std::vector<std::uint32_t> v)
{
  return LabelMap(w, h, std::move(v));
}

} // namespace

TEST(Hausdorff, Examples)
{
  const PointSet a{{0, 0}}, b{{3, 4}};
  EXPECT_EQ(hausdorff(a, b), 5.0);
  EXPECT_EQ(mhd(a, b), 10.0);
  EXPECT_EQ(mhd(a, b, true), 10.0);
  const PointSet s{{1, 1}, {2, 5}, {-3, 7}};
  EXPECT_EQ(hausdorff(s, s), 0.0);
  EXPECT_EQ(mhd(s, s), 0.0);
}

TEST(Hausdorff, DirectedIsAsymmetric)
{
  const PointSet a{{0, 0}}, b{{0, 0}, {0, 10}};
  EXPECT_EQ(directed_hausdorff(a, b), 0.0);
  EXPECT_EQ(directed_hausdorff(b, a), 10.0);
  EXPECT_EQ(hausdorff(a, b), 10.0);
}

TEST(Hausdorff, MatchesBruteForce)
{
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial)
  {
    const int span = 5 + trial * 3;
    const auto a = oracle::random_points(rng, 1 + trial % 50, -span, span);
    const auto b = oracle::random_points(rng, 1 + (trial * 7) % 60, -span / 2, span);
    EXPECT_EQ(hausdorff(a, b), oracle::brute_hausdorff(a, b));
    EXPECT_EQ(directed_hausdorff(a, b), oracle::brute_directed(a, b));
    EXPECT_EQ(mhd(a, b), oracle::brute_mhd(a, b));
  }
}

TEST(Hausdorff, FarApartSetsUseDirectScan)
{
  // Bounding box far beyond the raster limit.
  const PointSet a{{0, 0}, {1, 1}}, b{{100000, 100000}, {-100000, 5}};
  EXPECT_EQ(hausdorff(a, b), oracle::brute_hausdorff(a, b));
  EXPECT_EQ(mhd(a, b), oracle::brute_mhd(a, b));
}

TEST(Hausdorff, NormalizedMhdIsMeanPlusMean)
{
  const PointSet a{{0, 0}, {0, 1}}, b{{0, 4}};
  // forward: 4 + 3 over 2 points, backward: 3 over 1 point.
  EXPECT_EQ(mhd(a, b), 10.0);
  EXPECT_EQ(mhd(a, b, true), 3.5 + 3.0);
}

TEST(Hausdorff, Validation)
{
  const PointSet a{{0, 0}};
  EXPECT_EQ(error_of([&] { hausdorff({}, a); }), Errc::empty_set);
  EXPECT_EQ(error_of([&] { mhd(a, {}); }), Errc::empty_set);
  EXPECT_EQ(error_of([&] { hausdorff({{1, 1}, {1, 1}}, a); }), Errc::invalid_argument);
}

TEST(BoundaryPoints, FourNeighborRule)
{
  BinaryMask m(5, 5, 0);
  for (std::size_t r = 1; r < 4; ++r)
    for (std::size_t c = 1; c < 4; ++c)
      m(r, c) = 1;
  const auto b = boundary_points(m);
  EXPECT_EQ(b.size(), 8u);
  EXPECT_EQ(std::find(b.begin(), b.end(), Point{2, 2}), b.end());
  // The image edge is not background.
  const auto full = boundary_points(BinaryMask(4, 3, 1));
  EXPECT_TRUE(full.empty());
}

TEST(Cmh, IdentityCountsBoundary)
{
  const auto d = oracle::disc(24, 24, 11.5, 11.5, 7.0);
  EXPECT_EQ(cmh(d, d), double(boundary_points(d).size()));
}

TEST(Cmh, RectangleVersusDilation)
{
  BinaryMask rect(8, 7, 0), dilated(8, 7, 0);
  for (std::size_t r = 2; r <= 4; ++r)
    for (std::size_t c = 2; c <= 5; ++c)
      rect(r, c) = 1;
  for (std::size_t r = 1; r <= 5; ++r)
    for (std::size_t c = 1; c <= 6; ++c)
      dilated(r, c) = 1;
  // Ten GT boundary pixels two steps inside the dilation contribute 1.5 each.
  // Of the 18 dilated boundary pixels, 14 touch the rectangle edge-on (0.5)
  // and 4 corners see it diagonally (sqrt 2 - 0.5).
  const double want = 10 * 1.5 + 14 * 0.5 + 4 * (std::sqrt(2.0) - 0.5);
  EXPECT_DOUBLE_EQ(cmh(rect, dilated), want);
  EXPECT_DOUBLE_EQ(want, 20.0 + 4.0 * std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(cmh(dilated, rect), want);
}

TEST(Cmh, GrowsWithTranslation)
{
  const auto gt = oracle::disc(40, 40, 19.5, 19.5, 9.0);
  const double one = cmh(gt, oracle::disc(40, 40, 19.5, 20.5, 9.0));
  const double three = cmh(gt, oracle::disc(40, 40, 19.5, 22.5, 9.0));
  EXPECT_GT(three, one);
}

TEST(Cmh, Validation)
{
  const BinaryMask a(4, 4, 0), b(4, 4, 1);
  BinaryMask ok(4, 4, 0);
  ok(1, 1) = 1;
  EXPECT_EQ(error_of([&] { cmh(a, ok); }), Errc::degenerate_mask);
  EXPECT_EQ(error_of([&] { cmh(ok, b); }), Errc::degenerate_mask);
  EXPECT_EQ(error_of([&] { cmh(ok, BinaryMask(3, 4, 0)); }), Errc::dimension_mismatch);
}

TEST(Seg, Identity)
{
  const auto gt = labels(4, 2, {1, 1, 0, 2, 0, 3, 3, 2});
  const auto r = seg_score(gt, gt);
  EXPECT_EQ(r.seg_mean, 1.0);
  ASSERT_EQ(r.per_object.size(), 3u);
  EXPECT_EQ(seg_report_csv(r), "gt_label,pred_label,jaccard\n1,1,1.0\n2,2,1.0\n3,3,1.0\nSEG,1.0\n");
}

TEST(Seg, HalfCoverageIsNotAMatch)
{
  const auto gt = labels(4, 1, {1, 1, 1, 1});
  const auto pred = labels(4, 1, {5, 5, 0, 0});
  const auto r = seg_score(gt, pred);
  EXPECT_EQ(r.seg_mean, 0.0);
  EXPECT_FALSE(r.per_object[0].pred_label.has_value());
  EXPECT_EQ(seg_report_csv(r), "gt_label,pred_label,jaccard\n1,,0.0\nSEG,0.0\n");
}

TEST(Seg, JaccardHalf)
{
  // GT 4 px, prediction 5 px, 3 shared.
  const auto gt = labels(5, 2, {1, 1, 0, 0, 0, 1, 1, 0, 0, 0});
  const auto pred = labels(5, 2, {2, 2, 2, 0, 0, 2, 0, 0, 2, 0});
  const auto r = seg_score(gt, pred);
  EXPECT_EQ(r.seg_mean, 0.5);
  EXPECT_EQ(r.per_object[0].pred_label, 2u);
}

TEST(Seg, FalsePositivesDoNotCount)
{
  const auto gt = labels(4, 1, {1, 1, 0, 0});
  const auto pred = labels(4, 1, {1, 1, 2, 2});
  EXPECT_EQ(seg_score(gt, pred).seg_mean, 1.0);
}

TEST(Seg, JaccardRule)
{
  // Overlap 3 of 4 GT pixels but Jaccard 3/6: matched under the default rule
  // only.
  const auto gt = labels(5, 2, {1, 1, 0, 0, 0, 1, 1, 0, 0, 0});
  const auto pred = labels(5, 2, {2, 2, 2, 0, 0, 2, 0, 0, 2, 0});
  EXPECT_EQ(seg_score(gt, pred, SegMatchRule::jaccard_half).seg_mean, 0.0);
  const auto pred2 = labels(5, 2, {2, 2, 2, 0, 0, 2, 2, 0, 0, 0});
  EXPECT_EQ(seg_score(gt, pred2, SegMatchRule::jaccard_half).seg_mean, 0.8);
}

TEST(Seg, RandomAgainstBruteForce)
{
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<std::uint32_t> id(0, 4);
  for (int trial = 0; trial < 50; ++trial)
  {
    LabelMap gt(9, 7), pred(9, 7);
    for (auto &v : gt)
      v = id(rng);
    for (auto &v : pred)
      v = id(rng) * 3;
    gt[0] = 1;
    const auto r = seg_score(gt, pred);
    double sum = 0.0;
    std::size_t objects = 0;
    for (std::uint32_t g = 1; g <= 4; ++g)
    {
      std::size_t size = 0;
      for (auto v : gt)
        size += v == g;
      if (size == 0)
        continue;
      ++objects;
      double best = 0.0;
      for (std::uint32_t p = 3; p <= 12; p += 3)
      {
        std::size_t inter = 0, uni = 0;
        for (std::size_t i = 0; i < gt.size(); ++i)
        {
          inter += gt[i] == g && pred[i] == p;
          uni += gt[i] == g || pred[i] == p;
        }
        if (2 * inter > size)
          best = double(inter) / double(uni);
      }
      sum += best;
    }
    ASSERT_EQ(r.per_object.size(), objects);
    EXPECT_EQ(r.seg_mean, sum / double(objects));
  }
}

TEST(Seg, Validation)
{
  const LabelMap empty(3, 3, 0u), one(3, 3, 1u);
  EXPECT_EQ(error_of([&] { seg_score(empty, one); }), Errc::empty_ground_truth);
  EXPECT_EQ(error_of([&] { seg_score(one, LabelMap(3, 2, 1u)); }), Errc::dimension_mismatch);
}

TEST(Seg, JsonReport)
{
  const auto gt = labels(4, 1, {1, 1, 2, 2});
  const auto pred = labels(4, 1, {7, 7, 0, 0});
  const auto json = seg_report_json(seg_score(gt, pred));
  EXPECT_EQ(json, "{\n  \"per_object\": [\n    {\n      \"gt_label\": 1,\n      \"pred_label\": 7,\n"
                  "      \"jaccard\": 1.0\n    },\n    {\n      \"gt_label\": 2,\n"
                  "      \"pred_label\": null,\n      \"jaccard\": 0.0\n    }\n  ],\n"
                  "  \"seg_mean\": 0.5\n}\n");
}

TEST(FormatReal, ShortestRoundTrip)
{
  EXPECT_EQ(format_real(1.0), "1.0");
  EXPECT_EQ(format_real(0.0), "0.0");
  EXPECT_EQ(format_real(0.5), "0.5");
  EXPECT_EQ(format_real(0.1), "0.1");
  EXPECT_EQ(format_real(1e-05), "1e-05");
  EXPECT_EQ(format_real(2.0 / 3.0), "0.6666666666666666");
  EXPECT_EQ(format_real(1e16), "1e+16");
  EXPECT_EQ(format_real(123456.0), "123456.0");
  EXPECT_EQ(format_real(-2.5), "-2.5");
}
