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
#include "sdfseg/instances.hpp"
#include "sdfseg/mappings.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace sdfseg;

namespace
{

LabelMap two_squares()
{
  // Two abutting 3x3 squares, columns 1-3 and 4-6.
  LabelMap m(9, 7, 0u);
  for (std::size_t r = 2; r <= 4; ++r)
    for (std::size_t c = 1; c <= 6; ++c)
      m(r, c) = c <= 3 ? 1 : 2;
  return m;
}

} // namespace

TEST(CleanBorders, TwoSquares)
{
  const auto cleaned = clean_borders(two_squares());
  for (std::size_t r = 0; r < 7; ++r)
  {
    for (std::size_t c = 0; c < 9; ++c)
    {
      std::uint32_t want = 0;
      if (r >= 2 && r <= 4 && (c == 1 || c == 2))
        want = 1;
      if (r >= 2 && r <= 4 && (c == 5 || c == 6))
        want = 2;
      EXPECT_EQ(cleaned(r, c), want) << r << "," << c;
    }
  }
  const auto mask = labels_to_binary(cleaned);
  EXPECT_EQ(oracle::union_find_components(mask), 2u);
}

TEST(CleanBorders, DiagonalContactCounts)
{
  LabelMap m(4, 4, 0u);
  m(1, 1) = 1;
  m(2, 2) = 2;
  const auto cleaned = clean_borders(m);
  EXPECT_EQ(cleaned(1, 1), 0u);
  EXPECT_EQ(cleaned(2, 2), 0u);
}

TEST(CleanBorders, IsolatedAndEmptyUnchanged)
{
  LabelMap m(6, 5, 0u);
  m(1, 1) = m(1, 2) = m(2, 1) = 4;
  m(4, 5) = 9;
  EXPECT_EQ(clean_borders(m), m);
  const LabelMap empty(3, 3, 0u);
  EXPECT_EQ(clean_borders(empty), empty);
}

TEST(LabelsToBinary, Basics)
{
  EXPECT_EQ(labels_to_binary(LabelMap(3, 2, 0u)), BinaryMask(3, 2, 0));
  LabelMap one(3, 3, 0u);
  one(1, 1) = one(1, 2) = 5;
  const auto m = labels_to_binary(one);
  EXPECT_EQ(m(1, 1), 1);
  EXPECT_EQ(m(0, 0), 0);
  EXPECT_EQ(oracle::union_find_components(m), 1u);
}

TEST(LabelsToBinary, RejectsTouchingLabels)
{
  try
  {
    labels_to_binary(two_squares());
    FAIL();
  }
  catch (const Error &e)
  {
    EXPECT_EQ(e.code(), Errc::separation_violation);
  }
}

TEST(InstanceMasks, SplitAndRemerge)
{
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::uint32_t> id(0, 6);
  LabelMap m(11, 8);
  for (auto &v : m)
    v = id(rng) * 5;
  const auto masks = instance_masks(m);
  LabelMap merged(11, 8, 0u);
  std::uint32_t previous = 0;
  for (const auto &inst : masks)
  {
    EXPECT_GT(inst.label, previous);
    previous = inst.label;
    for (std::size_t i = 0; i < m.size(); ++i)
    {
      if (inst.mask[i])
      {
        EXPECT_EQ(merged[i], 0u);
        merged[i] = inst.label;
      }
    }
  }
  EXPECT_EQ(merged, m);
  EXPECT_TRUE(instance_masks(LabelMap(2, 2, 0u)).empty());

  LabelMap two(3, 1, std::vector<std::uint32_t>{3, 0, 7});
  const auto pair = instance_masks(two);
  ASSERT_EQ(pair.size(), 2u);
  EXPECT_EQ(pair[0].label, 3u);
  EXPECT_EQ(pair[1].label, 7u);
  EXPECT_EQ(label_ids(two), (std::vector<std::uint32_t>{3, 7}));
}

TEST(Threshold, SignRule)
{
  const ScalarField phi(5, 1, std::vector<double>{-1.0, -0.5, 0.0, 0.25, 2.0});
  EXPECT_EQ(threshold_probability(phi, {4.0, 0.0}).vector(),
            (std::vector<std::uint8_t>{0, 0, 0, 1, 1}));
  // Decision boundary moves to -beta / alpha = -0.5.
  EXPECT_EQ(threshold_probability(phi, {4.0, 2.0}).vector(),
            (std::vector<std::uint8_t>{0, 0, 1, 1, 1}));
}

TEST(Threshold, AgreesWithSigmoid)
{
  std::mt19937_64 rng(32);
  std::normal_distribution<double> n(0.0, 2.0);
  ScalarField phi(16, 16);
  for (auto &v : phi)
    v = n(rng);
  const SigmoidParams p{2.5, 0.7};
  const auto m = threshold_probability(phi, p);
  for (std::size_t i = 0; i < phi.size(); ++i)
    EXPECT_EQ(m[i], sigmoid(phi[i], p) > 0.5 ? 1 : 0);
}

TEST(Components, TwoDiscs)
{
  auto a = oracle::disc(40, 20, 9.5, 9.5, 6.0);
  const auto b = oracle::disc(40, 20, 9.5, 29.5, 6.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] |= b[i];
  const auto cc = connected_components(a);
  EXPECT_EQ(label_ids(cc), (std::vector<std::uint32_t>{1, 2}));
  EXPECT_EQ(cc(9, 9), 1u);
  EXPECT_EQ(cc(9, 29), 2u);
}

TEST(Components, CheckerboardIsAllSingletons)
{
  BinaryMask m(7, 6, 0);
  std::size_t ones = 0;
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 7; ++c)
      if ((r + c) % 2 == 0)
      {
        m(r, c) = 1;
        ++ones;
      }
  const auto cc = connected_components(m);
  EXPECT_EQ(label_ids(cc).size(), ones);
  // Row-major discovery order.
  EXPECT_EQ(cc(0, 0), 1u);
  EXPECT_EQ(cc(0, 2), 2u);
  EXPECT_EQ(cc(1, 1), 5u);
}

TEST(Components, MatchUnionFind)
{
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial)
  {
    const auto m = oracle::random_mask(rng, 5 + trial % 30, 4 + trial % 17, 0.3 + 0.004 * trial);
    const auto cc = connected_components(m);
    const auto ids = label_ids(cc);
    ASSERT_EQ(ids.size(), oracle::union_find_components(m));
    for (std::size_t k = 0; k < ids.size(); ++k)
      ASSERT_EQ(ids[k], k + 1);
    for (std::size_t i = 0; i < m.size(); ++i)
      ASSERT_EQ(cc[i] != 0, m[i] != 0);
    // 4-neighbors share a label iff both are foreground.
    for (std::size_t r = 0; r < m.height(); ++r)
    {
      for (std::size_t c = 0; c + 1 < m.width(); ++c)
      {
        if (m(r, c) && m(r, c + 1))
        {
          ASSERT_EQ(cc(r, c), cc(r, c + 1));
        }
      }
    }
  }
}

TEST(Components, LargeBlobDoesNotOverflowStack)
{
  const BinaryMask m(1500, 1500, 1);
  const auto cc = connected_components(m);
  EXPECT_EQ(cc(1499, 1499), 1u);
}
