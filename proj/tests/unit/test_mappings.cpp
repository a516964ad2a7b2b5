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

#include "sdfseg/error.hpp"
#include "sdfseg/geometry.hpp"
#include "sdfseg/mappings.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace sdfseg;

TEST(Sigmoid, Examples)
{
  EXPECT_EQ(sigmoid(0.0, {4.0, 0.0}), 0.5);
  EXPECT_EQ(sigmoid(-2.0, {1.0, 2.0}), 0.5);
  EXPECT_NEAR(sigmoid(1.0, {4.0, 0.0}), 1.0 / (1.0 + std::exp(-4.0)), 1e-16);
  // 1 / (1 + e^-4) to 20 digits.
  EXPECT_NEAR(sigmoid(1.0, {4.0, 0.0}), 0.98201379003790844197, 2e-16);
}

TEST(Sigmoid, ExtremeArgumentsStayFinite)
{
  for (double z : {-1e308, -800.0, -40.0, 40.0, 800.0, 1e308})
  {
    const double s = sigmoid(z, {4.0, 0.0});
    EXPECT_TRUE(std::isfinite(s));
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, 1.0);
  }
  EXPECT_EQ(sigmoid(-800.0, {1.0, 0.0}), 0.0);
  EXPECT_EQ(sigmoid(800.0, {1.0, 0.0}), 1.0);
}

TEST(Sigmoid, ComplementIdentity)
{
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> z(-5, 5), a(0.1, 8), b(-3, 3);
  for (int i = 0; i < 1000; ++i)
  {
    const double zz = z(rng), aa = a(rng), bb = b(rng);
    EXPECT_NEAR(sigmoid(zz, {aa, bb}), 1.0 - sigmoid(-zz, {aa, -bb}), 1e-15);
  }
}

TEST(Tanh, Examples)
{
  EXPECT_EQ(tanh_ab(0.0, {4.0, 0.0}), 0.0);
  EXPECT_EQ(tanh_ab(1e6, {4.0, 0.0}), 1.0);
  EXPECT_NEAR(tanh_ab(1.0, {4.0, 0.0}), 2.0 / (1.0 + std::exp(-4.0)) - 1.0, 1e-15);
  // Equals the hyperbolic tangent of half the argument.
  EXPECT_NEAR(tanh_ab(0.3, {2.0, 0.4}), std::tanh((2.0 * 0.3 + 0.4) / 2.0), 1e-15);
}

TEST(Tanh, OddInArgument)
{
  for (double t : {0.1, 0.7, 2.5, 9.0})
    EXPECT_NEAR(tanh_ab(t, {1.0, 0.0}), -tanh_ab(-t, {1.0, 0.0}), 3e-16);
}

TEST(SoftBoundary, Examples)
{
  EXPECT_EQ(soft_boundary(0.0, {4.0, 0.0}), 0.25);
  EXPECT_LT(soft_boundary(10.0, {4.0, 0.0}), 1e-17);
  EXPECT_EQ(soft_boundary(10.0, {4.0, 0.0}), soft_boundary(-10.0, {4.0, 0.0}));
}

TEST(SoftBoundary, DegenerateFieldIsFlat)
{
  const auto sd = signed_distance(BinaryMask(8, 8, 0));
  const auto b = soft_boundary(sd.phi, {});
  for (double v : b)
    EXPECT_LT(v, 1e-17);
}

TEST(SoftBoundary, FieldMatchesScalar)
{
  ScalarField phi(4, 1, std::vector<double>{-1.5, -0.2, 0.3, 2.0});
  const SigmoidParams p{3.0, 0.5};
  const auto b = soft_boundary(phi, p);
  for (std::size_t i = 0; i < phi.size(); ++i)
    EXPECT_EQ(b[i], soft_boundary(phi[i], p));
}

TEST(Params, Validation)
{
  EXPECT_NO_THROW((SigmoidParams{4.0, 0.0}.validate()));
  EXPECT_THROW((SigmoidParams{0.0, 0.0}.validate()), Error);
  EXPECT_THROW((SigmoidParams{-1.0, 0.0}.validate()), Error);
  EXPECT_THROW((SigmoidParams{NAN, 0.0}.validate()), Error);
  EXPECT_THROW((SigmoidParams{1.0, INFINITY}.validate()), Error);
  EXPECT_THROW(soft_boundary(ScalarField(1, 1), {0.0, 0.0}), Error);
}

TEST(Partials, AtOrigin)
{
  const auto d = mapping_partials(0.0, {4.0, 0.0});
  EXPECT_EQ(d.sigmoid_dz, 1.0);
  EXPECT_EQ(d.sigmoid_dbeta, 0.25);
  EXPECT_EQ(d.sigmoid_dalpha, 0.0);
  EXPECT_EQ(d.tanh_dz, 2.0);
  for (double a : {0.5, 2.0, 7.0})
    for (double b : {-1.0, 0.0, 1.0})
      EXPECT_EQ(mapping_partials(0.0, {a, b}).sigmoid_dalpha, 0.0);
}

namespace
{

// Extended-precision reference for the difference quotients below.
long double sigmoid_ld(long double z, long double a, long double b)
{
  return 1.0L / (1.0L + std::exp(-(a * z + b)));
}

long double tanh_ld(long double z, long double a, long double b)
{
  return 2.0L * sigmoid_ld(z, a, b) - 1.0L;
}

} // namespace

TEST(Partials, MatchFiniteDifferences)
{
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> zd(-2, 2), ad(0.5, 6), bd(-1, 1);
  const long double h = 1e-6L;
  auto rel = [](double a, long double n) {
    const long double s = std::max<long double>(std::abs(a), std::abs(n));
    return static_cast<double>(s < 1e-6L ? std::abs(a - n) : std::abs(a - n) / s);
  };
  using F = long double (*)(long double, long double, long double);
  auto dz = [&](F f, double z, double a, double b) { return (f(z + h, a, b) - f(z - h, a, b)) / (2 * h); };
  auto da = [&](F f, double z, double a, double b) { return (f(z, a + h, b) - f(z, a - h, b)) / (2 * h); };
  auto db = [&](F f, double z, double a, double b) { return (f(z, a, b + h) - f(z, a, b - h)) / (2 * h); };
  for (int i = 0; i < 500; ++i)
  {
    const double z = zd(rng), a = ad(rng), b = bd(rng);
    const auto d = mapping_partials(z, {a, b});
    EXPECT_LT(rel(d.sigmoid_dz, dz(sigmoid_ld, z, a, b)), 1e-8);
    EXPECT_LT(rel(d.sigmoid_dalpha, da(sigmoid_ld, z, a, b)), 1e-8);
    EXPECT_LT(rel(d.sigmoid_dbeta, db(sigmoid_ld, z, a, b)), 1e-8);
    EXPECT_LT(rel(d.tanh_dz, dz(tanh_ld, z, a, b)), 1e-8);
    EXPECT_LT(rel(d.tanh_dalpha, da(tanh_ld, z, a, b)), 1e-8);
    EXPECT_LT(rel(d.tanh_dbeta, db(tanh_ld, z, a, b)), 1e-8);
  }
}
