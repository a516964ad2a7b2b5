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

#ifndef SDFSEG_GRID_HPP
#define SDFSEG_GRID_HPP

#include "sdfseg/error.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sdfseg
{

/// Dense row-major 2D image. Element (row, col) lives at row * width + col.
template <typename T> class Grid
{
public:
  using value_type = T;

  Grid() = default;

  Grid(std::size_t width, std::size_t height, T fill = T{})
    : _width(width), _height(height), _data(checked_size(width, height), fill)
  {
  }

  Grid(std::size_t width, std::size_t height, std::vector<T> data)
    : _width(width), _height(height), _data(std::move(data))
  {
    if (_data.size() != checked_size(width, height))
      throw Error(Errc::invalid_argument,
                  "grid data length " + std::to_string(_data.size()) + " does not match " +
                    std::to_string(width) + "x" + std::to_string(height));
  }

  std::size_t width() const noexcept { return _width; }
  std::size_t height() const noexcept { return _height; }
  std::size_t size() const noexcept { return _data.size(); }
  bool empty() const noexcept { return _data.empty(); }

  T &operator()(std::size_t row, std::size_t col) noexcept { return _data[row * _width + col]; }
  const T &operator()(std::size_t row, std::size_t col) const noexcept
  {
    return _data[row * _width + col];
  }
  T &operator[](std::size_t index) noexcept { return _data[index]; }
  const T &operator[](std::size_t index) const noexcept { return _data[index]; }

  std::span<T> values() noexcept { return _data; }
  std::span<const T> values() const noexcept { return _data; }
  const std::vector<T> &vector() const noexcept { return _data; }

  auto begin() noexcept { return _data.begin(); }
  auto end() noexcept { return _data.end(); }
  auto begin() const noexcept { return _data.begin(); }
  auto end() const noexcept { return _data.end(); }

  template <typename U> bool same_shape(const Grid<U> &other) const noexcept
  {
    return _width == other.width() && _height == other.height();
  }

  friend bool operator==(const Grid &, const Grid &) = default;

private:
  static std::size_t checked_size(std::size_t width, std::size_t height)
  {
    if (width == 0 || height == 0)
      throw Error(Errc::invalid_argument, "grid dimensions must be at least 1x1");
    return width * height;
  }

  std::size_t _width = 0;
  std::size_t _height = 0;
  std::vector<T> _data;
};

/// Values are exactly 0 or 1.
using BinaryMask = Grid<std::uint8_t>;
/// 64-bit real field: signed distances, probabilities, boundary maps, gradients.
using ScalarField = Grid<double>;
/// Instance ids; 0 is background.
using LabelMap = Grid<std::uint32_t>;

std::string shape_string(std::size_t width, std::size_t height);

template <typename A, typename B>
void require_same_shape(const Grid<A> &a, const Grid<B> &b, const char *what)
{
  if (!a.same_shape(b))
    throw Error(Errc::dimension_mismatch, std::string(what) + ": shape " +
                                            shape_string(a.width(), a.height()) + " vs " +
                                            shape_string(b.width(), b.height()));
}

/// Throws invalid_argument unless every value is 0 or 1.
void validate_mask(const BinaryMask &mask);

/// Throws invalid_argument if any value is NaN or infinite.
void validate_finite(const ScalarField &field, const char *what);

} // namespace sdfseg

#endif // SDFSEG_GRID_HPP
