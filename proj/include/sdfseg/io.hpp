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

#ifndef SDFSEG_IO_HPP
#define SDFSEG_IO_HPP

#include "sdfseg/grid.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace sdfseg
{

// Field files: "SDF1", u32 width, u32 height (little-endian), then
// width * height little-endian IEEE-754 binary32 values, row-major. Nothing
// may follow the payload.

std::vector<std::uint8_t> encode_field(const ScalarField &field);
ScalarField decode_field(std::span<const std::uint8_t> bytes);

ScalarField read_field(const std::filesystem::path &path);
void write_field(const ScalarField &field, const std::filesystem::path &path);

enum class LabelFormat
{
  png16,
  pgm_binary,
  pgm_ascii,
};

/// Reads a 16-bit (or 8-bit) grayscale PNG or a P2/P5 PGM, detected from the
/// file contents.
LabelMap read_labels(const std::filesystem::path &path);

/// Writes a label map; ids above 65535 are a format error.
void write_labels(const LabelMap &labels, const std::filesystem::path &path, LabelFormat format);

/// `.png` selects png16, anything else binary PGM.
void write_labels(const LabelMap &labels, const std::filesystem::path &path);

std::vector<std::uint8_t> read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, std::span<const std::uint8_t> bytes);

} // namespace sdfseg

#endif // SDFSEG_IO_HPP
