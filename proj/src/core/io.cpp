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

#include "sdfseg/io.hpp"

#include <png.h>

#include <bit>
#include <cctype>
#include <cmath>
#include <csetjmp>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

namespace sdfseg
{

namespace
{

constexpr char kFieldMagic[4] = {'S', 'D', 'F', '1'};
constexpr std::size_t kFieldHeader = 12;
constexpr std::uint32_t kMaxLabel = 65535;

void put_u32(std::vector<std::uint8_t> &out, std::uint32_t v)
{
  for (int shift = 0; shift < 32; shift += 8)
    out.push_back(static_cast<std::uint8_t>(v >> shift));
}

std::uint32_t get_u32(std::span<const std::uint8_t> bytes, std::size_t offset)
{
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i)
    v = (v << 8) | bytes[offset + static_cast<std::size_t>(i)];
  return v;
}

[[noreturn]] void format_error(const std::string &what) { throw Error(Errc::format, what); }

std::uint32_t max_label(const LabelMap &labels)
{
  std::uint32_t m = 0;
  for (const auto v : labels)
    m = std::max(m, v);
  if (m > kMaxLabel)
    format_error("label id " + std::to_string(m) + " exceeds the 16-bit file range");
  return m;
}

// ---------------------------------------------------------------------------
// PGM

class PgmCursor
{
public:
  explicit PgmCursor(std::span<const std::uint8_t> bytes) : _bytes(bytes) {}

  void skip_space_and_comments()
  {
    while (_pos < _bytes.size())
    {
      if (_bytes[_pos] == '#')
      {
        while (_pos < _bytes.size() && _bytes[_pos] != '\n')
          ++_pos;
      }
      else if (std::isspace(_bytes[_pos]))
        ++_pos;
      else
        break;
    }
  }

  std::uint64_t number()
  {
    skip_space_and_comments();
    if (_pos >= _bytes.size() || !std::isdigit(_bytes[_pos]))
      format_error("PGM: expected an unsigned integer");
    std::uint64_t v = 0;
    while (_pos < _bytes.size() && std::isdigit(_bytes[_pos]))
    {
      v = v * 10 + (_bytes[_pos++] - '0');
      if (v > 0xffffffffull)
        format_error("PGM: integer out of range");
    }
    return v;
  }

  /// Consumes the single whitespace byte separating the header from raster data.
  void single_space()
  {
    if (_pos >= _bytes.size() || !std::isspace(_bytes[_pos]))
      format_error("PGM: missing whitespace after header");
    ++_pos;
  }

  std::size_t pos() const { return _pos; }
  std::size_t remaining() const { return _bytes.size() - _pos; }

private:
  std::span<const std::uint8_t> _bytes;
  std::size_t _pos = 2;
};

LabelMap decode_pgm(std::span<const std::uint8_t> bytes)
{
  const bool binary = bytes[1] == '5';
  PgmCursor cur(bytes);
  const auto width = cur.number();
  const auto height = cur.number();
  const auto maxval = cur.number();
  if (width == 0 || height == 0)
    format_error("PGM: zero image dimension");
  if (maxval == 0 || maxval > kMaxLabel)
    format_error("PGM: maxval must be in [1, 65535]");

  LabelMap labels(width, height);
  if (binary)
  {
    cur.single_space();
    const std::size_t bpp = maxval > 255 ? 2 : 1;
    if (cur.remaining() < labels.size() * bpp)
      format_error("PGM: truncated raster");
    std::size_t at = cur.pos();
    for (std::size_t i = 0; i < labels.size(); ++i)
    {
      std::uint32_t v = bytes[at++];
      if (bpp == 2)
        v = (v << 8) | bytes[at++];
      labels[i] = v;
    }
  }
  else
  {
    for (std::size_t i = 0; i < labels.size(); ++i)
      labels[i] = static_cast<std::uint32_t>(cur.number());
  }
  for (const auto v : labels)
  {
    if (v > maxval)
      format_error("PGM: sample exceeds maxval");
  }
  return labels;
}

std::vector<std::uint8_t> encode_pgm(const LabelMap &labels, bool binary)
{
  const std::uint32_t maxval = max_label(labels) > 255 ? kMaxLabel : 255;
  std::string header = std::string(binary ? "P5" : "P2") + "\n" + std::to_string(labels.width()) +
                       " " + std::to_string(labels.height()) + "\n" + std::to_string(maxval) + "\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  if (binary)
  {
    for (const auto v : labels)
    {
      if (maxval > 255)
        out.push_back(static_cast<std::uint8_t>(v >> 8));
      out.push_back(static_cast<std::uint8_t>(v));
    }
    return out;
  }
  for (std::size_t r = 0; r < labels.height(); ++r)
  {
    std::string line;
    for (std::size_t c = 0; c < labels.width(); ++c)
    {
      if (c > 0)
        line += ' ';
      line += std::to_string(labels(r, c));
    }
    line += '\n';
    out.insert(out.end(), line.begin(), line.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// PNG

struct PngReadState
{
  std::span<const std::uint8_t> bytes;
  std::size_t pos = 0;
};

struct PngError
{
  char message[256] = {};
};

void png_on_error(png_structp png, png_const_charp msg)
{
  auto *err = static_cast<PngError *>(png_get_error_ptr(png));
  std::strncpy(err->message, msg, sizeof(err->message) - 1);
  png_longjmp(png, 1);
}

void png_on_warning(png_structp, png_const_charp) {}

void png_read_bytes(png_structp png, png_bytep data, png_size_t length)
{
  auto *state = static_cast<PngReadState *>(png_get_io_ptr(png));
  if (state->pos + length > state->bytes.size())
    png_error(png, "unexpected end of data");
  std::memcpy(data, state->bytes.data() + state->pos, length);
  state->pos += length;
}

void png_write_bytes(png_structp png, png_bytep data, png_size_t length)
{
  auto *out = static_cast<std::vector<std::uint8_t> *>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + length);
}

void png_flush_noop(png_structp) {}

/// Decodes into `pixels` (resized by the caller after the header pass);
/// returns false with `err` filled on failure. No C++ objects are created
/// between setjmp and the libpng calls.
bool png_decode_raw(std::span<const std::uint8_t> bytes, png_uint_32 &width, png_uint_32 &height,
                    std::vector<std::uint32_t> &pixels, PngError &err)
{
  PngReadState state{bytes, 0};
  png_structp png =
    png_create_read_struct(PNG_LIBPNG_VER_STRING, &err, png_on_error, png_on_warning);
  if (!png)
  {
    std::strcpy(err.message, "cannot allocate PNG reader");
    return false;
  }
  png_infop info = png_create_info_struct(png);
  png_bytep row = nullptr;
  if (!info || setjmp(png_jmpbuf(png)))
  {
    if (err.message[0] == 0)
      std::strcpy(err.message, "cannot allocate PNG info");
    std::free(row);
    png_destroy_read_struct(&png, &info, nullptr);
    return false;
  }
  png_set_read_fn(png, &state, png_read_bytes);
  png_read_info(png, info);
  width = png_get_image_width(png, info);
  height = png_get_image_height(png, info);
  const int color = png_get_color_type(png, info);
  const int depth = png_get_bit_depth(png, info);
  const int interlace = png_get_interlace_type(png, info);
  if (color != PNG_COLOR_TYPE_GRAY)
    png_error(png, "label PNG must be single-channel grayscale");
  if (depth != 8 && depth != 16)
    png_error(png, "label PNG must have bit depth 8 or 16");
  if (interlace != PNG_INTERLACE_NONE)
    png_error(png, "interlaced label PNGs are not supported");
  if (width == 0 || height == 0 || static_cast<std::uint64_t>(width) * height > (1ull << 31))
    png_error(png, "unsupported PNG dimensions");

  const std::size_t stride = png_get_rowbytes(png, info);
  pixels.assign(static_cast<std::size_t>(width) * height, 0);
  row = static_cast<png_bytep>(std::malloc(stride));
  if (!row)
    png_error(png, "out of memory");
  for (png_uint_32 y = 0; y < height; ++y)
  {
    png_read_row(png, row, nullptr);
    for (png_uint_32 x = 0; x < width; ++x)
    {
      std::uint32_t v = depth == 16 ? (std::uint32_t{row[2 * x]} << 8) | row[2 * x + 1] : row[x];
      pixels[static_cast<std::size_t>(y) * width + x] = v;
    }
  }
  png_read_end(png, nullptr);
  std::free(row);
  png_destroy_read_struct(&png, &info, nullptr);
  return true;
}

LabelMap decode_png(std::span<const std::uint8_t> bytes)
{
  png_uint_32 width = 0;
  png_uint_32 height = 0;
  std::vector<std::uint32_t> pixels;
  PngError err;
  if (!png_decode_raw(bytes, width, height, pixels, err))
    format_error(std::string("PNG: ") + err.message);
  return LabelMap(width, height, std::move(pixels));
}

bool png_encode_raw(const LabelMap &labels, const std::vector<std::uint8_t> &rows,
                    std::vector<std::uint8_t> &out, PngError &err)
{
  png_structp png =
    png_create_write_struct(PNG_LIBPNG_VER_STRING, &err, png_on_error, png_on_warning);
  if (!png)
  {
    std::strcpy(err.message, "cannot allocate PNG writer");
    return false;
  }
  png_infop info = png_create_info_struct(png);
  if (!info || setjmp(png_jmpbuf(png)))
  {
    if (err.message[0] == 0)
      std::strcpy(err.message, "cannot allocate PNG info");
    png_destroy_write_struct(&png, &info);
    return false;
  }
  png_set_write_fn(png, &out, png_write_bytes, png_flush_noop);
  png_set_IHDR(png, info, static_cast<png_uint_32>(labels.width()),
               static_cast<png_uint_32>(labels.height()), 16, PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  const std::size_t stride = labels.width() * 2;
  for (std::size_t y = 0; y < labels.height(); ++y)
    png_write_row(png, const_cast<png_bytep>(rows.data() + y * stride));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return true;
}

std::vector<std::uint8_t> encode_png(const LabelMap &labels)
{
  max_label(labels);
  std::vector<std::uint8_t> rows;
  rows.reserve(labels.size() * 2);
  for (const auto v : labels)
  {
    rows.push_back(static_cast<std::uint8_t>(v >> 8));
    rows.push_back(static_cast<std::uint8_t>(v));
  }
  std::vector<std::uint8_t> out;
  PngError err;
  if (!png_encode_raw(labels, rows, out, err))
    format_error(std::string("PNG: ") + err.message);
  return out;
}

} // namespace

// ---------------------------------------------------------------------------

std::vector<std::uint8_t> encode_field(const ScalarField &field)
{
  if (field.empty())
    throw Error(Errc::invalid_argument, "cannot serialize an empty field");
  if (field.width() > 0xffffffffu || field.height() > 0xffffffffu)
    throw Error(Errc::invalid_argument, "field dimensions exceed 32 bits");
  std::vector<std::uint8_t> out(std::begin(kFieldMagic), std::end(kFieldMagic));
  out.reserve(kFieldHeader + 4 * field.size());
  put_u32(out, static_cast<std::uint32_t>(field.width()));
  put_u32(out, static_cast<std::uint32_t>(field.height()));
  for (std::size_t i = 0; i < field.size(); ++i)
  {
    const auto v = static_cast<float>(field[i]);
    if (!std::isfinite(v))
      throw Error(Errc::invalid_argument,
                  "field value at index " + std::to_string(i) + " is not finite in binary32");
    put_u32(out, std::bit_cast<std::uint32_t>(v));
  }
  return out;
}

ScalarField decode_field(std::span<const std::uint8_t> bytes)
{
  if (bytes.size() < kFieldHeader || std::memcmp(bytes.data(), kFieldMagic, 4) != 0)
    format_error("field file: missing SDF1 header");
  const std::uint64_t width = get_u32(bytes, 4);
  const std::uint64_t height = get_u32(bytes, 8);
  if (width == 0 || height == 0)
    format_error("field file: zero dimension");
  const std::uint64_t expected = kFieldHeader + 4 * width * height;
  if (bytes.size() != expected)
    format_error("field file: payload is " + std::to_string(bytes.size() - kFieldHeader) +
                 " bytes, expected " + std::to_string(expected - kFieldHeader));

  ScalarField field(width, height);
  for (std::size_t i = 0; i < field.size(); ++i)
  {
    const float v = std::bit_cast<float>(get_u32(bytes, kFieldHeader + 4 * i));
    if (!std::isfinite(v))
      format_error("field file: non-finite value at index " + std::to_string(i));
    field[i] = v;
  }
  return field;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Errc::io, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad())
    throw Error(Errc::io, "cannot read " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path &path, std::span<const std::uint8_t> bytes)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw Error(Errc::io, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out)
    throw Error(Errc::io, "cannot write " + path.string());
}

ScalarField read_field(const std::filesystem::path &path) { return decode_field(read_file(path)); }

void write_field(const ScalarField &field, const std::filesystem::path &path)
{
  write_file(path, encode_field(field));
}

LabelMap read_labels(const std::filesystem::path &path)
{
  const auto bytes = read_file(path);
  static constexpr std::uint8_t png_signature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (bytes.size() >= 8 && std::memcmp(bytes.data(), png_signature, 8) == 0)
    return decode_png(bytes);
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '2' || bytes[1] == '5'))
    return decode_pgm(bytes);
  format_error(path.string() + ": not a PNG or P2/P5 PGM file");
}

void write_labels(const LabelMap &labels, const std::filesystem::path &path, LabelFormat format)
{
  if (labels.empty())
    throw Error(Errc::invalid_argument, "cannot write an empty label map");
  switch (format)
  {
    case LabelFormat::png16:
      write_file(path, encode_png(labels));
      return;
    case LabelFormat::pgm_binary:
      write_file(path, encode_pgm(labels, true));
      return;
    case LabelFormat::pgm_ascii:
      write_file(path, encode_pgm(labels, false));
      return;
  }
}

void write_labels(const LabelMap &labels, const std::filesystem::path &path)
{
  auto ext = path.extension().string();
  for (auto &ch : ext)
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  write_labels(labels, path, ext == ".png" ? LabelFormat::png16 : LabelFormat::pgm_binary);
}

} // namespace sdfseg
