// Copyright 2026 The GlyphForge Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "glyphforge/codec.hpp"

#include <fmt/format.h>
#include <openssl/evp.h>
#include <png.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

#include "glyphforge/error.hpp"

namespace glyphforge {
namespace {

const std::array<float, 256>& decode_table() {
  static const std::array<float, 256> table = [] {
    std::array<float, 256> t{};
    for (int i = 0; i < 256; ++i) t[i] = static_cast<float>(srgb_to_linear(i / 255.0));
    return t;
  }();
  return table;
}

struct PngWriteState {
  std::vector<std::uint8_t>* out;
};

void write_callback(png_structp png, png_bytep data, png_size_t length) {
  auto* state = static_cast<PngWriteState*>(png_get_io_ptr(png));
  state->out->insert(state->out->end(), data, data + length);
}

void flush_callback(png_structp) {}

struct PngReadState {
  std::span<const std::uint8_t> bytes;
  std::size_t offset = 0;
};

void read_callback(png_structp png, png_bytep data, png_size_t length) {
  auto* state = static_cast<PngReadState*>(png_get_io_ptr(png));
  if (state->offset + length > state->bytes.size()) png_error(png, "truncated PNG stream");
  std::memcpy(data, state->bytes.data() + state->offset, length);
  state->offset += length;
}

// libpng is built with unwind tables on the supported toolchains, so errors
// propagate as exceptions instead of through setjmp.
[[noreturn]] void error_callback(png_structp, png_const_charp message) {
  throw IoError(fmt::format("PNG codec: {}", message));
}

void warning_callback(png_structp, png_const_charp) {}

}  // namespace

double linear_to_srgb(double v) {
  v = std::clamp(v, 0.0, 1.0);
  return v <= 0.0031308 ? 12.92 * v : 1.055 * std::pow(v, 1.0 / 2.4) - 0.055;
}

double srgb_to_linear(double v) {
  v = std::clamp(v, 0.0, 1.0);
  return v <= 0.04045 ? v / 12.92 : std::pow((v + 0.055) / 1.055, 2.4);
}

namespace {

std::uint8_t encode_srgb8_direct(float linear) {
  return static_cast<std::uint8_t>(std::lround(linear_to_srgb(linear) * 255.0));
}

// thresholds[k] is the smallest float in (0, 1] whose direct encoding is at
// least k + 1. Positive floats order like their bit patterns, so a bisection
// over bits finds each boundary exactly.
const std::array<float, 255>& encode_thresholds() {
  static const std::array<float, 255> table = [] {
    std::array<float, 255> t{};
    const auto one = std::bit_cast<std::uint32_t>(1.0F);
    for (int k = 1; k <= 255; ++k) {
      std::uint32_t lo = 0;  // encodes below k
      std::uint32_t hi = one;
      while (hi - lo > 1) {
        const std::uint32_t mid = lo + (hi - lo) / 2;
        (encode_srgb8_direct(std::bit_cast<float>(mid)) >= k ? hi : lo) = mid;
      }
      t[static_cast<std::size_t>(k - 1)] = std::bit_cast<float>(hi);
    }
    return t;
  }();
  return table;
}

}  // namespace

std::uint8_t encode_srgb8(float linear) {
  if (!(linear > 0.0F)) return 0;
  if (linear >= 1.0F) return 255;
  const auto& t = encode_thresholds();
  return static_cast<std::uint8_t>(std::upper_bound(t.begin(), t.end(), linear) - t.begin());
}

float decode_srgb8(std::uint8_t code) { return decode_table()[code]; }

std::vector<std::uint8_t> encode_png(const RasterImage& img) {
  std::vector<std::uint8_t> out;
  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, error_callback, warning_callback);
  if (png == nullptr) throw IoError("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  struct WriteGuard {
    png_structp png;
    png_infop info;
    ~WriteGuard() { png_destroy_write_struct(&png, info != nullptr ? &info : nullptr); }
  } guard{png, info};
  if (info == nullptr) throw IoError("png_create_info_struct failed");

  PngWriteState state{&out};
  png_set_write_fn(png, &state, write_callback, flush_callback);
  png_set_IHDR(png, info, static_cast<png_uint_32>(img.width()),
               static_cast<png_uint_32>(img.height()), 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_set_compression_level(png, 3);
  png_write_info(png, info);

  std::vector<std::uint8_t> row(static_cast<std::size_t>(img.width()) * 3);
  auto samples = img.samples();
  for (int y = 0; y < img.height(); ++y) {
    const std::size_t base = static_cast<std::size_t>(y) * img.width() * 3;
    for (std::size_t i = 0; i < row.size(); ++i) row[i] = encode_srgb8(samples[base + i]);
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  return out;
}

RasterImage decode_png(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 8 || png_sig_cmp(bytes.data(), 0, 8) != 0) {
    throw IoError("not a PNG stream");
  }
  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, error_callback, warning_callback);
  if (png == nullptr) throw IoError("png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  struct ReadGuard {
    png_structp png;
    png_infop info;
    ~ReadGuard() { png_destroy_read_struct(&png, info != nullptr ? &info : nullptr, nullptr); }
  } guard{png, info};
  if (info == nullptr) throw IoError("png_create_info_struct failed");

  PngReadState state{bytes, 0};
  png_set_read_fn(png, &state, read_callback);
  png_read_info(png, info);
  const png_uint_32 width = png_get_image_width(png, info);
  const png_uint_32 height = png_get_image_height(png, info);
  const int color = png_get_color_type(png, info);
  const int depth = png_get_bit_depth(png, info);
  if (depth == 16) png_set_strip_16(png);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color == PNG_COLOR_TYPE_GRAY || color == PNG_COLOR_TYPE_GRAY_ALPHA) png_set_gray_to_rgb(png);
  if ((color & PNG_COLOR_MASK_ALPHA) != 0) png_set_strip_alpha(png);
  if (depth < 8) png_set_packing(png);
  png_read_update_info(png, info);
  if (png_get_rowbytes(png, info) != static_cast<std::size_t>(width) * 3) {
    throw IoError("unsupported PNG layout");
  }

  RasterImage img(static_cast<int>(width), static_cast<int>(height));
  std::vector<std::uint8_t> row(static_cast<std::size_t>(width) * 3);
  auto samples = img.samples();
  for (png_uint_32 y = 0; y < height; ++y) {
    png_read_row(png, row.data(), nullptr);
    const std::size_t base = static_cast<std::size_t>(y) * width * 3;
    for (std::size_t i = 0; i < row.size(); ++i) samples[base + i] = decode_srgb8(row[i]);
  }
  png_read_end(png, nullptr);
  return img;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open '{}' for reading", path.string()));
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError(fmt::format("read error on '{}'", path.string()));
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError(fmt::format("write error on '{}'", path.string()));
}

void write_png(const std::filesystem::path& path, const RasterImage& img) {
  write_file(path, encode_png(img));
}

RasterImage read_png(const std::filesystem::path& path) { return decode_png(read_file(path)); }

std::string sha256_hex(std::span<const std::uint8_t> bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

std::string sha256_hex(std::string_view text) {
  return sha256_hex(std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

}  // namespace glyphforge
