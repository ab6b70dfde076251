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

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <string>

#include "glyphforge/codec.hpp"
#include "glyphforge/error.hpp"
#include "test_support.hpp"

namespace glyphforge {
namespace {

using testing::random_image;
using testing::TempDir;

std::uint8_t reference_encode(float v) {
  return static_cast<std::uint8_t>(std::lround(linear_to_srgb(v) * 255.0));
}

TEST(Srgb, TransferFunctionsInvertEachOther) {
  for (double v = 0.0; v <= 1.0; v += 0.01) {
    EXPECT_NEAR(srgb_to_linear(linear_to_srgb(v)), v, 1e-12);
  }
  EXPECT_EQ(linear_to_srgb(0.0), 0.0);
  EXPECT_DOUBLE_EQ(linear_to_srgb(1.0), 1.0);
}

TEST(Srgb, FastEncoderAgreesWithFormulaAcrossTheFloatLine) {
  const auto one = std::bit_cast<std::uint32_t>(1.0F);
  for (std::uint32_t bits = 1; bits < one; bits += 997) {
    const float v = std::bit_cast<float>(bits);
    ASSERT_EQ(encode_srgb8(v), reference_encode(v)) << v;
  }
  // Both sides of every code boundary.
  for (int k = 0; k < 256; ++k) {
    const float mid = static_cast<float>(srgb_to_linear((k + 0.5) / 255.0));
    for (const float v : {std::nextafter(mid, 0.0F), mid, std::nextafter(mid, 2.0F)}) {
      if (v > 0.0F && v < 1.0F) ASSERT_EQ(encode_srgb8(v), reference_encode(v)) << v;
    }
  }
  EXPECT_EQ(encode_srgb8(-0.5F), 0);
  EXPECT_EQ(encode_srgb8(0.0F), 0);
  EXPECT_EQ(encode_srgb8(1.0F), 255);
  EXPECT_EQ(encode_srgb8(7.0F), 255);
}

TEST(Srgb, DecodeThenEncodeIsIdentityOnCodes) {
  for (int k = 0; k < 256; ++k) {
    EXPECT_EQ(encode_srgb8(decode_srgb8(static_cast<std::uint8_t>(k))), k);
  }
}

TEST(Png, RoundTripReproducesCodes) {
  const RasterImage img = random_image(37, 21, 8);
  const auto bytes = encode_png(img);
  ASSERT_GT(bytes.size(), 8U);
  EXPECT_EQ(bytes[1], 'P');
  EXPECT_EQ(encode_png(img), bytes);
  const RasterImage back = decode_png(bytes);
  ASSERT_EQ(back.width(), 37);
  ASSERT_EQ(back.height(), 21);
  for (std::size_t i = 0; i < img.samples().size(); ++i) {
    ASSERT_EQ(encode_srgb8(back.samples()[i]), encode_srgb8(img.samples()[i]));
  }
}

TEST(Png, FileRoundTripAndErrors) {
  TempDir dir("codec");
  const RasterImage img = random_image(10, 10, 2);
  write_png(dir.path() / "a.png", img);
  EXPECT_EQ(encode_png(read_png(dir.path() / "a.png")), encode_png(img));
  EXPECT_THROW(read_png(dir.path() / "missing.png"), IoError);
  const std::vector<std::uint8_t> junk = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  EXPECT_THROW(decode_png(junk), IoError);
  auto truncated = encode_png(img);
  truncated.resize(truncated.size() / 2);
  EXPECT_THROW(decode_png(truncated), IoError);
}

TEST(Sha256, KnownVectors) {
  EXPECT_EQ(sha256_hex(std::string_view("abc")),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256_hex(std::string_view("")),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

}  // namespace
}  // namespace glyphforge
