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

#include <cmath>
#include <set>

#include "glyphforge/letters.hpp"
#include "glyphforge/rng.hpp"

namespace glyphforge {
namespace {

TEST(SplitMix64, MatchesReferenceSequence) {
  // Published reference outputs for seed 0.
  SplitMix64 rng(0);
  EXPECT_EQ(rng(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng(), 0x06C45D188009454FULL);
}

TEST(SplitMix64, OneShotEqualsFirstDraw) {
  for (std::uint64_t s : {0ULL, 1ULL, 0xDEADBEEFULL, ~0ULL}) {
    SplitMix64 rng(s);
    EXPECT_EQ(splitmix64(s), rng());
  }
}

TEST(SplitMix64, SubStreamsUseGoldenMultiples) {
  const std::uint64_t seed = 12345;
  for (std::uint64_t k = 0; k < 8; ++k) {
    EXPECT_EQ(sub_stream_seed(seed, k), splitmix64(seed ^ (k * kGoldenGamma)));
  }
  std::set<std::uint64_t> distinct;
  for (std::uint64_t k = 0; k < 64; ++k) distinct.insert(sub_stream_seed(seed, k));
  EXPECT_EQ(distinct.size(), 64U);
}

TEST(SplitMix64, UnitIntervalIsHalfOpen) {
  EXPECT_EQ(to_unit(0), 0.0);
  EXPECT_LT(to_unit(~0ULL), 1.0);
  EXPECT_EQ(to_unit(1ULL << 63), 0.5);
}

TEST(SplitMix64, UniformIntCoversInclusiveRange) {
  SplitMix64 rng(7);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto v = rng.uniform_int(-2, 3);
    ASSERT_GE(v, -2);
    ASSERT_LE(v, 3);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 6U);
  EXPECT_EQ(rng.uniform_int(4, 4), 4);
}

TEST(SplitMix64, DegenerateUniformReturnsLowerBound) {
  SplitMix64 rng(3);
  EXPECT_EQ(rng.uniform(0.25, 0.25), 0.25);
}

TEST(SplitMix64, NormalPairHasUnitMoments) {
  SplitMix64 rng(99);
  double sum = 0.0;
  double sq = 0.0;
  const int n = 100000;
  for (int i = 0; i < n / 2; ++i) {
    const auto [a, b] = rng.normal_pair();
    sum += a + b;
    sq += a * a + b * b;
  }
  const double mean = sum / n;
  EXPECT_NEAR(mean, 0.0, 0.02);
  EXPECT_NEAR(sq / n - mean * mean, 1.0, 0.02);
}

TEST(Letters, TwentyTwoStableCodes) {
  EXPECT_EQ(kLetterCount, 22);
  EXPECT_EQ(code(LetterLabel::kAlep), 0);
  EXPECT_EQ(code(LetterLabel::kMem), 12);
  EXPECT_EQ(code(LetterLabel::kTaw), 21);
  for (const LetterLabel l : all_letters()) {
    const auto back = letter_from_name(name(l));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, l);
    EXPECT_EQ(letter_from_code(code(l)), l);
  }
  EXPECT_FALSE(letter_from_name("xyz").has_value());
  EXPECT_FALSE(letter_from_name("Alep").has_value());
}

TEST(Letters, NameListIsCommaJoined) {
  const std::string all = all_letter_names();
  EXPECT_EQ(all.rfind("alep, bet, gimel", 0), 0U);
  EXPECT_NE(all.find("shin, taw"), std::string::npos);
}

}  // namespace
}  // namespace glyphforge
