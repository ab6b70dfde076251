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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace glyphforge {

// The 22 Old Aramaic letter classes. Integer codes are stable and follow the
// alphabetical order of the script.
enum class LetterLabel : std::uint8_t {
  kAlep,
  kBet,
  kGimel,
  kDalet,
  kHe,
  kWaw,
  kZayin,
  kHet,
  kTet,
  kYod,
  kKap,
  kLamed,
  kMem,
  kNun,
  kSamek,
  kAyin,
  kPe,
  kSade,
  kQop,
  kResh,
  kShin,
  kTaw,
};

inline constexpr int kLetterCount = 22;

inline constexpr std::array<std::string_view, kLetterCount> kLetterNames = {
    "alep", "bet",   "gimel", "dalet", "he", "waw",  "zayin", "het",  "tet",  "yod",  "kap",
    "lamed", "mem",  "nun",   "samek", "ayin", "pe", "sade",  "qop",  "resh", "shin", "taw",
};

constexpr int code(LetterLabel label) { return static_cast<int>(label); }

constexpr LetterLabel letter_from_code(int c) { return static_cast<LetterLabel>(c); }

constexpr std::string_view name(LetterLabel label) { return kLetterNames[code(label)]; }

std::optional<LetterLabel> letter_from_name(std::string_view name);

// Comma-separated list of every valid letter name, for diagnostics.
std::string all_letter_names();

inline constexpr std::array<LetterLabel, kLetterCount> all_letters() {
  std::array<LetterLabel, kLetterCount> out{};
  for (int i = 0; i < kLetterCount; ++i) out[i] = letter_from_code(i);
  return out;
}

}  // namespace glyphforge
