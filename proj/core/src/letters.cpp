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

#include "glyphforge/letters.hpp"

namespace glyphforge {

std::optional<LetterLabel> letter_from_name(std::string_view name) {
  for (int i = 0; i < kLetterCount; ++i) {
    if (kLetterNames[i] == name) return letter_from_code(i);
  }
  return std::nullopt;
}

std::string all_letter_names() {
  std::string out;
  for (std::string_view n : kLetterNames) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace glyphforge
