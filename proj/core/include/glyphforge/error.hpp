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

#include <stdexcept>
#include <string>

namespace glyphforge {

// Base of every error the engine throws. Subclasses let callers (the CLI in
// particular) map failures onto distinct exit statuses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed glyph, palette, config or manifest document.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Glyph library is missing a letter or lists one twice.
class CompletenessError : public Error {
 public:
  using Error::Error;
};

// Outline geometry breaks an invariant (unclosed path, out-of-range point).
class GeometryError : public Error {
 public:
  using Error::Error;
};

class EmptyMaskError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Configuration values outside their declared ranges.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Output directory already holds generated data and overwriting was not
// requested.
class PartialOutputError : public IoError {
 public:
  using IoError::IoError;
};

}  // namespace glyphforge
