// Copyright 2026 The qencode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qencode/quantum_model.hpp"

namespace qencode {

// File formats (complex entries are [re, im], matrices are arrays of rows):
//   setup: { "dim": n, "priors": [...], "states": [matrix, ...], "povm": [matrix, ...] }
//   frame: { "dim": n, "vectors": [[[re, im], ...], ...] }
//   povm:  { "dim": n, "povm": [matrix, ...] }   (a setup file also works)
// Unknown top-level keys are ignored on input.

struct JsonOptions {
    /// Negative: compact single line.
    int indent = -1;
    /// Round every number to this many significant digits; 17 is lossless.
    int significant_digits = 17;
};

/// Throws ValidationError naming the offending field for malformed input or
/// any violated invariant.
EncodingSetup parse_setup(std::string_view json_text);
std::string setup_to_json(const EncodingSetup &setup, const JsonOptions &options = {});

FrameVectors parse_frame(std::string_view json_text);
std::string frame_to_json(const FrameVectors &frame, const JsonOptions &options = {});

Povm parse_povm(std::string_view json_text);

EncodingSetup load_setup(const std::filesystem::path &path);
void save_setup(const EncodingSetup &setup, const std::filesystem::path &path);

FrameVectors load_frame(const std::filesystem::path &path);
void save_frame(const FrameVectors &frame, const std::filesystem::path &path);

/// x rounded to `digits` significant decimal digits.
double round_significant(double x, int digits);

}  // namespace qencode
