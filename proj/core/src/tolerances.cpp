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

#include "qencode/tolerances.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>

namespace qencode {
namespace {

Tolerances &global_record() noexcept {
    static Tolerances record;
    return record;
}

}  // namespace

const Tolerances &tolerances() noexcept { return global_record(); }

void set_tolerances(const Tolerances &tol) noexcept { global_record() = tol; }

std::optional<Tolerances> tolerances_from_string(std::string_view text,
                                                 const Tolerances &base) {
    double value = 0.0;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value) ||
        value <= 0.0) {
        return std::nullopt;
    }
    Tolerances tol = base;
    tol.psd = value;
    tol.trace = value;
    tol.completeness = value;
    tol.frame = value;
    tol.eigen_cluster = value;
    tol.probability = value;
    return tol;
}

bool apply_environment_tolerances() {
    const char *env = std::getenv("QENCODE_TOL");
    if (env == nullptr) return true;
    auto parsed = tolerances_from_string(env, tolerances());
    if (!parsed) return false;
    set_tolerances(*parsed);
    return true;
}

}  // namespace qencode
