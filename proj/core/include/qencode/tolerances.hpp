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

#include <optional>
#include <string_view>

namespace qencode {

/// Every numeric threshold used by the library lives here.
struct Tolerances {
    /// Allowed |A - A^dagger| relative to the largest |entry|.
    double hermitian_asymmetry = 1e-12;
    /// Eigenvalue slack for PSD tests, relative to max(1, |lambda|_max).
    double psd = 1e-9;
    /// |Tr(rho) - 1| for density matrices.
    double trace = 1e-9;
    /// Frobenius residual of sum_i Pi_i - I.
    double completeness = 1e-9;
    /// Frobenius residual of sum_i |u_i><u_i| - I, and norm/orthogonality slack.
    double frame = 1e-9;
    /// Relative gap grouping eigenvalues into one eigenspace.
    double eigen_cluster = 1e-9;
    /// |sum p_i - 1|.
    double prior_sum = 1e-12;
    /// Absolute tolerance for p_i == p_n in the index classification.
    double prior_equality = 1e-12;
    /// Frobenius norm below which a POVM element counts as zero.
    double zero_operator = 1e-12;
    /// Pr{det i} at or below this is an impossible outcome.
    double impossible_outcome = 1e-12;
    /// Absolute width of the delta bisection.
    double bisection = 1e-10;
    /// Smallest eigenvalue of sum_k p_k rho_k for a spanning ensemble.
    double spanning = 1e-10;
    /// Equality slack for probabilities and detection values.
    double probability = 1e-9;
};

/// Process-wide tolerance record. Read-only after startup.
const Tolerances &tolerances() noexcept;

/// Replaces the process-wide record. Call before any concurrent work starts.
void set_tolerances(const Tolerances &tol) noexcept;

/// Parses a QENCODE_TOL value: a single positive real replacing the 1e-9
/// family (psd, trace, completeness, frame, eigen_cluster, probability).
std::optional<Tolerances> tolerances_from_string(std::string_view text,
                                                 const Tolerances &base);

/// Applies QENCODE_TOL from the environment when set and well-formed.
/// Returns false when the variable is present but malformed.
bool apply_environment_tolerances();

}  // namespace qencode
