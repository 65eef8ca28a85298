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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qencode/hermitian.hpp"
#include "qencode/quantum_model.hpp"

namespace qencode {

/// P_p(i) = p_i Tr(Pi_i rho_i) / Pr{det i}. Outcomes with
/// Pr{det i} <= impossible_outcome are std::nullopt.
std::vector<std::optional<double>> posterior_probabilities(const EncodingSetup &setup);

/// min_i P_p(i). Throws IllDefinedError when some outcome never occurs; use
/// effective_worst_case_posterior in that case.
double worst_case_posterior(const EncodingSetup &setup);

/// Minimum of P_p(i) over the outcomes that can occur.
double effective_worst_case_posterior(const EncodingSetup &setup);

/// A_i(delta) = (1 - delta) sum_k p_k rho_k - p_i rho_i.
HermitianMatrix posterior_bound_operator(std::span<const DensityMatrix> ensemble,
                                         const PriorDistribution &priors,
                                         std::size_t index, double delta);

/// Witness that every measurement has P_p <= bound: A_index(delta) is PSD.
/// The bound is a statement about P_p. When some POVM elements vanish the
/// same number is reported next to P_p^eff for comparison only.
struct PosteriorBoundCertificate {
    std::size_t index = 0;
    double delta = 0.0;
    double bound = 1.0;  ///< 1 - delta
    HermitianMatrix op = HermitianMatrix::zero(1);
    /// Largest certified delta for every index, the certificate takes the max.
    std::vector<double> per_index_delta;
};

/// Largest delta in [0, 1] with A_index(delta) PSD, by bisection.
/// A_i(delta) is non-increasing in delta and A_i(0) >= 0, so the PSD set is
/// an interval [.., delta_i*]. Precision is `Tolerances::bisection`.
double max_certified_delta(std::span<const DensityMatrix> ensemble,
                           const PriorDistribution &priors, std::size_t index);

/// Best certificate over all indices (ties go to the lowest index). Requires a
/// spanning ensemble: throws ValidationError when the smallest eigenvalue of
/// sum_k p_k rho_k is at or below `Tolerances::spanning`.
PosteriorBoundCertificate posterior_upper_bound(std::span<const DensityMatrix> ensemble,
                                                const PriorDistribution &priors);

/// Don't-care state for the pseudo-classical setup:
/// sum_{i<n} p_i |u_i><u_i| / sum_{i<n} p_i over the first n priors and the
/// given orthonormal basis.
DensityMatrix dont_care_states(const PriorDistribution &priors, std::size_t n,
                               std::span<const ComplexVector> basis);

/// Same mixture over an arbitrary set of detected symbols; `basis[k]` is the
/// unit vector of symbol `detected[k]`.
DensityMatrix dont_care_state(const PriorDistribution &priors,
                              std::span<const std::size_t> detected,
                              std::span<const ComplexVector> basis);

}  // namespace qencode
