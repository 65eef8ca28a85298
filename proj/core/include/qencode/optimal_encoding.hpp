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
#include <string>
#include <vector>

#include "qencode/quantum_model.hpp"

namespace qencode {

/// Largest P_d reachable with n dimensions: p_1 + ... + p_n.
/// Throws InfeasibleError when n > m or n == 0.
double max_detection_probability(const PriorDistribution &priors, std::size_t n);

/// Symbols split by their prior against p_n (0-based indices, sorted):
/// above, equal to (within prior_equality), and below.
struct IndexClassification {
    std::vector<std::size_t> above;  ///< p_i > p_n: must be encoded orthonormally
    std::vector<std::size_t> tied;   ///< p_i == p_n: free, never empty
    std::vector<std::size_t> below;  ///< p_i < p_n: must be discarded
};

IndexClassification classify_indices(const PriorDistribution &priors, std::size_t n);

/// One failed optimality condition.
struct Violation {
    std::optional<std::size_t> index;  ///< symbol, when the condition is per-symbol
    std::string constraint;
    double residual = 0.0;
};

struct OptimalityVerdict {
    bool optimal = true;
    std::vector<Violation> violations;

    void add(std::optional<std::size_t> index, std::string constraint, double residual) {
        violations.push_back({index, std::move(constraint), residual});
        optimal = false;
    }
};

/// Pseudo-classical setup: Pi_i = rho_i = |u_i><u_i| for the n largest priors,
/// Pi_i = 0 for the rest, whose don't-care states are the prior-weighted
/// mixture from dont_care_states. `basis` defaults to the standard basis and
/// must be orthonormal otherwise.
EncodingSetup pseudo_classical_setup(const PriorDistribution &priors, std::size_t n,
                                     std::span<const ComplexVector> basis = {});

/// m vectors in C^n with <u_i|u_i> = norms[i] and sum |u_i><u_i| = I.
///
/// An all-equal profile returns the first n columns of the m x m unitary DFT.
/// Otherwise rows are visited by target norm, largest first: the n largest
/// start as the coordinate basis, then plane rotations move norm from the
/// last row with surplus to the next row short of its target, settling one
/// row per rotation (at most m - 1). Column orthonormality, hence the frame
/// property, is preserved throughout. Throws InfeasibleError unless
/// 0 <= norms[i] <= 1 and |sum norms - n| <= 1e-12.
FrameVectors synthesize_tight_frame(std::span<const double> norms, std::size_t dim);

/// Norm conditions for a TFES to reach p_1 + ... + p_n: unit norm on
/// `above`, zero norm on `below`. Throws NotTightFrameError for a non-frame and
/// InfeasibleError when n > m.
OptimalityVerdict is_optimal_tfes(const FrameVectors &frame, const PriorDistribution &priors);

/// Full characterization check for an arbitrary setup: rank-one elements,
/// frame resolution, normalized frame projectors as states on detected
/// symbols, the norm conditions, sum_i sigma_max(Pi_i) == n, and the
/// transition-matrix consequences (perfect recovery of `above`, `below`
/// never detected). Never throws for a valid setup; failures are violations.
OptimalityVerdict verify_optimal_setup(const EncodingSetup &setup);

/// u_i = sqrt(sigma_max) * top eigenvector of each rank <= 1 element.
std::vector<ComplexVector> frame_vectors_of(const Povm &povm);

/// Four BB84 states in C^2 (computational and Hadamard bases), uniform
/// priors, Pi_ij = |u_ij><u_ij| / 2. Symbol order: 0, 1, +, -.
EncodingSetup bb84_setup();

/// The BB84 unit vectors in symbol order.
std::vector<ComplexVector> bb84_vectors();

}  // namespace qencode
