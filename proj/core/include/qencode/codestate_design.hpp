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
#include <vector>

#include "qencode/quantum_model.hpp"

namespace qencode {

/// Best code-states for a fixed measurement.
struct OptimalCodestates {
    std::vector<DensityMatrix> ensemble;
    /// sum_i p_i sigma_max(Pi_i).
    double pd_opt = 0.0;
    /// True iff every top eigenspace M(Pi_i) is one-dimensional.
    bool unique = false;
    /// arbitrary[i]: Pi_i == 0, any state is optimal and I/n was returned.
    std::vector<bool> arbitrary;
    /// dim M(Pi_i) (n for a zero element).
    std::vector<std::size_t> eigenspace_dims;
};

/// rho_i = projector onto the first basis vector of M(Pi_i); zero elements
/// (||Pi_i||_F <= zero_operator) get I/n and are flagged arbitrary.
OptimalCodestates optimal_codestates_for_povm(const Povm &povm,
                                              const PriorDistribution &priors);

/// Pairing of POVM elements with symbols.
struct Assignment {
    /// element[k] is the POVM element detecting symbol k.
    std::vector<std::size_t> element;
    /// sigma_max of the assigned elements, non-increasing.
    std::vector<double> sigma_max;
    /// P_d with optimal code-states under this pairing.
    double pd_opt = 0.0;
};

/// Sorts elements by sigma_max descending (stable, so ties keep their order)
/// so the largest priors meet the largest top eigenvalues.
Assignment sort_assignment(const Povm &povm, const PriorDistribution &priors);

/// The POVM reordered according to `assignment`.
Povm reorder(const Povm &povm, const Assignment &assignment);

}  // namespace qencode
