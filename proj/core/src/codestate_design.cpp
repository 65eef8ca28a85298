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

#include "qencode/codestate_design.hpp"

#include <algorithm>
#include <numeric>

#include "qencode/error.hpp"
#include "qencode/tolerances.hpp"

namespace qencode {
namespace {

void require_matching(const Povm &povm, const PriorDistribution &priors) {
    if (povm.size() != priors.size()) {
        throw ValidationError("priors", "length differs from the number of POVM elements");
    }
}

}  // namespace

OptimalCodestates optimal_codestates_for_povm(const Povm &povm,
                                              const PriorDistribution &priors) {
    require_matching(povm, priors);
    const std::size_t n = povm.dim();
    OptimalCodestates out;
    out.unique = true;
    for (std::size_t i = 0; i < povm.size(); ++i) {
        const HermitianMatrix &element = povm[i];
        if (element.frobenius_norm() <= tolerances().zero_operator) {
            out.ensemble.push_back(DensityMatrix::maximally_mixed(n));
            out.arbitrary.push_back(true);
            out.eigenspace_dims.push_back(n);
            if (n != 1) out.unique = false;
            continue;
        }
        const MaxEigenspace top = max_eigenpair(element);
        out.ensemble.push_back(DensityMatrix::pure(top.basis.front()));
        out.arbitrary.push_back(false);
        out.eigenspace_dims.push_back(top.dimension());
        if (top.dimension() != 1) out.unique = false;
        out.pd_opt += priors[i] * top.sigma_max;
    }
    return out;
}

Assignment sort_assignment(const Povm &povm, const PriorDistribution &priors) {
    require_matching(povm, priors);
    std::vector<double> sigma(povm.size());
    for (std::size_t i = 0; i < povm.size(); ++i) {
        sigma[i] = max_eigenpair(povm[i]).sigma_max;
    }
    Assignment out;
    out.element.resize(povm.size());
    std::iota(out.element.begin(), out.element.end(), std::size_t{0});
    std::stable_sort(out.element.begin(), out.element.end(),
                     [&](std::size_t a, std::size_t b) { return sigma[a] > sigma[b]; });
    for (std::size_t k = 0; k < out.element.size(); ++k) {
        out.sigma_max.push_back(sigma[out.element[k]]);
        out.pd_opt += priors[k] * out.sigma_max.back();
    }
    return out;
}

Povm reorder(const Povm &povm, const Assignment &assignment) {
    std::vector<HermitianMatrix> elements;
    elements.reserve(povm.size());
    for (std::size_t k : assignment.element) elements.push_back(povm[k]);
    return Povm(std::move(elements));
}

}  // namespace qencode
