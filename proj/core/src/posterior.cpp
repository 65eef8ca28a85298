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

#include "qencode/posterior.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qencode/error.hpp"
#include "qencode/tolerances.hpp"

namespace qencode {
namespace {

HermitianMatrix weighted_sum(std::span<const DensityMatrix> ensemble,
                             const PriorDistribution &priors) {
    if (ensemble.empty() || ensemble.size() != priors.size()) {
        throw ValidationError("ensemble", "length must match the priors");
    }
    HermitianMatrix total = HermitianMatrix::zero(ensemble.front().dim());
    for (std::size_t k = 0; k < ensemble.size(); ++k) {
        total = total + ensemble[k].op() * priors[k];
    }
    return total;
}

// Strict test: the certificate must hold at the returned delta.
bool strictly_psd(const HermitianMatrix &a) {
    return eig_hermitian(a).eigenvalues.minCoeff() >= 0.0;
}

double bisect_delta(const HermitianMatrix &average, const HermitianMatrix &weighted_state) {
    const auto op_at = [&](double delta) { return average * (1.0 - delta) - weighted_state; };
    // A_i(0) = sum_{k != i} p_k rho_k >= 0 analytically; A_i(1) = -p_i rho_i is not.
    double lo = 0.0;
    double hi = 1.0;
    const double width = tolerances().bisection;
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        if (strictly_psd(op_at(mid))) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

}  // namespace

std::vector<std::optional<double>> posterior_probabilities(const EncodingSetup &setup) {
    const std::vector<double> rates = detection_rates(setup);
    const double impossible = tolerances().impossible_outcome;
    std::vector<std::optional<double>> out(setup.symbols());
    for (std::size_t i = 0; i < setup.symbols(); ++i) {
        if (rates[i] <= impossible) continue;
        const double correct =
            setup.priors()[i] * trace_product(setup.povm()[i], setup.state(i).op());
        out[i] = correct / rates[i];
    }
    return out;
}

double worst_case_posterior(const EncodingSetup &setup) {
    const auto posteriors = posterior_probabilities(setup);
    double worst = 1.0;
    for (std::size_t i = 0; i < posteriors.size(); ++i) {
        if (!posteriors[i]) {
            throw IllDefinedError("outcome " + std::to_string(i) +
                                  " never occurs, so P_p is undefined; use the "
                                  "effective worst-case posterior instead");
        }
        worst = std::min(worst, *posteriors[i]);
    }
    return worst;
}

double effective_worst_case_posterior(const EncodingSetup &setup) {
    const auto posteriors = posterior_probabilities(setup);
    std::optional<double> worst;
    for (const auto &p : posteriors) {
        if (p) worst = worst ? std::min(*worst, *p) : *p;
    }
    if (!worst) throw IllDefinedError("no outcome occurs with positive probability");
    return *worst;
}

HermitianMatrix posterior_bound_operator(std::span<const DensityMatrix> ensemble,
                                         const PriorDistribution &priors,
                                         std::size_t index, double delta) {
    const HermitianMatrix average = weighted_sum(ensemble, priors);
    if (index >= ensemble.size()) throw ValidationError("index", "out of range");
    return average * (1.0 - delta) - ensemble[index].op() * priors[index];
}

double max_certified_delta(std::span<const DensityMatrix> ensemble,
                           const PriorDistribution &priors, std::size_t index) {
    const HermitianMatrix average = weighted_sum(ensemble, priors);
    if (index >= ensemble.size()) throw ValidationError("index", "out of range");
    return bisect_delta(average, ensemble[index].op() * priors[index]);
}

PosteriorBoundCertificate posterior_upper_bound(std::span<const DensityMatrix> ensemble,
                                                const PriorDistribution &priors) {
    const HermitianMatrix average = weighted_sum(ensemble, priors);
    const double smallest = eig_hermitian(average).eigenvalues.minCoeff();
    if (smallest <= tolerances().spanning) {
        throw ValidationError("ensemble", "does not span the state space", smallest);
    }

    PosteriorBoundCertificate cert;
    cert.per_index_delta.reserve(ensemble.size());
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        cert.per_index_delta.push_back(bisect_delta(average, ensemble[i].op() * priors[i]));
    }
    const double best =
        *std::max_element(cert.per_index_delta.begin(), cert.per_index_delta.end());
    // Mirror-image ensembles give equal deltas up to bisection noise.
    const double slack = tolerances().bisection;
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        if (cert.per_index_delta[i] >= best - slack) {
            cert.index = i;
            break;
        }
    }
    cert.delta = cert.per_index_delta[cert.index];
    cert.bound = 1.0 - cert.delta;
    cert.op = average * (1.0 - cert.delta) - ensemble[cert.index].op() * priors[cert.index];
    return cert;
}

DensityMatrix dont_care_state(const PriorDistribution &priors,
                              std::span<const std::size_t> detected,
                              std::span<const ComplexVector> basis) {
    if (detected.empty() || detected.size() != basis.size()) {
        throw ValidationError("basis", "need one basis vector per detected symbol");
    }
    const auto n = basis.front().size();
    ComplexMatrix mixture = ComplexMatrix::Zero(n, n);
    double weight = 0.0;
    for (std::size_t k = 0; k < detected.size(); ++k) {
        if (detected[k] >= priors.size()) throw ValidationError("detected", "index out of range");
        if (basis[k].size() != n) throw ValidationError("basis", "dimension mismatch");
        const double p = priors[detected[k]];
        mixture += p * (basis[k] * basis[k].adjoint());
        weight += p;
    }
    return DensityMatrix(HermitianMatrix(mixture / weight));
}

DensityMatrix dont_care_states(const PriorDistribution &priors, std::size_t n,
                               std::span<const ComplexVector> basis) {
    if (n > priors.size()) throw InfeasibleError("dont_care_states: n exceeds symbol count");
    if (basis.size() < n) throw ValidationError("basis", "needs n vectors");
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const Complex overlap = basis[a].dot(basis[b]);
            const double expected = a == b ? 1.0 : 0.0;
            if (std::abs(overlap - expected) > tolerances().frame) {
                throw ValidationError("basis", "not orthonormal", std::abs(overlap - expected));
            }
        }
    }
    std::vector<std::size_t> detected(n);
    std::iota(detected.begin(), detected.end(), std::size_t{0});
    return dont_care_state(priors, detected, basis.first(n));
}

}  // namespace qencode
