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
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qencode/quantum_model.hpp"

namespace qencode {

/// Optimum of the scalar LP
///   max sum_i p_i s_i  s.t. 0 <= s_i <= 1, sum_i s_i <= n,
/// which relaxes the eigenvalue program over POVMs.
struct RelaxationSolution {
    std::vector<double> sigmas;
    double value = 0.0;
};

/// Greedy optimum: s_i = 1 on the n largest priors (lowest indices win ties).
RelaxationSolution solve_scalar_relaxation(const PriorDistribution &priors, std::size_t n);

/// A feasible point of the dual LP
///   min sum_i eta_i + n mu  s.t. eta_i >= 0, mu >= 0, eta_i + mu >= p_i.
struct DualPoint {
    std::vector<double> etas;
    double mu = 0.0;
    double objective = 0.0;

    /// Largest violation of the dual constraints (<= 0 when feasible).
    double max_violation(const PriorDistribution &priors) const;
};

/// eta_i = p_i - p_{n+1} for i <= n, 0 otherwise; mu = p_{n+1}. For n == m,
/// where p_{n+1} does not exist, returns eta_i = p_i, mu = 0 (objective 1).
DualPoint dual_feasible_point(const PriorDistribution &priors, std::size_t n);

/// Dual objective minus primal value for the two points above. Zero
/// certifies that p_1 + ... + p_n is the optimum.
double duality_gap(const PriorDistribution &priors, std::size_t n);

struct LemmaSumCheck {
    bool holds = true;     ///< false only when the setup is optimal and the sum misses n
    bool optimal = false;  ///< P_d within `probability` of p_1 + ... + p_n
    double sum = 0.0;      ///< sum_i sigma_max(Pi_i)
};

/// An optimal setup must have sum_i sigma_max(Pi_i) == n (within 1e-8).
/// Non-optimal setups hold vacuously.
LemmaSumCheck check_lemma_sum_eigs(const EncodingSetup &setup);

/// Outcome of a randomized search over encoding setups.
struct SearchResult {
    double best_pd = 0.0;
    std::optional<EncodingSetup> best_setup;
    std::size_t best_trial = 0;
    std::size_t trials = 0;
    std::size_t tfes_samples = 0;
    std::size_t povm_samples = 0;
    /// Range of P_d over the tight-frame samples.
    double tfes_min_pd = 1.0;
    double tfes_max_pd = 0.0;
    /// Largest |sum sigma_max - n| among samples within 1e-9 of the bound.
    double worst_optimal_sigma_gap = 0.0;
    /// Number of sampled frames failing any of the three frame properties.
    std::size_t frame_property_failures = 0;
};

/// Samples tight-frame setups (synthesized with random feasible norm profiles
/// and rotated by a Haar unitary, or Haar-random frames) and random POVMs
/// paired with their optimal code-states. Deterministic given `seed`; trial t
/// draws from its own stream so trials are independent.
SearchResult brute_force_search(const PriorDistribution &priors, std::size_t n,
                                std::size_t trials, std::uint64_t seed);

/// Random generators used by the search, exposed for tests and benchmarks.
namespace sampling {

/// Generator for trial `trial` of a search seeded with `seed`.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial);

/// Haar-distributed k x k unitary.
ComplexMatrix haar_unitary(std::size_t k, std::mt19937_64 &rng);

/// Uniformly random-ish norm profile in [0, 1]^m with sum exactly n.
std::vector<double> random_norm_profile(std::size_t m, std::size_t n, std::mt19937_64 &rng);

/// Tight frame: synthesized profile rotated by a Haar n x n unitary.
FrameVectors random_tight_frame(std::size_t m, std::size_t n, std::mt19937_64 &rng);

/// m PSD elements G_i of random rank, normalized as S^{-1/2} G_i S^{-1/2}.
Povm random_povm(std::size_t m, std::size_t n, std::mt19937_64 &rng);

/// Random mixed state of random rank.
DensityMatrix random_state(std::size_t n, std::mt19937_64 &rng);

/// Sorted priors; with `ties` a few symbols share exactly equal values.
PriorDistribution random_priors(std::size_t m, std::mt19937_64 &rng, bool ties = false);

}  // namespace sampling

}  // namespace qencode
