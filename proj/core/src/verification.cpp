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

#include "qencode/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qencode/codestate_design.hpp"
#include "qencode/error.hpp"
#include "qencode/optimal_encoding.hpp"
#include "qencode/tolerances.hpp"

namespace qencode {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    ComplexMatrix z(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) z(i, j) = Complex(normal(rng), normal(rng));
    }
    return z;
}

std::size_t uniform_index(std::size_t lo, std::size_t hi, std::mt19937_64 &rng) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

void require_dims(const PriorDistribution &priors, std::size_t n) {
    if (n == 0 || n > priors.size()) {
        throw InfeasibleError("dimension must satisfy 1 <= n <= m");
    }
}

}  // namespace

RelaxationSolution solve_scalar_relaxation(const PriorDistribution &priors, std::size_t n) {
    require_dims(priors, n);
    RelaxationSolution out;
    out.sigmas.assign(priors.size(), 0.0);
    // Priors are sorted, so the n largest coefficients are the first n.
    for (std::size_t i = 0; i < n; ++i) {
        out.sigmas[i] = 1.0;
        out.value += priors[i];
    }
    return out;
}

double DualPoint::max_violation(const PriorDistribution &priors) const {
    double worst = -mu;
    for (std::size_t i = 0; i < etas.size(); ++i) {
        worst = std::max(worst, -etas[i]);
        worst = std::max(worst, priors[i] - (etas[i] + mu));
    }
    return worst;
}

DualPoint dual_feasible_point(const PriorDistribution &priors, std::size_t n) {
    require_dims(priors, n);
    const std::size_t m = priors.size();
    DualPoint out;
    out.etas.assign(m, 0.0);
    if (n == m) {
        // Degenerate edge: no p_{n+1}. eta = p, mu = 0 is feasible with value 1.
        for (std::size_t i = 0; i < m; ++i) out.etas[i] = priors[i];
        out.mu = 0.0;
    } else {
        out.mu = priors[n];
        for (std::size_t i = 0; i < n; ++i) out.etas[i] = priors[i] - out.mu;
    }
    out.objective = std::accumulate(out.etas.begin(), out.etas.end(), 0.0) +
                    static_cast<double>(n) * out.mu;
    return out;
}

double duality_gap(const PriorDistribution &priors, std::size_t n) {
    return dual_feasible_point(priors, n).objective - solve_scalar_relaxation(priors, n).value;
}

LemmaSumCheck check_lemma_sum_eigs(const EncodingSetup &setup) {
    LemmaSumCheck out;
    for (const HermitianMatrix &element : setup.povm().elements()) {
        out.sum += eig_hermitian(element).eigenvalues(0);
    }
    const std::size_t n = setup.dim();
    if (n > setup.symbols()) return out;
    const double bound = setup.priors().head_sum(n);
    out.optimal = std::abs(detection_probability(setup) - bound) <= tolerances().probability;
    out.holds = !out.optimal || std::abs(out.sum - static_cast<double>(n)) <= 1e-8;
    return out;
}

namespace sampling {

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(~trial)));
}

ComplexMatrix haar_unitary(std::size_t k, std::mt19937_64 &rng) {
    const auto dim = static_cast<Eigen::Index>(k);
    const ComplexMatrix z = gaussian_matrix(dim, dim, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < dim; ++j) {
        const double magnitude = std::abs(r(j, j));
        if (magnitude > 0.0) q.col(j) *= r(j, j) / magnitude;
    }
    return q;
}

std::vector<double> random_norm_profile(std::size_t m, std::size_t n, std::mt19937_64 &rng) {
    std::vector<double> c(m, static_cast<double>(n) / static_cast<double>(m));
    if (m == n) return c;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t step = 0; step < 4 * m; ++step) {
        const std::size_t from = uniform_index(0, m - 1, rng);
        std::size_t to = uniform_index(0, m - 2, rng);
        if (to >= from) ++to;
        const double room = std::min(c[from], 1.0 - c[to]);
        // Occasionally push a pair to the boundary so 0/1 norms show up.
        const double amount = unit(rng) < 0.2 ? room : room * unit(rng);
        c[from] = std::clamp(c[from] - amount, 0.0, 1.0);
        c[to] = std::clamp(c[to] + amount, 0.0, 1.0);
    }
    return c;
}

FrameVectors random_tight_frame(std::size_t m, std::size_t n, std::mt19937_64 &rng) {
    const std::vector<double> profile = random_norm_profile(m, n, rng);
    const FrameVectors seed = synthesize_tight_frame(profile, n);
    return FrameVectors::from_rows(seed.coefficients() * haar_unitary(n, rng));
}

Povm random_povm(std::size_t m, std::size_t n, std::mt19937_64 &rng) {
    const auto dim = static_cast<Eigen::Index>(n);
    std::vector<ComplexMatrix> raw;
    ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
    std::size_t rank_sum = 0;
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t draw = uniform_index(1, n, rng);
        if (i + 1 == m && rank_sum + draw < n) draw = n;
        rank_sum += draw;
        const auto rank = static_cast<Eigen::Index>(draw);
        const ComplexMatrix x = gaussian_matrix(dim, rank, rng);
        raw.push_back(x * x.adjoint());
        total += raw.back();
    }
    const HermitianMatrix whitening = inverse_sqrt(HermitianMatrix(total), 0.0);
    std::vector<HermitianMatrix> elements;
    for (const ComplexMatrix &g : raw) {
        elements.emplace_back(whitening.matrix() * g * whitening.matrix());
    }
    return Povm(std::move(elements));
}

DensityMatrix random_state(std::size_t n, std::mt19937_64 &rng) {
    const auto dim = static_cast<Eigen::Index>(n);
    const auto rank = static_cast<Eigen::Index>(uniform_index(1, n, rng));
    const ComplexMatrix x = gaussian_matrix(dim, rank, rng);
    const ComplexMatrix rho = x * x.adjoint();
    return DensityMatrix(HermitianMatrix(rho / rho.trace().real()));
}

PriorDistribution random_priors(std::size_t m, std::mt19937_64 &rng, bool ties) {
    std::uniform_real_distribution<double> weight(0.05, 1.0);
    std::vector<double> w(m);
    if (ties) {
        const std::size_t levels = uniform_index(1, m, rng);
        std::vector<double> level_weight(levels);
        for (double &x : level_weight) x = weight(rng);
        for (double &x : w) x = level_weight[uniform_index(0, levels - 1, rng)];
    } else {
        for (double &x : w) x = weight(rng);
    }
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (double &x : w) x /= total;
    std::sort(w.begin(), w.end(), std::greater<>());
    return PriorDistribution(std::move(w));
}

}  // namespace sampling

SearchResult brute_force_search(const PriorDistribution &priors, std::size_t n,
                                std::size_t trials, std::uint64_t seed) {
    require_dims(priors, n);
    if (trials == 0) throw ValidationError("trials", "must be at least 1");
    const std::size_t m = priors.size();
    const double bound = priors.head_sum(n);
    const double tol = tolerances().probability;

    SearchResult result;
    result.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng = sampling::trial_engine(seed, t);
        std::optional<EncodingSetup> setup;
        switch (t % 3) {
            case 0:
            case 1: {
                const FrameVectors frame =
                    t % 3 == 0 ? sampling::random_tight_frame(m, n, rng)
                               : FrameVectors::from_rows(
                                     sampling::haar_unitary(m, rng).leftCols(
                                         static_cast<Eigen::Index>(n)));
                const FrameReport report = check_tight_frame(frame.vectors(), n);
                if (!report.norms_bounded || !report.unit_vectors_orthogonal ||
                    !report.norm_sum_matches_dim) {
                    ++result.frame_property_failures;
                }
                setup.emplace(tfes_from_frame(frame, priors));
                ++result.tfes_samples;
                break;
            }
            default: {
                const Povm raw = sampling::random_povm(m, n, rng);
                const Povm povm = reorder(raw, sort_assignment(raw, priors));
                setup.emplace(priors, optimal_codestates_for_povm(povm, priors).ensemble, povm);
                ++result.povm_samples;
                break;
            }
        }
        const double pd = detection_probability(*setup);
        if (t % 3 != 2) {
            result.tfes_min_pd = std::min(result.tfes_min_pd, pd);
            result.tfes_max_pd = std::max(result.tfes_max_pd, pd);
        }
        if (pd >= bound - tol) {
            double sigma_sum = 0.0;
            for (const HermitianMatrix &element : setup->povm().elements()) {
                sigma_sum += eig_hermitian(element).eigenvalues(0);
            }
            result.worst_optimal_sigma_gap =
                std::max(result.worst_optimal_sigma_gap,
                         std::abs(sigma_sum - static_cast<double>(n)));
        }
        if (!result.best_setup || pd > result.best_pd) {
            result.best_pd = pd;
            result.best_trial = t;
            result.best_setup = std::move(setup);
        }
    }
    return result;
}

}  // namespace qencode
