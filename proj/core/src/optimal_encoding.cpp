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

#include "qencode/optimal_encoding.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <string>

#include "qencode/error.hpp"
#include "qencode/posterior.hpp"
#include "qencode/tolerances.hpp"

namespace qencode {
namespace {

std::string show(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.6g", x);
    return buffer;
}

void require_dim_at_most_symbols(std::size_t n, std::size_t m) {
    if (n == 0) throw InfeasibleError("dimension must be at least 1");
    if (n > m) {
        throw InfeasibleError("dimension " + std::to_string(n) + " exceeds symbol count " +
                              std::to_string(m));
    }
}

// Unitary DFT restricted to its first n columns: rows all have norm^2 n/m.
ComplexMatrix harmonic_frame(std::size_t m, std::size_t n) {
    const auto rows = static_cast<Eigen::Index>(m);
    const auto cols = static_cast<Eigen::Index>(n);
    ComplexMatrix c(rows, cols);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    for (Eigen::Index j = 0; j < rows; ++j) {
        for (Eigen::Index k = 0; k < cols; ++k) {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>(j * k) /
                                 static_cast<double>(m);
            c(j, k) = std::polar(scale, angle);
        }
    }
    return c;
}

// Rotates rows j and k of `c` in their common plane so that row j ends with
// squared norm `target`. `target` must lie between the two current squared
// norms; the sum of the two squared norms is preserved.
void rotate_rows(ComplexMatrix &c, Eigen::Index j, Eigen::Index k, double target) {
    const Eigen::RowVectorXcd x = c.row(j);
    const Eigen::RowVectorXcd y = c.row(k);
    const double a = x.squaredNorm();
    const double d = y.squaredNorm();
    const Complex b = (x.conjugate().array() * y.array()).sum();  // <x|y>

    // ||cos(t) x + sin(t) e^{-i arg b} y||^2
    //   = (a + d)/2 + (a - d)/2 cos(2t) + |b| sin(2t)
    const double half_diff = 0.5 * (a - d);
    const double radius = std::hypot(half_diff, std::abs(b));
    if (radius == 0.0) return;
    const double phase = std::atan2(std::abs(b), half_diff);
    const double ratio = std::clamp((target - 0.5 * (a + d)) / radius, -1.0, 1.0);
    const double theta = 0.5 * (phase + std::acos(ratio));

    const double cs = std::cos(theta);
    const Complex sn = std::polar(std::sin(theta), -std::arg(b));
    c.row(j) = cs * x + sn * y;
    c.row(k) = -std::conj(sn) * x + cs * y;
}

}  // namespace

double max_detection_probability(const PriorDistribution &priors, std::size_t n) {
    require_dim_at_most_symbols(n, priors.size());
    return priors.head_sum(n);
}

IndexClassification classify_indices(const PriorDistribution &priors, std::size_t n) {
    require_dim_at_most_symbols(n, priors.size());
    const double pivot = priors[n - 1];
    const double tol = tolerances().prior_equality;
    IndexClassification out;
    for (std::size_t i = 0; i < priors.size(); ++i) {
        if (priors[i] > pivot + tol) {
            out.above.push_back(i);
        } else if (priors[i] < pivot - tol) {
            out.below.push_back(i);
        } else {
            out.tied.push_back(i);
        }
    }
    return out;
}

EncodingSetup pseudo_classical_setup(const PriorDistribution &priors, std::size_t n,
                                     std::span<const ComplexVector> basis) {
    const std::size_t m = priors.size();
    require_dim_at_most_symbols(n, m);
    const auto dim = static_cast<Eigen::Index>(n);

    std::vector<ComplexVector> vectors;
    if (basis.empty()) {
        for (Eigen::Index k = 0; k < dim; ++k) {
            vectors.push_back(ComplexVector::Unit(dim, k));
        }
    } else {
        if (basis.size() < n) throw ValidationError("basis", "needs n vectors");
        vectors.assign(basis.begin(), basis.begin() + static_cast<std::ptrdiff_t>(n));
        ComplexMatrix gram(dim, dim);
        for (Eigen::Index a = 0; a < dim; ++a) {
            if (vectors[static_cast<std::size_t>(a)].size() != dim) {
                throw ValidationError("basis", "vector length differs from n");
            }
        }
        for (Eigen::Index a = 0; a < dim; ++a) {
            for (Eigen::Index b = 0; b < dim; ++b) {
                gram(a, b) = vectors[static_cast<std::size_t>(a)].dot(
                    vectors[static_cast<std::size_t>(b)]);
            }
        }
        const double residual = (gram - ComplexMatrix::Identity(dim, dim)).norm();
        if (residual > tolerances().frame) {
            throw ValidationError("basis", "not orthonormal", residual);
        }
    }

    std::vector<HermitianMatrix> elements;
    std::vector<DensityMatrix> states;
    for (std::size_t i = 0; i < n; ++i) {
        elements.push_back(HermitianMatrix::outer(vectors[i]));
        states.push_back(DensityMatrix::pure(vectors[i]));
    }
    if (m > n) {
        const DensityMatrix dont_care = dont_care_states(priors, n, vectors);
        for (std::size_t i = n; i < m; ++i) {
            elements.push_back(HermitianMatrix::zero(n));
            states.push_back(dont_care);
        }
    }
    return EncodingSetup(priors, std::move(states), Povm(std::move(elements)));
}

FrameVectors synthesize_tight_frame(std::span<const double> norms, std::size_t dim) {
    const std::size_t m = norms.size();
    if (dim == 0 || m == 0) throw InfeasibleError("frame needs dim >= 1 and at least one vector");
    for (std::size_t i = 0; i < m; ++i) {
        if (!(norms[i] >= 0.0 && norms[i] <= 1.0)) {
            throw InfeasibleError("norm profile fails majorization: norm[" + std::to_string(i) +
                                  "] = " + show(norms[i]) + " is outside [0, 1]");
        }
    }
    const double total = std::accumulate(norms.begin(), norms.end(), 0.0);
    if (std::abs(total - static_cast<double>(dim)) > 1e-12) {
        throw InfeasibleError("norm profile fails majorization: norms sum to " +
                              show(total) + ", expected " + std::to_string(dim));
    }

    const auto n = static_cast<Eigen::Index>(dim);
    const double equal = static_cast<double>(dim) / static_cast<double>(m);
    if (std::all_of(norms.begin(), norms.end(),
                    [&](double c) { return std::abs(c - equal) <= 1e-15; })) {
        return FrameVectors::from_rows(harmonic_frame(m, dim));
    }

    // Visit rows by target, largest first. Seeding the n largest with the
    // coordinate basis makes the current norms majorize the targets in this
    // order; every transfer below preserves that, and settles one more row.
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return norms[a] > norms[b]; });

    ComplexMatrix c = ComplexMatrix::Zero(static_cast<Eigen::Index>(m), n);
    for (Eigen::Index k = 0; k < n; ++k) {
        c(static_cast<Eigen::Index>(order[static_cast<std::size_t>(k)]), k) = 1.0;
    }

    constexpr double settled = 1e-14;
    const auto current = [&](std::size_t pos) {
        return c.row(static_cast<Eigen::Index>(order[pos])).squaredNorm();
    };
    const auto target = [&](std::size_t pos) { return norms[order[pos]]; };

    for (std::size_t step = 0; step < 2 * m; ++step) {
        // Last row (in target order) still holding surplus...
        std::optional<std::size_t> donor;
        for (std::size_t pos = m; pos-- > 0;) {
            if (current(pos) > target(pos) + settled) {
                donor = pos;
                break;
            }
        }
        if (!donor) break;
        // ...and the first row after it still short of its target.
        std::optional<std::size_t> taker;
        for (std::size_t pos = *donor + 1; pos < m; ++pos) {
            if (current(pos) < target(pos) - settled) {
                taker = pos;
                break;
            }
        }
        if (!taker) break;
        const double amount = std::min(current(*donor) - target(*donor),
                                       target(*taker) - current(*taker));
        rotate_rows(c, static_cast<Eigen::Index>(order[*donor]),
                    static_cast<Eigen::Index>(order[*taker]), current(*donor) - amount);
    }

    for (std::size_t i = 0; i < m; ++i) {
        if (norms[i] == 0.0) c.row(static_cast<Eigen::Index>(i)).setZero();
    }
    FrameVectors frame = FrameVectors::from_rows(c);
    const std::vector<double> achieved = frame.norms();
    for (std::size_t i = 0; i < m; ++i) {
        if (std::abs(achieved[i] - norms[i]) > tolerances().frame) {
            throw Error("synthesize_tight_frame: norm " + std::to_string(i) +
                        " did not converge");
        }
    }
    return frame;
}

OptimalityVerdict is_optimal_tfes(const FrameVectors &frame, const PriorDistribution &priors) {
    if (priors.size() != frame.size()) {
        throw ValidationError("priors", "length differs from the number of frame vectors");
    }
    const IndexClassification classes = classify_indices(priors, frame.dim());
    const double tol = tolerances().frame;
    OptimalityVerdict verdict;
    for (std::size_t i : classes.above) {
        const double c = frame[i].squaredNorm();
        if (std::abs(c - 1.0) > tol) verdict.add(i, "norm_above", c - 1.0);
    }
    for (std::size_t i : classes.below) {
        const double c = frame[i].squaredNorm();
        if (c > tol) verdict.add(i, "norm_below", c);
    }
    return verdict;
}

std::vector<ComplexVector> frame_vectors_of(const Povm &povm) {
    std::vector<ComplexVector> out;
    out.reserve(povm.size());
    for (const HermitianMatrix &element : povm.elements()) {
        const Eigendecomposition eig = eig_hermitian(element);
        const double sigma = std::max(0.0, eig.eigenvalues(0));
        if (element.frobenius_norm() <= tolerances().zero_operator) {
            out.push_back(ComplexVector::Zero(static_cast<Eigen::Index>(element.dim())));
        } else {
            out.push_back(std::sqrt(sigma) * eig.vector(0));
        }
    }
    return out;
}

OptimalityVerdict verify_optimal_setup(const EncodingSetup &setup) {
    const std::size_t n = setup.dim();
    const std::size_t m = setup.symbols();
    const Tolerances &tol = tolerances();
    const auto dim = static_cast<Eigen::Index>(n);
    OptimalityVerdict verdict;

    // Every element of an optimal detector has rank at most one.
    double sigma_sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const Eigen::VectorXd lambda = eig_hermitian(setup.povm()[i]).eigenvalues;
        sigma_sum += lambda(0);
        if (n > 1 && lambda(1) > tol.frame * std::max(1.0, std::abs(lambda(0)))) {
            verdict.add(i, "rank", lambda(1));
        }
    }

    const std::vector<ComplexVector> vectors = frame_vectors_of(setup.povm());
    ComplexMatrix resolution = ComplexMatrix::Zero(dim, dim);
    for (const ComplexVector &u : vectors) resolution += u * u.adjoint();
    const double frame_residual = (resolution - ComplexMatrix::Identity(dim, dim)).norm();
    if (frame_residual > tol.frame) verdict.add(std::nullopt, "frame", frame_residual);

    // Detected symbols use the normalized frame projector.
    for (std::size_t i = 0; i < m; ++i) {
        if (is_zero_vector(vectors[i])) continue;
        const ComplexMatrix expected =
            vectors[i] * vectors[i].adjoint() / vectors[i].squaredNorm();
        const double residual = (setup.state(i).op().matrix() - expected).norm();
        if (residual > tol.frame) verdict.add(i, "state", residual);
    }

    if (std::abs(sigma_sum - static_cast<double>(n)) > tol.frame) {
        verdict.add(std::nullopt, "sigma_sum", sigma_sum - static_cast<double>(n));
    }

    if (n > m) {
        verdict.add(std::nullopt, "dimension", static_cast<double>(n - m));
        return verdict;
    }

    const IndexClassification classes = classify_indices(setup.priors(), n);
    for (std::size_t i : classes.above) {
        const double c = vectors[i].squaredNorm();
        if (std::abs(c - 1.0) > tol.frame) verdict.add(i, "norm_above", c - 1.0);
    }
    for (std::size_t i : classes.below) {
        const double c = vectors[i].squaredNorm();
        if (c > tol.frame) verdict.add(i, "norm_below", c);
    }

    const TransitionMatrix transitions = transition_matrix(setup);
    for (std::size_t i : classes.above) {
        double worst = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            worst = std::max(worst, std::abs(transitions(j, i) - (i == j ? 1.0 : 0.0)));
        }
        if (worst > tol.probability) verdict.add(i, "transition_above", worst);
    }
    const std::vector<double> rates = detection_rates(setup);
    for (std::size_t i : classes.below) {
        if (rates[i] > tol.probability) verdict.add(i, "detect_below", rates[i]);
    }
    return verdict;
}

std::vector<ComplexVector> bb84_vectors() {
    const double r = 1.0 / std::numbers::sqrt2;
    ComplexVector zero(2), one(2), plus(2), minus(2);
    zero << 1.0, 0.0;
    one << 0.0, 1.0;
    plus << r, r;
    minus << r, -r;
    return {zero, one, plus, minus};
}

EncodingSetup bb84_setup() {
    std::vector<ComplexVector> scaled;
    for (const ComplexVector &u : bb84_vectors()) scaled.push_back(u / std::numbers::sqrt2);
    return tfes_from_frame(FrameVectors(std::move(scaled), 2), PriorDistribution::uniform(4));
}

}  // namespace qencode
