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

#include "qencode/quantum_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "qencode/error.hpp"
#include "qencode/posterior.hpp"
#include "qencode/tolerances.hpp"

namespace qencode {
namespace {

std::string indexed(const char *name, std::size_t i) {
    return std::string(name) + "[" + std::to_string(i) + "]";
}

std::string show(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.6g", x);
    return buffer;
}

}  // namespace

NotTightFrameError::NotTightFrameError(std::string field, double residual)
    : ValidationError(std::move(field),
                      "not a tight frame: ||sum |u><u| - I||_F = " +
                          show(residual),
                      residual) {}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(HermitianMatrix op) : op_(std::move(op)) {
    const Tolerances &tol = tolerances();
    const double trace_error = std::abs(op_.trace() - 1.0);
    if (trace_error > tol.trace) {
        throw ValidationError("state", "trace differs from 1", trace_error);
    }
    const Eigen::VectorXd lambda = eig_hermitian(op_).eigenvalues;
    const double scale = std::max(1.0, lambda.cwiseAbs().maxCoeff());
    if (lambda.minCoeff() < -tol.psd * scale) {
        throw ValidationError("state", "not positive semidefinite", lambda.minCoeff());
    }
}

DensityMatrix DensityMatrix::pure(const ComplexVector &v) {
    const double norm2 = v.squaredNorm();
    if (!(norm2 > 0.0)) throw ValidationError("state", "zero vector has no pure state");
    return DensityMatrix(HermitianMatrix::outer(v) * (1.0 / norm2));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    return DensityMatrix(HermitianMatrix::identity(dim) *
                         (1.0 / static_cast<double>(dim)));
}

// ---------------------------------------------------------------------------
// Povm

Povm::Povm(std::vector<HermitianMatrix> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw ValidationError("povm", "needs at least one element");
    const Tolerances &tol = tolerances();
    const std::size_t n = elements_.front().dim();
    HermitianMatrix total = HermitianMatrix::zero(n);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i].dim() != n) {
            throw ValidationError(indexed("povm", i), "dimension mismatch");
        }
        if (!is_psd(elements_[i], tol.psd)) {
            throw ValidationError(indexed("povm", i), "not positive semidefinite",
                                  eig_hermitian(elements_[i]).eigenvalues.minCoeff());
        }
        total = total + elements_[i];
    }
    const double residual = (total - HermitianMatrix::identity(n)).frobenius_norm();
    if (residual > tol.completeness) {
        throw ValidationError("povm",
                              "elements do not sum to the identity (residual " +
                                  show(residual) + ")",
                              residual);
    }
}

// ---------------------------------------------------------------------------
// PriorDistribution

PriorDistribution::PriorDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
    if (probs_.empty()) throw ValidationError("priors", "needs at least one symbol");
    const Tolerances &tol = tolerances();
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        if (!std::isfinite(probs_[i]) || probs_[i] <= 0.0) {
            throw ValidationError(indexed("priors", i), "must be strictly positive",
                                  probs_[i]);
        }
        if (i > 0 && probs_[i] > probs_[i - 1] + tol.prior_equality) {
            throw ValidationError(indexed("priors", i),
                                  "priors must be sorted non-increasing",
                                  probs_[i] - probs_[i - 1]);
        }
    }
    const double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
    if (std::abs(total - 1.0) > tol.prior_sum) {
        throw ValidationError("priors", "do not sum to 1", total - 1.0);
    }
}

PriorDistribution PriorDistribution::uniform(std::size_t m) {
    return PriorDistribution(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

double PriorDistribution::head_sum(std::size_t k) const {
    k = std::min(k, probs_.size());
    return std::accumulate(probs_.begin(),
                           probs_.begin() + static_cast<std::ptrdiff_t>(k), 0.0);
}

SortedPriors sort_priors(std::vector<double> probs) {
    std::vector<std::size_t> order(probs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return probs[a] > probs[b]; });
    std::vector<double> sorted;
    sorted.reserve(probs.size());
    for (std::size_t k : order) sorted.push_back(probs[k]);
    return SortedPriors{PriorDistribution(std::move(sorted)), std::move(order)};
}

// ---------------------------------------------------------------------------
// EncodingSetup

EncodingSetup::EncodingSetup(PriorDistribution priors,
                             std::vector<DensityMatrix> states, Povm povm)
    : priors_(std::move(priors)), states_(std::move(states)), povm_(std::move(povm)) {
    const std::size_t m = priors_.size();
    if (states_.size() != m) {
        throw ValidationError("states", "expected " + std::to_string(m) +
                                            " states, got " +
                                            std::to_string(states_.size()));
    }
    if (povm_.size() != m) {
        throw ValidationError("povm", "expected " + std::to_string(m) +
                                          " elements, got " +
                                          std::to_string(povm_.size()));
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (states_[i].dim() != povm_.dim()) {
            throw ValidationError(indexed("states", i), "dimension mismatch");
        }
    }
}

HermitianMatrix EncodingSetup::average_state() const {
    HermitianMatrix total = HermitianMatrix::zero(dim());
    for (std::size_t k = 0; k < symbols(); ++k) {
        total = total + states_[k].op() * priors_[k];
    }
    return total;
}

bool EncodingSetup::ensemble_spans() const {
    return eig_hermitian(average_state()).eigenvalues.minCoeff() >
           tolerances().spanning;
}

// ---------------------------------------------------------------------------
// Statistics

TransitionMatrix::TransitionMatrix(Eigen::MatrixXd probs) : probs_(std::move(probs)) {
    const double tol = tolerances().completeness;
    if (probs_.rows() != probs_.cols() || probs_.rows() < 1) {
        throw ValidationError("transition", "must be square and nonempty");
    }
    if (probs_.minCoeff() < -tol || probs_.maxCoeff() > 1.0 + tol) {
        throw ValidationError("transition", "entry outside [0, 1]");
    }
    const Eigen::VectorXd column_error =
        (probs_.colwise().sum().array() - 1.0).abs().matrix().transpose();
    if (column_error.maxCoeff() > tol) {
        throw ValidationError("transition", "column does not sum to 1",
                              column_error.maxCoeff());
    }
}

TransitionMatrix transition_matrix(const EncodingSetup &setup) {
    const auto m = static_cast<Eigen::Index>(setup.symbols());
    Eigen::MatrixXd probs(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            probs(i, j) = trace_product(setup.povm()[static_cast<std::size_t>(i)],
                                        setup.state(static_cast<std::size_t>(j)).op());
        }
    }
    return TransitionMatrix(std::move(probs));
}

double detection_probability(const EncodingSetup &setup) {
    double pd = 0.0;
    for (std::size_t i = 0; i < setup.symbols(); ++i) {
        pd += setup.priors()[i] * trace_product(setup.povm()[i], setup.state(i).op());
    }
    return pd;
}

std::vector<double> detection_rates(const EncodingSetup &setup) {
    const HermitianMatrix average = setup.average_state();
    std::vector<double> rates;
    rates.reserve(setup.symbols());
    for (const HermitianMatrix &element : setup.povm().elements()) {
        rates.push_back(trace_product(element, average));
    }
    return rates;
}

// ---------------------------------------------------------------------------
// Frames

FrameReport check_tight_frame(std::span<const ComplexVector> vectors, std::size_t dim) {
    if (vectors.empty()) throw ValidationError("vectors", "frame needs at least one vector");
    if (dim < 1) throw ValidationError("dim", "must be at least 1");
    const auto n = static_cast<Eigen::Index>(dim);
    const auto m = static_cast<Eigen::Index>(vectors.size());
    const double tol = tolerances().frame;

    ComplexMatrix coefficients(m, n);
    for (Eigen::Index i = 0; i < m; ++i) {
        const ComplexVector &u = vectors[static_cast<std::size_t>(i)];
        if (u.size() != n) {
            throw ValidationError(indexed("vectors", static_cast<std::size_t>(i)),
                                  "length differs from dim");
        }
        coefficients.row(i) = u.adjoint();
    }

    FrameReport report;
    // sum_i |u_i><u_i| = C^dagger C with C's rows u_i^dagger.
    const ComplexMatrix resolution = coefficients.adjoint() * coefficients;
    report.residual = (resolution - ComplexMatrix::Identity(n, n)).norm();
    if (report.residual > tol) throw NotTightFrameError("vectors", report.residual);

    report.gram = coefficients * coefficients.adjoint();  // (i,j) = <u_i|u_j>
    report.norms.resize(vectors.size());
    for (Eigen::Index i = 0; i < m; ++i) {
        report.norms[static_cast<std::size_t>(i)] = report.gram(i, i).real();
    }
    report.norm_sum = std::accumulate(report.norms.begin(), report.norms.end(), 0.0);
    report.norms_bounded = std::all_of(report.norms.begin(), report.norms.end(),
                                       [&](double c) { return c <= 1.0 + tol; });
    report.norm_sum_matches_dim =
        std::abs(report.norm_sum - static_cast<double>(dim)) <= tol;
    report.unit_vectors_orthogonal = true;
    for (Eigen::Index i = 0; i < m; ++i) {
        if (std::abs(report.norms[static_cast<std::size_t>(i)] - 1.0) > tol) continue;
        for (Eigen::Index j = 0; j < m; ++j) {
            if (j != i && std::abs(report.gram(i, j)) > tol) {
                report.unit_vectors_orthogonal = false;
            }
        }
    }
    return report;
}

FrameVectors::FrameVectors(std::vector<ComplexVector> vectors, std::size_t dim)
    : vectors_(std::move(vectors)), dim_(dim) {
    check_tight_frame(vectors_, dim_);
}

FrameVectors FrameVectors::from_rows(const ComplexMatrix &coefficients) {
    std::vector<ComplexVector> vectors;
    vectors.reserve(static_cast<std::size_t>(coefficients.rows()));
    for (Eigen::Index i = 0; i < coefficients.rows(); ++i) {
        vectors.emplace_back(coefficients.row(i).adjoint());
    }
    return FrameVectors(std::move(vectors), static_cast<std::size_t>(coefficients.cols()));
}

std::vector<double> FrameVectors::norms() const {
    std::vector<double> out;
    out.reserve(vectors_.size());
    for (const ComplexVector &u : vectors_) out.push_back(u.squaredNorm());
    return out;
}

ComplexMatrix FrameVectors::coefficients() const {
    ComplexMatrix c(static_cast<Eigen::Index>(size()), static_cast<Eigen::Index>(dim_));
    for (std::size_t i = 0; i < size(); ++i) {
        c.row(static_cast<Eigen::Index>(i)) = vectors_[i].adjoint();
    }
    return c;
}

bool is_zero_vector(const ComplexVector &u) {
    return u.squaredNorm() <= tolerances().zero_operator;
}

EncodingSetup tfes_from_frame(const FrameVectors &frame, const PriorDistribution &priors,
                              const std::vector<std::optional<DensityMatrix>> &dont_care) {
    const std::size_t m = frame.size();
    if (priors.size() != m) {
        throw ValidationError("priors", "length differs from the number of frame vectors");
    }
    if (!dont_care.empty() && dont_care.size() != m) {
        throw ValidationError("dont_care", "must be empty or have one entry per symbol");
    }
    const double tol = tolerances().frame;
    const std::size_t n = frame.dim();

    std::vector<std::size_t> unit_indices;
    bool pseudo_classical = true;
    for (std::size_t i = 0; i < m; ++i) {
        const double c = frame[i].squaredNorm();
        if (std::abs(c - 1.0) <= tol) {
            unit_indices.push_back(i);
        } else if (!is_zero_vector(frame[i])) {
            pseudo_classical = false;
        }
    }

    std::optional<DensityMatrix> fallback;
    auto default_state = [&]() -> const DensityMatrix & {
        if (!fallback) {
            if (pseudo_classical) {
                std::vector<ComplexVector> basis;
                for (std::size_t i : unit_indices) basis.push_back(frame[i]);
                fallback = dont_care_state(priors, unit_indices, basis);
            } else {
                fallback = DensityMatrix::maximally_mixed(n);
            }
        }
        return *fallback;
    };

    std::vector<HermitianMatrix> elements;
    std::vector<DensityMatrix> states;
    elements.reserve(m);
    states.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        elements.push_back(HermitianMatrix::outer(frame[i]));
        if (!is_zero_vector(frame[i])) {
            states.push_back(DensityMatrix::pure(frame[i]));
        } else if (!dont_care.empty() && dont_care[i]) {
            if (dont_care[i]->dim() != n) {
                throw ValidationError(indexed("dont_care", i), "dimension mismatch");
            }
            states.push_back(*dont_care[i]);
        } else {
            states.push_back(default_state());
        }
    }
    return EncodingSetup(priors, std::move(states), Povm(std::move(elements)));
}

}  // namespace qencode
