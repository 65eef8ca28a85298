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

namespace qencode {

/// Unit-trace PSD operator.
class DensityMatrix {
   public:
    explicit DensityMatrix(HermitianMatrix op);

    /// |v><v| / <v|v>. Throws ValidationError for the zero vector.
    static DensityMatrix pure(const ComplexVector &v);
    /// I / n.
    static DensityMatrix maximally_mixed(std::size_t dim);

    const HermitianMatrix &op() const noexcept { return op_; }
    std::size_t dim() const noexcept { return op_.dim(); }

   private:
    HermitianMatrix op_;
};

/// m PSD elements of a common dimension summing to the identity.
class Povm {
   public:
    explicit Povm(std::vector<HermitianMatrix> elements);

    std::size_t size() const noexcept { return elements_.size(); }
    std::size_t dim() const noexcept { return elements_.front().dim(); }
    const HermitianMatrix &operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<HermitianMatrix> &elements() const noexcept { return elements_; }

   private:
    std::vector<HermitianMatrix> elements_;
};

/// Strictly positive probabilities, summing to one, sorted non-increasing.
class PriorDistribution {
   public:
    explicit PriorDistribution(std::vector<double> probs);

    static PriorDistribution uniform(std::size_t m);

    std::size_t size() const noexcept { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    const std::vector<double> &probs() const noexcept { return probs_; }
    /// p_1 + ... + p_k.
    double head_sum(std::size_t k) const;

   private:
    std::vector<double> probs_;
};

/// Sorted priors plus the map back to the caller's order:
/// `original_index[k]` is the caller's index of sorted position k.
struct SortedPriors {
    PriorDistribution priors;
    std::vector<std::size_t> original_index;
};

/// Normalizes nothing; validates positivity and the unit sum, then sorts
/// non-increasing (stable).
SortedPriors sort_priors(std::vector<double> probs);

/// Priors, code-states and measurement, all of length m and dimension n.
class EncodingSetup {
   public:
    EncodingSetup(PriorDistribution priors, std::vector<DensityMatrix> states,
                  Povm povm);

    std::size_t symbols() const noexcept { return priors_.size(); }
    std::size_t dim() const noexcept { return povm_.dim(); }
    const PriorDistribution &priors() const noexcept { return priors_; }
    const std::vector<DensityMatrix> &states() const noexcept { return states_; }
    const DensityMatrix &state(std::size_t i) const { return states_[i]; }
    const Povm &povm() const noexcept { return povm_; }

    /// sum_k p_k rho_k.
    HermitianMatrix average_state() const;
    /// Whether the ensemble spans C^n. Non-spanning ensembles are accepted
    /// but callers should warn; no projection is attempted.
    bool ensemble_spans() const;

   private:
    PriorDistribution priors_;
    std::vector<DensityMatrix> states_;
    Povm povm_;
};

/// probs(detected, sent) = Pr{detect i | sent j} = Tr(Pi_i rho_j).
class TransitionMatrix {
   public:
    explicit TransitionMatrix(Eigen::MatrixXd probs);

    std::size_t size() const noexcept { return static_cast<std::size_t>(probs_.rows()); }
    double operator()(std::size_t detected, std::size_t sent) const {
        return probs_(static_cast<Eigen::Index>(detected),
                      static_cast<Eigen::Index>(sent));
    }
    const Eigen::MatrixXd &matrix() const noexcept { return probs_; }

   private:
    Eigen::MatrixXd probs_;
};

TransitionMatrix transition_matrix(const EncodingSetup &setup);

/// P_d = sum_i p_i Tr(Pi_i rho_i).
double detection_probability(const EncodingSetup &setup);

/// Pr{det i} = sum_j p_j Tr(Pi_i rho_j) for every outcome i.
std::vector<double> detection_rates(const EncodingSetup &setup);

/// What check_tight_frame measured.
struct FrameReport {
    double residual = 0.0;              ///< ||sum |u_i><u_i| - I||_F
    std::vector<double> norms;          ///< <u_i|u_i>
    ComplexMatrix gram;                 ///< <u_i|u_j>
    double norm_sum = 0.0;
    bool norms_bounded = false;         ///< every <u_i|u_i> <= 1
    bool unit_vectors_orthogonal = false;
    bool norm_sum_matches_dim = false;  ///< sum <u_i|u_i> == n
};

/// Checks sum_i |u_i><u_i| = I and reports the three consequences (norms at
/// most one, unit vectors orthogonal to the rest, norms summing to n).
/// Throws NotTightFrameError carrying the residual when the resolution of the
/// identity fails.
FrameReport check_tight_frame(std::span<const ComplexVector> vectors,
                              std::size_t dim);

/// m vectors of C^n resolving the identity. Zero vectors are allowed.
class FrameVectors {
   public:
    FrameVectors(std::vector<ComplexVector> vectors, std::size_t dim);

    /// Frame vectors u_i = (row i of `coefficients`)^dagger of an m x n matrix
    /// with orthonormal columns.
    static FrameVectors from_rows(const ComplexMatrix &coefficients);

    std::size_t size() const noexcept { return vectors_.size(); }
    std::size_t dim() const noexcept { return dim_; }
    const ComplexVector &operator[](std::size_t i) const { return vectors_[i]; }
    const std::vector<ComplexVector> &vectors() const noexcept { return vectors_; }
    /// <u_i|u_i> for each vector.
    std::vector<double> norms() const;
    /// m x n matrix with rows u_i^dagger.
    ComplexMatrix coefficients() const;

   private:
    std::vector<ComplexVector> vectors_;
    std::size_t dim_;
};

/// <u|u> at or below this (zero_operator tolerance) marks a zero vector.
bool is_zero_vector(const ComplexVector &u);

/// Tight frame encoding setup: Pi_i = |u_i><u_i|, rho_i the normalized
/// projector for nonzero u_i. Zero vectors take `dont_care[i]` when given,
/// otherwise the default: the prior-weighted mixture over the unit-norm
/// vectors when every vector has norm 0 or 1 (pseudo-classical frames),
/// otherwise I/n.
EncodingSetup tfes_from_frame(
    const FrameVectors &frame, const PriorDistribution &priors,
    const std::vector<std::optional<DensityMatrix>> &dont_care = {});

}  // namespace qencode
