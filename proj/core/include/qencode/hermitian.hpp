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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qencode {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Dense Hermitian operator on C^n.
///
/// Construction checks A == A^dagger up to `Tolerances::hermitian_asymmetry`
/// times the largest |entry| and stores the symmetrized (A + A^dagger)/2, so
/// roundoff from upstream arithmetic is absorbed while genuine asymmetry is
/// rejected with a ValidationError.
class HermitianMatrix {
   public:
    explicit HermitianMatrix(const ComplexMatrix &entries);

    static HermitianMatrix identity(std::size_t dim);
    static HermitianMatrix zero(std::size_t dim);
    static HermitianMatrix diagonal(std::span<const double> values);
    /// |v><v| (v is not normalized).
    static HermitianMatrix outer(const ComplexVector &v);

    std::size_t dim() const noexcept {
        return static_cast<std::size_t>(entries_.rows());
    }
    const ComplexMatrix &matrix() const noexcept { return entries_; }
    Complex operator()(std::size_t row, std::size_t col) const {
        return entries_(static_cast<Eigen::Index>(row),
                        static_cast<Eigen::Index>(col));
    }

    double trace() const noexcept { return entries_.trace().real(); }
    double frobenius_norm() const noexcept { return entries_.norm(); }

    HermitianMatrix operator+(const HermitianMatrix &other) const;
    HermitianMatrix operator-(const HermitianMatrix &other) const;
    HermitianMatrix operator*(double scale) const;
    friend HermitianMatrix operator*(double scale, const HermitianMatrix &a) {
        return a * scale;
    }

   private:
    struct Unchecked {};
    HermitianMatrix(ComplexMatrix entries, Unchecked) noexcept
        : entries_(std::move(entries)) {}

    ComplexMatrix entries_;
};

/// Eigenvalues in descending order with matching orthonormal eigenvector
/// columns.
struct Eigendecomposition {
    Eigen::VectorXd eigenvalues;
    ComplexMatrix eigenvectors;

    std::size_t dim() const noexcept {
        return static_cast<std::size_t>(eigenvalues.size());
    }
    ComplexVector vector(std::size_t j) const {
        return eigenvectors.col(static_cast<Eigen::Index>(j));
    }
};

Eigendecomposition eig_hermitian(const HermitianMatrix &a);

/// min eigenvalue >= -tol * max(1, |lambda|_max).
bool is_psd(const HermitianMatrix &a, double tol);
bool is_psd(const HermitianMatrix &a);

/// The top eigenvalue and an orthonormal basis of its eigenspace M(A).
struct MaxEigenspace {
    double sigma_max = 0.0;
    std::vector<ComplexVector> basis;

    std::size_t dimension() const noexcept { return basis.size(); }
};

/// Eigenvalues within `eigen_cluster * max(1, |sigma_max|)` of the top one
/// are grouped into M(A).
MaxEigenspace max_eigenpair(const HermitianMatrix &a);

/// Re Tr(AB). Throws ValidationError on dimension mismatch.
double trace_product(const HermitianMatrix &a, const HermitianMatrix &b);

/// Number of eigenvalues above tol * max(1, |lambda|_max).
std::size_t numerical_rank(const HermitianMatrix &a, double tol);

/// A^{-1/2} for a strictly positive definite A. Throws ValidationError when
/// the smallest eigenvalue is at or below `floor`.
HermitianMatrix inverse_sqrt(const HermitianMatrix &a, double floor);

}  // namespace qencode
