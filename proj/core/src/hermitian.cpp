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

#include "qencode/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qencode/error.hpp"
#include "qencode/tolerances.hpp"

namespace qencode {
namespace {

void require_same_dim(const HermitianMatrix &a, const HermitianMatrix &b,
                      const char *what) {
    if (a.dim() != b.dim()) {
        throw ValidationError(what, "dimension mismatch (" +
                                        std::to_string(a.dim()) + " vs " +
                                        std::to_string(b.dim()) + ")");
    }
}

double spectral_scale(const Eigen::VectorXd &eigenvalues) {
    return std::max(1.0, eigenvalues.cwiseAbs().maxCoeff());
}

}  // namespace

HermitianMatrix::HermitianMatrix(const ComplexMatrix &entries) {
    if (entries.rows() < 1 || entries.rows() != entries.cols()) {
        throw ValidationError("matrix", "must be square with dim >= 1");
    }
    if (!entries.allFinite()) {
        throw ValidationError("matrix", "non-finite entry");
    }
    const double scale = entries.cwiseAbs().maxCoeff();
    const double asymmetry = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
    if (asymmetry > tolerances().hermitian_asymmetry * scale) {
        throw ValidationError("matrix", "not Hermitian", asymmetry);
    }
    entries_ = (entries + entries.adjoint()) * 0.5;
}

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return HermitianMatrix(ComplexMatrix::Identity(n, n), Unchecked{});
}

HermitianMatrix HermitianMatrix::zero(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return HermitianMatrix(ComplexMatrix::Zero(n, n), Unchecked{});
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
    const auto n = static_cast<Eigen::Index>(values.size());
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        m(i, i) = values[static_cast<std::size_t>(i)];
    }
    return HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::outer(const ComplexVector &v) {
    ComplexMatrix m = v * v.adjoint();
    // Exact Hermitian up to roundoff; drop the imaginary diagonal noise.
    m = (m + m.adjoint()) * 0.5;
    return HermitianMatrix(std::move(m), Unchecked{});
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix &other) const {
    require_same_dim(*this, other, "operator+");
    return HermitianMatrix(entries_ + other.entries_, Unchecked{});
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix &other) const {
    require_same_dim(*this, other, "operator-");
    return HermitianMatrix(entries_ - other.entries_, Unchecked{});
}

HermitianMatrix HermitianMatrix::operator*(double scale) const {
    return HermitianMatrix(entries_ * scale, Unchecked{});
}

Eigendecomposition eig_hermitian(const HermitianMatrix &a) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix());
    if (solver.info() != Eigen::Success) {
        throw Error("eig_hermitian: eigensolver did not converge");
    }
    // Eigen returns ascending order.
    Eigendecomposition out;
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

bool is_psd(const HermitianMatrix &a, double tol) {
    if (tol < 0.0) throw ValidationError("tol", "must be non-negative");
    const Eigen::VectorXd lambda = eig_hermitian(a).eigenvalues;
    return lambda.minCoeff() >= -tol * spectral_scale(lambda);
}

bool is_psd(const HermitianMatrix &a) { return is_psd(a, tolerances().psd); }

MaxEigenspace max_eigenpair(const HermitianMatrix &a) {
    const Eigendecomposition eig = eig_hermitian(a);
    MaxEigenspace out;
    out.sigma_max = eig.eigenvalues(0);
    const double gap =
        tolerances().eigen_cluster * std::max(1.0, std::abs(out.sigma_max));
    for (std::size_t j = 0; j < eig.dim(); ++j) {
        if (out.sigma_max - eig.eigenvalues(static_cast<Eigen::Index>(j)) > gap)
            break;
        out.basis.push_back(eig.vector(j));
    }
    return out;
}

double trace_product(const HermitianMatrix &a, const HermitianMatrix &b) {
    require_same_dim(a, b, "trace_product");
    // Tr(AB) = sum_jk A_jk B_kj = sum_jk A_jk conj(B_jk) for Hermitian B.
    const Complex value = (a.matrix().array() * b.matrix().conjugate().array()).sum();
    const double scale = std::max(1.0, a.frobenius_norm() * b.frobenius_norm());
    if (std::abs(value.imag()) > 1e-9 * scale) {
        throw Error("trace_product: Tr(AB) has a non-negligible imaginary part");
    }
    return value.real();
}

std::size_t numerical_rank(const HermitianMatrix &a, double tol) {
    const Eigen::VectorXd lambda = eig_hermitian(a).eigenvalues;
    const double cut = tol * spectral_scale(lambda);
    return static_cast<std::size_t>((lambda.array() > cut).count());
}

HermitianMatrix inverse_sqrt(const HermitianMatrix &a, double floor) {
    const Eigendecomposition eig = eig_hermitian(a);
    const double smallest = eig.eigenvalues.minCoeff();
    if (smallest <= floor) {
        throw ValidationError("matrix", "not positive definite", smallest);
    }
    const Eigen::VectorXd scale = eig.eigenvalues.array().rsqrt();
    const ComplexMatrix &v = eig.eigenvectors;
    return HermitianMatrix(v * scale.cast<Complex>().asDiagonal() * v.adjoint());
}

}  // namespace qencode
