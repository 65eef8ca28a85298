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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "qencode/error.hpp"

using namespace qencode;

namespace {

ComplexMatrix random_complex(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    ComplexMatrix a(n, n);
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) a(r, c) = Complex(g(rng), g(rng));
    }
    return a;
}

HermitianMatrix random_hermitian(std::size_t n, std::mt19937_64 &rng) {
    ComplexMatrix a = random_complex(n, rng);
    return HermitianMatrix(ComplexMatrix((a + a.adjoint()) / 2.0));
}

HermitianMatrix random_psd(std::size_t n, std::mt19937_64 &rng) {
    ComplexMatrix a = random_complex(n, rng);
    return HermitianMatrix(ComplexMatrix(a * a.adjoint()));
}

HermitianMatrix example_operator(double delta) {
    ComplexMatrix a(2, 2);
    a << 9 - 18 * delta, std::sqrt(27.0), std::sqrt(27.0), 19 - 22 * delta;
    return HermitianMatrix(ComplexMatrix(a / 40.0));
}

}  // namespace

TEST(hermitian, rejects_non_square_and_asymmetric) {
    EXPECT_THROW(HermitianMatrix(ComplexMatrix::Zero(2, 3)), ValidationError);
    ComplexMatrix a(2, 2);
    a << 1, 2, 3, 4;
    EXPECT_THROW((HermitianMatrix(a)), ValidationError);
    a << 1, Complex(0, 1), Complex(0, 1), 1;
    EXPECT_THROW((HermitianMatrix(a)), ValidationError);
    a << 1, std::nan(""), std::nan(""), 1;
    EXPECT_THROW((HermitianMatrix(a)), ValidationError);
}

TEST(hermitian, symmetrizes_roundoff) {
    ComplexMatrix a(2, 2);
    a << 1, Complex(0.5, 1e-15), Complex(0.5, 0), 2;
    HermitianMatrix h(a);
    EXPECT_EQ(h(0, 1), std::conj(h(1, 0)));
}

TEST(hermitian, eig_identity) {
    auto e = eig_hermitian(HermitianMatrix::identity(2));
    EXPECT_NEAR(e.eigenvalues[0], 1.0, 1e-15);
    EXPECT_NEAR(e.eigenvalues[1], 1.0, 1e-15);
}

TEST(hermitian, eig_diagonal_sorted_descending) {
    const double d[] = {0.3, 0.7};
    auto e = eig_hermitian(HermitianMatrix::diagonal(d));
    EXPECT_NEAR(e.eigenvalues[0], 0.7, 1e-15);
    EXPECT_NEAR(e.eigenvalues[1], 0.3, 1e-15);
    EXPECT_NEAR(std::abs(e.vector(0)[1]), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(e.vector(1)[0]), 1.0, 1e-12);
}

TEST(hermitian, eig_printed_operator_at_zero) {
    auto e = eig_hermitian(example_operator(0.0));
    EXPECT_NEAR(e.eigenvalues[0], (7 + std::sqrt(13.0)) / 20, 1e-12);
    EXPECT_NEAR(e.eigenvalues[1], (7 - std::sqrt(13.0)) / 20, 1e-12);
}

TEST(hermitian, eig_printed_operator_matches_closed_form) {
    for (double delta : {0.1, 0.25, 0.5, 0.9}) {
        auto e = eig_hermitian(example_operator(delta));
        double root = std::sqrt(13 - 5 * delta + delta * delta);
        EXPECT_NEAR(e.eigenvalues[0], (7 - 10 * delta + root) / 20, 1e-12);
        EXPECT_NEAR(e.eigenvalues[1], (7 - 10 * delta - root) / 20, 1e-12);
    }
}

TEST(hermitian, eig_reconstruction_random) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + trial % 6;
        HermitianMatrix a = random_hermitian(n, rng);
        auto e = eig_hermitian(a);
        ComplexMatrix v = e.eigenvectors;
        ComplexMatrix rebuilt = v * e.eigenvalues.cast<Complex>().asDiagonal() * v.adjoint();
        EXPECT_LE((rebuilt - a.matrix()).norm(), 1e-9 * std::max(1.0, a.frobenius_norm()));
        EXPECT_LE((v.adjoint() * v - ComplexMatrix::Identity(n, n)).norm(), 1e-9);
        for (std::size_t j = 1; j < n; ++j) {
            EXPECT_GE(e.eigenvalues[j - 1], e.eigenvalues[j]);
        }
    }
}

TEST(hermitian, is_psd_examples) {
    EXPECT_TRUE(is_psd(HermitianMatrix::identity(3), 1e-9));
    const double d[] = {1.0, -0.1};
    EXPECT_FALSE(is_psd(HermitianMatrix::diagonal(d), 1e-9));
    EXPECT_TRUE(is_psd(example_operator(0.36), 1e-9));
    EXPECT_FALSE(is_psd(example_operator(0.37), 1e-9));
}

TEST(hermitian, is_psd_relative_tolerance) {
    const double d[] = {100.0, -5e-8};
    EXPECT_TRUE(is_psd(HermitianMatrix::diagonal(d), 1e-9));
    const double e[] = {1.0, -5e-9};
    EXPECT_FALSE(is_psd(HermitianMatrix::diagonal(e), 1e-9));
}

TEST(hermitian, max_eigenpair_examples) {
    const double d[] = {0.6, 0.2};
    auto top = max_eigenpair(HermitianMatrix::diagonal(d));
    EXPECT_NEAR(top.sigma_max, 0.6, 1e-15);
    ASSERT_EQ(top.dimension(), 1u);
    EXPECT_NEAR(std::abs(top.basis[0][0]), 1.0, 1e-12);

    auto full = max_eigenpair(HermitianMatrix::identity(2));
    EXPECT_NEAR(full.sigma_max, 1.0, 1e-15);
    EXPECT_EQ(full.dimension(), 2u);

    ComplexVector u(2);
    u << Complex(0.6, 0), Complex(0, 0.8);
    auto rank_one = max_eigenpair(0.5 * HermitianMatrix::outer(u));
    EXPECT_NEAR(rank_one.sigma_max, 0.5, 1e-12);
    ASSERT_EQ(rank_one.dimension(), 1u);
    EXPECT_NEAR(std::abs(rank_one.basis[0].dot(u)), 1.0, 1e-12);
}

TEST(hermitian, max_eigenpair_agrees_with_eig) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        HermitianMatrix a = random_hermitian(1 + trial % 5, rng);
        EXPECT_EQ(max_eigenpair(a).sigma_max, eig_hermitian(a).eigenvalues[0]);
    }
}

TEST(hermitian, trace_product_examples) {
    std::mt19937_64 rng(3);
    HermitianMatrix p = random_psd(3, rng);
    HermitianMatrix rho = p * (1.0 / p.trace());
    EXPECT_NEAR(trace_product(HermitianMatrix::identity(3), rho), 1.0, 1e-12);

    ComplexVector zero(2), plus(2);
    zero << 1, 0;
    plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
    EXPECT_NEAR(trace_product(HermitianMatrix::outer(zero), HermitianMatrix::outer(plus)), 0.5,
                1e-15);

    const double a[] = {0.6, 0.2};
    const double b[] = {1.0, 0.0};
    EXPECT_NEAR(trace_product(HermitianMatrix::diagonal(a), HermitianMatrix::diagonal(b)), 0.6,
                1e-15);
    EXPECT_THROW(trace_product(HermitianMatrix::identity(2), HermitianMatrix::identity(3)),
                 ValidationError);
}

TEST(hermitian, trace_product_properties) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + trial % 6;
        HermitianMatrix a = random_psd(n, rng);
        HermitianMatrix b = random_psd(n, rng);
        EXPECT_GE(trace_product(a, b), -1e-9);
        HermitianMatrix c = random_hermitian(n, rng);
        EXPECT_LE(std::abs(trace_product(a, c) - trace_product(c, a)), 1e-12);
    }
}

TEST(hermitian, inverse_sqrt_whitens) {
    std::mt19937_64 rng(23);
    HermitianMatrix s = random_psd(4, rng);
    HermitianMatrix w = inverse_sqrt(s, 1e-12);
    ComplexMatrix should_be_identity = w.matrix() * s.matrix() * w.matrix();
    EXPECT_LE((should_be_identity - ComplexMatrix::Identity(4, 4)).norm(), 1e-9);
}

TEST(hermitian, numerical_rank) {
    ComplexVector u(3);
    u << 1, 2, 0;
    EXPECT_EQ(numerical_rank(HermitianMatrix::outer(u), 1e-9), 1u);
    EXPECT_EQ(numerical_rank(HermitianMatrix::identity(3), 1e-9), 3u);
    EXPECT_EQ(numerical_rank(HermitianMatrix::zero(3), 1e-9), 0u);
}
