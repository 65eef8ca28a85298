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
#include <random>

#include "gtest/gtest.h"
#include "qencode/error.hpp"
#include "qencode/verification.hpp"
#include "test_util.hpp"

using namespace qencode;
using namespace qencode::testing;

namespace {

using Indices = std::vector<std::size_t>;

bool has_violation(const OptimalityVerdict &v, const std::string &constraint,
                   std::optional<std::size_t> index = std::nullopt) {
    return std::any_of(v.violations.begin(), v.violations.end(), [&](const Violation &x) {
        return x.constraint == constraint && (!index || x.index == index);
    });
}

}  // namespace

TEST(max_detection, examples) {
    EXPECT_NEAR(max_detection_probability(example_priors(), 2), 0.7, 1e-15);
    EXPECT_NEAR(max_detection_probability(PriorDistribution::uniform(4), 2), 0.5, 1e-15);
    EXPECT_NEAR(max_detection_probability(example_priors(), 3), 1.0, 1e-15);
    EXPECT_THROW(max_detection_probability(example_priors(), 4), InfeasibleError);
    EXPECT_THROW(max_detection_probability(example_priors(), 0), InfeasibleError);
}

TEST(classify, examples) {
    auto a = classify_indices(example_priors(), 2);
    EXPECT_EQ(a.above, Indices{0});
    EXPECT_EQ(a.tied, (Indices{1, 2}));
    EXPECT_TRUE(a.below.empty());

    auto b = classify_indices(PriorDistribution({0.5, 0.3, 0.2}), 2);
    EXPECT_EQ(b.above, Indices{0});
    EXPECT_EQ(b.tied, Indices{1});
    EXPECT_EQ(b.below, Indices{2});

    auto c = classify_indices(PriorDistribution::uniform(5), 3);
    EXPECT_TRUE(c.above.empty());
    EXPECT_EQ(c.tied.size(), 5u);
    EXPECT_TRUE(c.below.empty());
}

TEST(pseudo_classical, examples) {
    auto setup = pseudo_classical_setup(example_priors(), 2);
    EXPECT_NEAR(detection_probability(setup), 0.7, 1e-12);
    EXPECT_EQ(setup.povm()[2].frobenius_norm(), 0.0);

    auto full = pseudo_classical_setup(example_priors(), 3);
    EXPECT_NEAR(detection_probability(full), 1.0, 1e-12);
}

TEST(pseudo_classical, custom_basis) {
    const double s = 1 / std::sqrt(2.0);
    std::vector<ComplexVector> basis{vec2(s, s), vec2(s, -s)};
    auto setup = pseudo_classical_setup(PriorDistribution({0.5, 0.3, 0.2}), 2, basis);
    EXPECT_NEAR(detection_probability(setup), 0.8, 1e-12);
    std::vector<ComplexVector> skew{vec2(1, 0), vec2(s, s)};
    EXPECT_THROW(pseudo_classical_setup(PriorDistribution({0.5, 0.3, 0.2}), 2, skew),
                 ValidationError);
}

TEST(synthesis, orthonormal_plus_zero) {
    const double c[] = {1, 1, 0};
    FrameVectors frame = synthesize_tight_frame(c, 2);
    auto report = check_tight_frame(frame.vectors(), 2);
    EXPECT_NEAR(report.norms[0], 1.0, 1e-12);
    EXPECT_NEAR(report.norms[1], 1.0, 1e-12);
    EXPECT_EQ(report.norms[2], 0.0);
    EXPECT_NEAR(std::abs(frame[0].dot(frame[1])), 0.0, 1e-12);
}

TEST(synthesis, equal_norms_like_bb84) {
    const double c[] = {0.5, 0.5, 0.5, 0.5};
    FrameVectors frame = synthesize_tight_frame(c, 2);
    for (double x : frame.norms()) EXPECT_NEAR(x, 0.5, 1e-12);
    EXPECT_LE(check_tight_frame(frame.vectors(), 2).residual, 1e-12);
}

TEST(synthesis, mixed_norms) {
    const double c[] = {1, 0.5, 0.5};
    FrameVectors frame = synthesize_tight_frame(c, 2);
    auto report = check_tight_frame(frame.vectors(), 2);
    EXPECT_NEAR(report.norms[0], 1.0, 1e-9);
    EXPECT_NEAR(report.norms[1], 0.5, 1e-9);
    EXPECT_NEAR(report.norms[2], 0.5, 1e-9);
    EXPECT_TRUE(report.unit_vectors_orthogonal);
}

TEST(synthesis, profile_that_stalls_a_fourier_seed) {
    const double c[] = {1, 0.5, 0, 0.5};
    FrameVectors frame = synthesize_tight_frame(c, 2);
    auto norms = frame.norms();
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(norms[i], c[i], 1e-9);
}

TEST(synthesis, rejects_infeasible_profiles) {
    const double too_big[] = {1.2, 0.8};
    EXPECT_THROW(synthesize_tight_frame(too_big, 2), InfeasibleError);
    const double wrong_sum[] = {0.5, 0.5, 0.5};
    EXPECT_THROW(synthesize_tight_frame(wrong_sum, 2), InfeasibleError);
    const double negative[] = {1.1, 1.0, -0.1};
    EXPECT_THROW(synthesize_tight_frame(negative, 2), InfeasibleError);
}

TEST(synthesis, random_profiles) {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + trial % 5;
        std::size_t m = n + trial % 6;
        auto c = sampling::random_norm_profile(m, n, rng);
        FrameVectors frame = synthesize_tight_frame(c, n);
        auto report = check_tight_frame(frame.vectors(), n);
        EXPECT_LE(report.residual, 1e-9);
        for (std::size_t i = 0; i < m; ++i) EXPECT_NEAR(report.norms[i], c[i], 1e-9);
    }
}

TEST(synthesis, deterministic) {
    const double c[] = {0.9, 0.6, 0.3, 0.2};
    auto a = synthesize_tight_frame(c, 2).coefficients();
    auto b = synthesize_tight_frame(c, 2).coefficients();
    EXPECT_EQ(a, b);
}

TEST(optimal_tfes, pseudo_classical_is_optimal) {
    FrameVectors frame({vec2(1, 0), vec2(0, 1), vec2(0, 0)}, 2);
    EXPECT_TRUE(is_optimal_tfes(frame, PriorDistribution({0.5, 0.3, 0.2})).optimal);
}

TEST(optimal_tfes, mercedes_uniform_is_optimal) {
    FrameVectors frame(mercedes_vectors(), 2);
    EXPECT_TRUE(is_optimal_tfes(frame, PriorDistribution::uniform(3)).optimal);
}

TEST(optimal_tfes, mercedes_skewed_is_not) {
    FrameVectors frame(mercedes_vectors(), 2);
    auto priors = PriorDistribution({0.5, 0.3, 0.2});
    auto verdict = is_optimal_tfes(frame, priors);
    EXPECT_FALSE(verdict.optimal);
    EXPECT_TRUE(has_violation(verdict, "norm_above", 0));
    EXPECT_TRUE(has_violation(verdict, "norm_below", 2));
    EXPECT_NEAR(detection_probability(tfes_from_frame(frame, priors)), 2.0 / 3.0, 1e-12);
}

TEST(optimal_tfes, verdict_matches_detection_gap) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + trial % 3;
        std::size_t m = n + 1 + trial % 3;
        PriorDistribution priors = sampling::random_priors(m, rng, trial % 2 == 0);
        std::vector<double> c;
        if (trial % 3 == 0) {
            c.assign(m, 0.0);
            std::fill(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n), 1.0);
        } else {
            c = sampling::random_norm_profile(m, n, rng);
        }
        FrameVectors frame = synthesize_tight_frame(c, n);
        double gap = std::abs(detection_probability(tfes_from_frame(frame, priors)) -
                              max_detection_probability(priors, n));
        EXPECT_EQ(is_optimal_tfes(frame, priors).optimal, gap <= 1e-9);
    }
}

TEST(optimal_tfes, uniform_priors_accept_every_frame) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        FrameVectors frame = sampling::random_tight_frame(4, 2, rng);
        EXPECT_TRUE(is_optimal_tfes(frame, PriorDistribution::uniform(4)).optimal);
    }
}

TEST(verify_setup, pseudo_classical) {
    auto setup = pseudo_classical_setup(PriorDistribution({0.5, 0.3, 0.2}), 2);
    auto verdict = verify_optimal_setup(setup);
    EXPECT_TRUE(verdict.optimal);
    EXPECT_NEAR(check_lemma_sum_eigs(setup).sum, 2.0, 1e-12);
}

TEST(verify_setup, bb84) {
    EXPECT_TRUE(verify_optimal_setup(bb84_setup()).optimal);
}

TEST(verify_setup, rank_two_element) {
    auto priors = PriorDistribution({0.5, 0.3, 0.2});
    Povm povm({HermitianMatrix::identity(2), HermitianMatrix::zero(2), HermitianMatrix::zero(2)});
    std::vector<DensityMatrix> states(3, DensityMatrix::pure(vec2(1, 0)));
    auto verdict = verify_optimal_setup(EncodingSetup(priors, states, povm));
    EXPECT_FALSE(verdict.optimal);
    EXPECT_TRUE(has_violation(verdict, "rank", 0));
}

TEST(verify_setup, wrong_state_for_frame_vector) {
    auto priors = PriorDistribution::uniform(2);
    Povm povm({HermitianMatrix::outer(vec2(1, 0)), HermitianMatrix::outer(vec2(0, 1))});
    std::vector<DensityMatrix> states{DensityMatrix::pure(vec2(1, 1)),
                                      DensityMatrix::pure(vec2(0, 1))};
    auto verdict = verify_optimal_setup(EncodingSetup(priors, states, povm));
    EXPECT_FALSE(verdict.optimal);
    EXPECT_TRUE(has_violation(verdict, "state", 0));
}

TEST(verify_setup, non_projector_suboptimal_tfes) {
    FrameVectors frame(mercedes_vectors(), 2);
    auto setup = tfes_from_frame(frame, PriorDistribution({0.5, 0.3, 0.2}));
    auto verdict = verify_optimal_setup(setup);
    EXPECT_FALSE(verdict.optimal);
    EXPECT_TRUE(has_violation(verdict, "norm_above", 0));
}

TEST(bb84, overlaps) {
    auto v = bb84_vectors();
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
            double overlap = std::norm(v[a].dot(v[b]));
            bool same_basis = a / 2 == b / 2;
            double expected = same_basis ? (a == b ? 1.0 : 0.0) : 0.5;
            EXPECT_NEAR(overlap, expected, 1e-15);
        }
    }
    auto setup = bb84_setup();
    EXPECT_NEAR(detection_probability(setup), 0.5, 1e-12);
    EXPECT_NEAR(max_detection_probability(setup.priors(), 2), 0.5, 1e-15);
    auto elements = frame_vectors_of(setup.povm());
    for (const auto &u : elements) EXPECT_NEAR(u.squaredNorm(), 0.5, 1e-12);
}
