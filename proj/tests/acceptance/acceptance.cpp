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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qencode/qencode.hpp"

using namespace qencode;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int number;
    std::string title;
    double time_limit_s;  // <= 0 when the criterion carries no runtime budget
    std::function<Outcome()> check;
};

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(12);
    s << x;
    return s.str();
}

ComplexVector vec2(double x, double y) {
    ComplexVector v(2);
    v << x, y;
    return v;
}

std::vector<double> optimal_profile(const PriorDistribution &priors, std::size_t n,
                                    std::mt19937_64 &rng) {
    const IndexClassification cls = classify_indices(priors, n);
    std::vector<double> c(priors.size(), 0.0);
    for (std::size_t i : cls.above) c[i] = 1.0;
    const std::size_t free_mass = n - cls.above.size();
    const auto tied = sampling::random_norm_profile(cls.tied.size(), free_mass, rng);
    for (std::size_t k = 0; k < cls.tied.size(); ++k) c[cls.tied[k]] = tied[k];
    return c;
}

Outcome bb84_reproduction() {
    const EncodingSetup setup = bb84_setup();
    const double pd = detection_probability(setup);
    const double bound = max_detection_probability(PriorDistribution::uniform(4), 2);
    const OptimalityVerdict verdict = verify_optimal_setup(setup);
    Outcome out;
    out.pass = std::abs(pd - 0.5) <= 1e-12 && std::abs(pd - bound) <= 1e-12 && verdict.optimal;
    out.detail = "P_d=" + fmt(pd) + " bound=" + fmt(bound) +
                 " verdict=" + (verdict.optimal ? "optimal" : "not optimal");
    return out;
}

Outcome posterior_bound_example() {
    const double r = std::sqrt(3.0) / 2.0;
    std::vector<DensityMatrix> ensemble{DensityMatrix::pure(vec2(0, 1)),
                                        DensityMatrix::pure(vec2(r, -0.5)),
                                        DensityMatrix::pure(vec2(r, 0.5))};
    const PriorDistribution priors({0.4, 0.3, 0.3});
    const PosteriorBoundCertificate cert = posterior_upper_bound(ensemble, priors);

    const double d = cert.delta;
    ComplexMatrix printed(2, 2);
    printed << 9 - 18 * d, std::sqrt(27.0), std::sqrt(27.0), 19 - 22 * d;
    printed /= 40.0;
    const double entry_error = (cert.op.matrix() - printed).cwiseAbs().maxCoeff();
    const double universal = max_detection_probability(priors, 2);

    Outcome out;
    out.pass = std::abs(d - 4.0 / 11.0) <= 1e-8 && std::abs(cert.bound - 7.0 / 11.0) <= 1e-8 &&
               cert.bound < universal && cert.index == 1 && entry_error <= 1e-10;
    out.detail = "delta=" + fmt(d) + " bound=" + fmt(cert.bound) + " universal=" +
                 fmt(universal) + " symbol=" + std::to_string(cert.index + 1) +
                 " max|A-printed|=" + fmt(entry_error);
    return out;
}

Outcome search_never_beats_bound() {
    std::mt19937_64 rng(20260301);
    const std::size_t trials = 10000;
    double worst_excess = -1.0;
    for (int k = 0; k < 20; ++k) {
        const PriorDistribution priors = sampling::random_priors(3, rng);
        const SearchResult result = brute_force_search(priors, 2, trials, 1000 + k);
        worst_excess = std::max(worst_excess, result.best_pd - priors.head_sum(2));
    }
    const SearchResult uniform =
        brute_force_search(PriorDistribution::uniform(3), 2, trials, 7);
    const double spread = std::max(std::abs(uniform.tfes_min_pd - 2.0 / 3.0),
                                   std::abs(uniform.tfes_max_pd - 2.0 / 3.0));
    worst_excess = std::max(worst_excess, uniform.best_pd - 2.0 / 3.0);

    Outcome out;
    out.pass = worst_excess <= 1e-9 && spread <= 1e-9 && uniform.tfes_samples > 0;
    out.detail = "21x" + std::to_string(trials) + " trials, max(best-bound)=" +
                 fmt(worst_excess) + ", uniform TFES |P_d-2/3|<=" + fmt(spread) + " over " +
                 std::to_string(uniform.tfes_samples) + " frames";
    return out;
}

Outcome duality_suite() {
    std::mt19937_64 rng(4242);
    double worst_gap = 0.0, worst_violation = -1.0;
    std::size_t cases = 0;
    for (int k = 0; k < 100; ++k) {
        for (std::size_t m = 2; m <= 8; ++m) {
            const PriorDistribution priors = sampling::random_priors(m, rng, k % 4 == 0);
            for (std::size_t n = 1; n < m; ++n) {
                worst_gap = std::max(worst_gap, std::abs(duality_gap(priors, n)));
                const DualPoint dual = dual_feasible_point(priors, n);
                worst_violation = std::max(worst_violation, dual.max_violation(priors));
                ++cases;
            }
        }
    }
    Outcome out;
    out.pass = worst_gap <= 1e-12 && worst_violation <= 1e-12;
    out.detail = std::to_string(cases) + " (priors, n) pairs, max|gap|=" + fmt(worst_gap) +
                 " max dual violation=" + fmt(worst_violation);
    return out;
}

Outcome frame_properties() {
    std::mt19937_64 rng(5150);
    std::size_t failures = 0;
    double worst_residual = 0.0;
    for (int k = 0; k < 100; ++k) {
        const std::size_t n = 1 + k % 4;
        const std::size_t m = n + k % 5;
        const auto profile = sampling::random_norm_profile(m, n, rng);
        const FrameVectors frame = synthesize_tight_frame(profile, n);
        const FrameReport report = check_tight_frame(frame.vectors(), n);
        worst_residual = std::max(worst_residual, report.residual);
        if (!report.norms_bounded || !report.unit_vectors_orthogonal ||
            !report.norm_sum_matches_dim) {
            ++failures;
        }
    }
    Outcome out;
    out.pass = failures == 0;
    out.detail = "100 frames, " + std::to_string(failures) +
                 " property failures, max residual=" + fmt(worst_residual);
    return out;
}

Outcome optimality_equivalence() {
    std::mt19937_64 rng(6006);
    std::size_t disagreements = 0, optimal = 0;
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = 1 + k % 3;
        const std::size_t m = n + 1 + k % 4;
        const PriorDistribution priors = sampling::random_priors(m, rng, k % 2 == 0);
        const auto profile = k % 2 == 0 ? optimal_profile(priors, n, rng)
                                        : sampling::random_norm_profile(m, n, rng);
        const FrameVectors seed = synthesize_tight_frame(profile, n);
        const FrameVectors frame =
            FrameVectors::from_rows(seed.coefficients() * sampling::haar_unitary(n, rng));
        const double gap = std::abs(detection_probability(tfes_from_frame(frame, priors)) -
                                    max_detection_probability(priors, n));
        const bool verdict = is_optimal_tfes(frame, priors).optimal;
        if (verdict != (gap <= 1e-9)) ++disagreements;
        if (verdict) ++optimal;
    }
    Outcome out;
    out.pass = disagreements == 0 && optimal > 0 && optimal < 200;
    out.detail = "200 frames (" + std::to_string(optimal) + " optimal), " +
                 std::to_string(disagreements) + " disagreements";
    return out;
}

Outcome codestates_unbeaten() {
    std::mt19937_64 rng(7007);
    double worst_excess = -1.0;
    for (int k = 0; k < 50; ++k) {
        const std::size_t n = 1 + k % 4;
        const std::size_t m = 1 + (k / 4) % 6;
        const Povm povm = sampling::random_povm(m, n, rng);
        const PriorDistribution priors = sampling::random_priors(m, rng);
        const double pd_opt = optimal_codestates_for_povm(povm, priors).pd_opt;
        for (int s = 0; s < 100; ++s) {
            double pd = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                pd += priors[i] * trace_product(povm[i], sampling::random_state(n, rng).op());
            }
            worst_excess = std::max(worst_excess, pd - pd_opt);
        }
    }
    Outcome out;
    out.pass = worst_excess <= 1e-9;
    out.detail = "50 POVMs x 100 ensembles, max(P_d - pd_opt)=" + fmt(worst_excess);
    return out;
}

Outcome dont_care_reliability() {
    std::mt19937_64 rng(8008);
    double worst = 0.0;
    std::size_t defined = 0;
    for (int k = 0; k < 50; ++k) {
        const std::size_t n = 1 + k % 4;
        const std::size_t m = n + 1 + k % 3;
        const PriorDistribution priors = sampling::random_priors(m, rng, k % 5 == 0);
        const EncodingSetup setup = pseudo_classical_setup(priors, n);
        const double target = priors.head_sum(n);
        worst = std::max(worst, std::abs(effective_worst_case_posterior(setup) - target));
        for (const auto &p : posterior_probabilities(setup)) {
            if (!p) continue;
            ++defined;
            worst = std::max(worst, std::abs(*p - target));
        }
    }
    Outcome out;
    out.pass = worst <= 1e-9;
    out.detail = "50 priors, " + std::to_string(defined) +
                 " defined posteriors, max deviation=" + fmt(worst);
    return out;
}

Outcome strict_gap_uniqueness() {
    std::mt19937_64 rng(9009);
    std::size_t sampled = 0, wrong = 0, pseudo_classical = 0;
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = 1 + k % 3;
        const std::size_t m = n + 1 + k % 3;
        PriorDistribution priors = sampling::random_priors(m, rng);
        if (!(priors[n - 1] > priors[n])) continue;

        FrameVectors frame = sampling::random_tight_frame(m, n, rng);
        if (k % 3 == 0) {
            std::vector<double> c(m, 0.0);
            std::fill(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n), 1.0);
            const FrameVectors seed = synthesize_tight_frame(c, n);
            frame = FrameVectors::from_rows(seed.coefficients() * sampling::haar_unitary(n, rng));
        }
        const auto norms = frame.norms();
        double distance = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            distance = std::max(distance, std::abs(norms[i] - (i < n ? 1.0 : 0.0)));
        }
        const bool verdict = is_optimal_tfes(frame, priors).optimal;
        if (distance > 1e-9 && verdict) ++wrong;
        if (distance <= 1e-9) {
            ++pseudo_classical;
            if (!verdict) ++wrong;
        }
        ++sampled;
    }
    Outcome out;
    out.pass = wrong == 0 && sampled > 0 && pseudo_classical > 0;
    out.detail = std::to_string(sampled) + " frames (" + std::to_string(pseudo_classical) +
                 " with a (1..1,0..0) profile), " + std::to_string(wrong) + " wrong verdicts";
    return out;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "BB84 setup reaches the maximal P_d and certifies optimal", 1.0, bb84_reproduction},
        {2, "three-state posterior bound is 7/11, below the universal 0.7", 1.0,
         posterior_bound_example},
        {3, "randomized search never exceeds the sum of the n largest priors", 60.0,
         search_never_beats_bound},
        {4, "explicit dual point closes the duality gap for all n < m <= 8", 5.0, duality_suite},
        {5, "synthesized tight frames satisfy the three norm properties", 0.0, frame_properties},
        {6, "TFES optimality verdict matches the P_d gap test", 0.0, optimality_equivalence},
        {7, "no sampled ensemble beats the top-eigenvector code-states", 0.0,
         codestates_unbeaten},
        {8, "don't-care mixture makes every defined posterior equal the optimum", 0.0,
         dont_care_reliability},
        {9, "with a strict prior gap only (1..1,0..0) norm profiles are optimal", 0.0,
         strict_gap_uniqueness},
    };

    int failures = 0;
    for (const Criterion &c : criteria) {
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        try {
            outcome = c.check();
        } catch (const std::exception &e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool pass = outcome.pass;
        std::string timing = fmt(seconds) + " s";
        if (c.time_limit_s > 0.0) {
            timing += " / limit " + fmt(c.time_limit_s) + " s";
            if (seconds >= c.time_limit_s) pass = false;
        }
        if (!pass) ++failures;
        std::printf("%s criterion %d: %s [%s] (%s)\n", pass ? "PASS" : "FAIL", c.number,
                    c.title.c_str(), outcome.detail.c_str(), timing.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
