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

#include "cli.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qencode/qencode.hpp"

namespace qencode::cli {
namespace {

using nlohmann::json;

constexpr int kDigits = 12;
constexpr int kSetupDigits = 17;

json num(double x) { return round_significant(x, kDigits); }

json matrix_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(json::array({num(m(r, c).real()), num(m(r, c).imag())}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json real_matrix_json(const Eigen::MatrixXd &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(num(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string read_source(const std::string &path, std::istream &in) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw ValidationError("path", "cannot open " + path);
        buffer << file.rdbuf();
    }
    return buffer.str();
}

std::string setup_text(const EncodingSetup &setup, bool pretty) {
    return setup_to_json(setup, JsonOptions{pretty ? 2 : -1, kSetupDigits});
}

void emit(std::ostream &out, const json &doc, bool pretty) {
    out << doc.dump(pretty ? 2 : -1) << '\n';
}

std::optional<double> bound_or_null(const PriorDistribution &priors, std::size_t n) {
    if (n == 0 || n > priors.size()) return std::nullopt;
    return max_detection_probability(priors, n);
}

void warn_if_not_spanning(const EncodingSetup &setup, std::ostream &err) {
    if (!setup.ensemble_spans()) {
        err << "warning: the ensemble does not span the state space; results are "
               "reported without projecting onto its span\n";
    }
}

json violations_json(const OptimalityVerdict &verdict) {
    json list = json::array();
    for (const Violation &v : verdict.violations) {
        json entry;
        entry["index"] = v.index ? json(*v.index + 1) : json(nullptr);
        entry["constraint"] = v.constraint;
        entry["residual"] = num(v.residual);
        list.push_back(std::move(entry));
    }
    return list;
}

// --- subcommands ------------------------------------------------------------

struct Options {
    bool pretty = false;
    std::vector<double> priors;
    std::size_t dim = 0;
    std::vector<double> norms;
    std::string povm_path;
    std::string setup_path = "-";
    std::size_t symbols = 0;
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
};

int cmd_design(const Options &opt, std::ostream &out, std::ostream &err) {
    const PriorDistribution priors(opt.priors);
    std::optional<EncodingSetup> setup;
    if (opt.norms.empty()) {
        setup.emplace(pseudo_classical_setup(priors, opt.dim));
    } else {
        if (opt.norms.size() != priors.size()) {
            throw ValidationError("norms", "need one norm per prior");
        }
        const FrameVectors frame = synthesize_tight_frame(opt.norms, opt.dim);
        const OptimalityVerdict verdict = is_optimal_tfes(frame, priors);
        if (!verdict.optimal) {
            err << "error: norm profile cannot reach the optimum for these priors\n";
            for (const Violation &v : verdict.violations) {
                err << "  symbol " << (v.index ? *v.index + 1 : 0) << ": " << v.constraint
                    << " (residual " << std::setprecision(kDigits) << v.residual << ")\n";
            }
            return kInfeasible;
        }
        setup.emplace(tfes_from_frame(frame, priors));
    }
    out << setup_text(*setup, opt.pretty) << '\n';
    return kSuccess;
}

int cmd_design_states(const Options &opt, std::istream &in, std::ostream &out) {
    const Povm povm = parse_povm(read_source(opt.povm_path, in));
    const PriorDistribution priors(opt.priors);
    const OptimalCodestates best = optimal_codestates_for_povm(povm, priors);
    const EncodingSetup setup(priors, best.ensemble, povm);
    json doc = json::parse(setup_to_json(setup, JsonOptions{-1, kSetupDigits}));
    doc["pd_opt"] = num(best.pd_opt);
    doc["unique"] = best.unique;
    json arbitrary = json::array();
    for (std::size_t i = 0; i < best.arbitrary.size(); ++i) {
        if (best.arbitrary[i]) arbitrary.push_back(i + 1);
    }
    doc["arbitrary"] = std::move(arbitrary);
    emit(out, doc, opt.pretty);
    return kSuccess;
}

int cmd_evaluate(const Options &opt, std::istream &in, std::ostream &out, std::ostream &err) {
    const EncodingSetup setup = parse_setup(read_source(opt.setup_path, in));
    warn_if_not_spanning(setup, err);
    const double pd = detection_probability(setup);
    const std::optional<double> bound = bound_or_null(setup.priors(), setup.dim());
    const TransitionMatrix transitions = transition_matrix(setup);
    const std::vector<double> rates = detection_rates(setup);
    const auto posteriors = posterior_probabilities(setup);

    std::optional<double> pp;
    try {
        pp = worst_case_posterior(setup);
    } catch (const IllDefinedError &) {
    }
    const double pp_eff = effective_worst_case_posterior(setup);

    if (opt.pretty) {
        out << std::setprecision(kDigits);
        out << "P_d          " << pd << '\n';
        out << "max P_d      ";
        if (bound) out << *bound << '\n'; else out << "n/a (dim > symbols)\n";
        out << "P_p          ";
        if (pp) out << *pp << '\n'; else out << "undefined (some outcome never occurs)\n";
        out << "P_p^eff      " << pp_eff << '\n';
        out << "\nsymbol  Pr{det}         posterior\n";
        for (std::size_t i = 0; i < setup.symbols(); ++i) {
            out << std::setw(6) << i + 1 << "  " << std::setw(14) << rates[i] << "  ";
            if (posteriors[i]) out << *posteriors[i] << '\n'; else out << "undefined\n";
        }
        out << "\ntransition Pr{detect i | sent j} (row i, column j)\n";
        for (std::size_t i = 0; i < setup.symbols(); ++i) {
            for (std::size_t j = 0; j < setup.symbols(); ++j) {
                out << std::setw(16) << transitions(i, j);
            }
            out << '\n';
        }
        return kSuccess;
    }

    json doc;
    doc["pd"] = num(pd);
    doc["pd_max"] = bound ? num(*bound) : json(nullptr);
    doc["transition"] = real_matrix_json(transitions.matrix());
    json rate_list = json::array();
    for (double r : rates) rate_list.push_back(num(r));
    doc["detection_rates"] = std::move(rate_list);
    json posterior_list = json::array();
    for (const auto &p : posteriors) posterior_list.push_back(p ? num(*p) : json(nullptr));
    doc["posterior"] = std::move(posterior_list);
    doc["pp"] = pp ? num(*pp) : json(nullptr);
    doc["pp_eff"] = num(pp_eff);
    doc["spans"] = setup.ensemble_spans();
    emit(out, doc, false);
    return kSuccess;
}

int cmd_certify(const Options &opt, std::istream &in, std::ostream &out) {
    const EncodingSetup setup = parse_setup(read_source(opt.setup_path, in));
    const OptimalityVerdict verdict = verify_optimal_setup(setup);
    const LemmaSumCheck lemma = check_lemma_sum_eigs(setup);
    const double pd = detection_probability(setup);
    const std::optional<double> bound = bound_or_null(setup.priors(), setup.dim());

    if (opt.pretty) {
        out << std::setprecision(kDigits);
        out << "verdict      " << (verdict.optimal ? "optimal" : "not optimal") << '\n';
        out << "P_d          " << pd << '\n';
        if (bound) out << "max P_d      " << *bound << '\n';
        out << "sum sigma    " << lemma.sum << '\n';
        for (const Violation &v : verdict.violations) {
            out << "  violation  " << v.constraint;
            if (v.index) out << " at symbol " << *v.index + 1;
            out << ", residual " << v.residual << '\n';
        }
        return kSuccess;
    }
    json doc;
    doc["optimal"] = verdict.optimal;
    doc["violations"] = violations_json(verdict);
    doc["pd"] = num(pd);
    doc["pd_max"] = bound ? num(*bound) : json(nullptr);
    doc["sigma_sum"] = num(lemma.sum);
    emit(out, doc, false);
    return kSuccess;
}

int cmd_bound_pp(const Options &opt, std::istream &in, std::ostream &out, std::ostream &err) {
    const EncodingSetup setup = parse_setup(read_source(opt.setup_path, in));
    const PosteriorBoundCertificate cert =
        posterior_upper_bound(setup.states(), setup.priors());
    const std::optional<double> universal = bound_or_null(setup.priors(), setup.dim());
    const double pp_eff = effective_worst_case_posterior(setup);
    if (std::any_of(setup.povm().elements().begin(), setup.povm().elements().end(),
                    [](const HermitianMatrix &e) {
                        return e.frobenius_norm() <= tolerances().zero_operator;
                    })) {
        err << "note: the setup has zero POVM elements; the bound is proven for P_p and is "
               "listed next to P_p^eff for comparison only\n";
    }

    if (opt.pretty) {
        out << std::setprecision(kDigits);
        out << "index        " << cert.index + 1 << '\n';
        out << "delta        " << cert.delta << '\n';
        out << "bound        " << cert.bound << '\n';
        if (universal) out << "max P_d      " << *universal << '\n';
        out << "P_p^eff      " << pp_eff << '\n';
        out << "A(delta)\n";
        for (Eigen::Index r = 0; r < cert.op.matrix().rows(); ++r) {
            for (Eigen::Index c = 0; c < cert.op.matrix().cols(); ++c) {
                out << std::setw(34) << cert.op.matrix()(r, c);
            }
            out << '\n';
        }
        return kSuccess;
    }
    json doc;
    doc["index"] = cert.index + 1;
    doc["delta"] = num(cert.delta);
    doc["bound"] = num(cert.bound);
    doc["operator"] = matrix_json(cert.op.matrix());
    json deltas = json::array();
    for (double d : cert.per_index_delta) deltas.push_back(num(d));
    doc["per_index_delta"] = std::move(deltas);
    doc["universal_bound"] = universal ? num(*universal) : json(nullptr);
    doc["pp_eff"] = num(pp_eff);
    emit(out, doc, false);
    return kSuccess;
}

int cmd_bb84(const Options &opt, std::ostream &out) {
    out << setup_text(bb84_setup(), opt.pretty) << '\n';
    return kSuccess;
}

int cmd_oracle(const Options &opt, std::ostream &out) {
    const PriorDistribution priors = opt.priors.empty()
                                         ? PriorDistribution::uniform(opt.symbols)
                                         : PriorDistribution(opt.priors);
    if (priors.size() != opt.symbols) {
        throw ValidationError("priors", "length differs from --symbols");
    }
    const SearchResult result = brute_force_search(priors, opt.dim, opt.trials, opt.seed);
    const double bound = max_detection_probability(priors, opt.dim);

    if (opt.pretty) {
        out << std::setprecision(kDigits);
        out << "trials       " << result.trials << " (" << result.tfes_samples
            << " tight frames, " << result.povm_samples << " random POVMs)\n";
        out << "best P_d     " << result.best_pd << " (trial " << result.best_trial << ")\n";
        out << "bound        " << bound << '\n';
        out << "gap          " << bound - result.best_pd << '\n';
        return kSuccess;
    }
    json doc;
    doc["best_pd"] = num(result.best_pd);
    doc["bound"] = num(bound);
    doc["gap"] = num(bound - result.best_pd);
    doc["trials"] = result.trials;
    doc["best_trial"] = result.best_trial;
    doc["tfes_pd_range"] = json::array({num(result.tfes_min_pd), num(result.tfes_max_pd)});
    doc["seed"] = opt.seed;
    emit(out, doc, false);
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
    if (!apply_environment_tolerances()) {
        err << "error: QENCODE_TOL must be a positive number\n";
        return kValidationError;
    }

    Options opt;
    CLI::App app{"Design, evaluate and certify quantum encodings of classical symbols",
                 "qencode"};
    app.add_flag("--pretty", opt.pretty, "Human-readable output instead of JSON");
    app.require_subcommand(1);

    auto *design = app.add_subcommand("design", "Emit an optimal tight-frame encoding setup");
    design->add_option("--priors", opt.priors, "Comma-separated non-increasing priors")
        ->required()->delimiter(',');
    design->add_option("--dim", opt.dim, "Dimension n of the quantum system")->required();
    design->add_option("--norms", opt.norms, "Frame norms <u_i|u_i> (default: pseudo-classical)")
        ->delimiter(',');

    auto *design_states =
        app.add_subcommand("design-states", "Optimal code-states for a fixed POVM");
    design_states->add_option("--povm", opt.povm_path, "POVM or setup JSON file ('-' = stdin)")
        ->required();
    design_states->add_option("--priors", opt.priors, "Comma-separated non-increasing priors")
        ->required()->delimiter(',');

    auto *evaluate = app.add_subcommand("evaluate", "P_d, transition matrix and posteriors");
    evaluate->add_option("setup", opt.setup_path, "Setup JSON file ('-' = stdin)");

    auto *certify = app.add_subcommand("certify", "Check whether a setup attains the optimum");
    certify->add_option("setup", opt.setup_path, "Setup JSON file ('-' = stdin)");

    auto *bound_pp = app.add_subcommand("bound-pp", "Certified upper bound on the worst-case posterior");
    bound_pp->add_option("setup", opt.setup_path, "Setup JSON file ('-' = stdin)");

    auto *bb84 = app.add_subcommand("bb84", "Emit the four-state BB84 setup");

    auto *oracle = app.add_subcommand("oracle", "Randomized search for the best P_d");
    oracle->add_option("--dim", opt.dim, "Dimension n")->required();
    oracle->add_option("--symbols", opt.symbols, "Number of symbols m")->required();
    oracle->add_option("--priors", opt.priors, "Comma-separated priors (default uniform)")
        ->delimiter(',');
    oracle->add_option("--trials", opt.trials, "Number of sampled setups");
    oracle->add_option("--seed", opt.seed, "RNG seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (design->parsed()) return cmd_design(opt, out, err);
        if (design_states->parsed()) return cmd_design_states(opt, in, out);
        if (evaluate->parsed()) return cmd_evaluate(opt, in, out, err);
        if (certify->parsed()) return cmd_certify(opt, in, out);
        if (bound_pp->parsed()) return cmd_bound_pp(opt, in, out, err);
        if (bb84->parsed()) return cmd_bb84(opt, out);
        if (oracle->parsed()) return cmd_oracle(opt, out);
    } catch (const InfeasibleError &e) {
        err << "infeasible: " << e.what() << '\n';
        return kInfeasible;
    } catch (const ValidationError &e) {
        err << "invalid input: " << e.what() << '\n';
        return kValidationError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    }
    err << app.help();
    return kUsage;
}

}  // namespace qencode::cli
