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

#include "qencode/setup_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "qencode/error.hpp"

namespace qencode {
namespace {

using nlohmann::json;

std::string at(const std::string &field, std::size_t i) {
    return field + "[" + std::to_string(i) + "]";
}

json parse_document(std::string_view text) {
    try {
        json doc = json::parse(text.begin(), text.end());
        if (!doc.is_object()) throw ValidationError("", "top level must be a JSON object");
        return doc;
    } catch (const json::parse_error &e) {
        throw ValidationError("json", e.what());
    }
}

const json &require(const json &doc, const char *key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw ValidationError(key, "missing");
    return *it;
}

double number(const json &value, const std::string &field) {
    if (!value.is_number()) throw ValidationError(field, "expected a number");
    return value.get<double>();
}

Complex complex_value(const json &value, const std::string &field) {
    if (value.is_number()) return {value.get<double>(), 0.0};
    if (!value.is_array() || value.size() != 2) {
        throw ValidationError(field, "expected [re, im]");
    }
    return {number(value[0], field + "[0]"), number(value[1], field + "[1]")};
}

std::size_t read_dim(const json &doc) {
    const json &dim = require(doc, "dim");
    if (!dim.is_number_integer() || dim.get<long long>() < 1) {
        throw ValidationError("dim", "expected a positive integer");
    }
    return static_cast<std::size_t>(dim.get<long long>());
}

ComplexVector read_vector(const json &value, std::size_t n, const std::string &field) {
    if (!value.is_array() || value.size() != n) {
        throw ValidationError(field, "expected " + std::to_string(n) + " entries");
    }
    ComplexVector v(static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k) {
        v(static_cast<Eigen::Index>(k)) = complex_value(value[k], at(field, k));
    }
    return v;
}

HermitianMatrix read_matrix(const json &value, std::size_t n, const std::string &field) {
    if (!value.is_array() || value.size() != n) {
        throw ValidationError(field, "expected " + std::to_string(n) + " rows");
    }
    ComplexMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r) {
        m.row(static_cast<Eigen::Index>(r)) =
            read_vector(value[r], n, at(field, r)).transpose();
    }
    try {
        return HermitianMatrix(m);
    } catch (const ValidationError &e) {
        throw ValidationError(field, e.what(), e.residual());
    }
}

std::vector<HermitianMatrix> read_matrices(const json &doc, const char *key, std::size_t n) {
    const json &list = require(doc, key);
    if (!list.is_array() || list.empty()) throw ValidationError(key, "expected a nonempty array");
    std::vector<HermitianMatrix> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        out.push_back(read_matrix(list[i], n, at(key, i)));
    }
    return out;
}

json number_json(double x, int digits) { return round_significant(x, digits); }

json complex_json(Complex z, int digits) {
    return json::array({number_json(z.real(), digits), number_json(z.imag(), digits)});
}

json matrix_json(const ComplexMatrix &m, int digits) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c), digits));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("path", "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out << text << '\n';
    if (!out) throw Error("write failed for " + path.string());
}

}  // namespace

double round_significant(double x, int digits) {
    if (digits >= 17 || x == 0.0 || !std::isfinite(x)) return x;
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.*g", digits, x);
    return std::strtod(buffer, nullptr);
}

EncodingSetup parse_setup(std::string_view json_text) {
    const json doc = parse_document(json_text);
    const std::size_t n = read_dim(doc);

    const json &priors_json = require(doc, "priors");
    if (!priors_json.is_array()) throw ValidationError("priors", "expected an array");
    std::vector<double> probs;
    for (std::size_t i = 0; i < priors_json.size(); ++i) {
        probs.push_back(number(priors_json[i], at("priors", i)));
    }
    PriorDistribution priors(std::move(probs));

    std::vector<DensityMatrix> states;
    const std::vector<HermitianMatrix> state_ops = read_matrices(doc, "states", n);
    for (std::size_t i = 0; i < state_ops.size(); ++i) {
        try {
            states.emplace_back(state_ops[i]);
        } catch (const ValidationError &e) {
            throw ValidationError(at("states", i), e.what(), e.residual());
        }
    }
    Povm povm = Povm(read_matrices(doc, "povm", n));
    return EncodingSetup(std::move(priors), std::move(states), std::move(povm));
}

std::string setup_to_json(const EncodingSetup &setup, const JsonOptions &options) {
    const int digits = options.significant_digits;
    json doc;
    doc["dim"] = setup.dim();
    json priors = json::array();
    for (double p : setup.priors().probs()) priors.push_back(number_json(p, digits));
    doc["priors"] = std::move(priors);
    json states = json::array();
    for (const DensityMatrix &rho : setup.states()) {
        states.push_back(matrix_json(rho.op().matrix(), digits));
    }
    doc["states"] = std::move(states);
    json povm = json::array();
    for (const HermitianMatrix &element : setup.povm().elements()) {
        povm.push_back(matrix_json(element.matrix(), digits));
    }
    doc["povm"] = std::move(povm);
    return doc.dump(options.indent);
}

FrameVectors parse_frame(std::string_view json_text) {
    const json doc = parse_document(json_text);
    const std::size_t n = read_dim(doc);
    const json &list = require(doc, "vectors");
    if (!list.is_array() || list.empty()) {
        throw ValidationError("vectors", "expected a nonempty array");
    }
    std::vector<ComplexVector> vectors;
    for (std::size_t i = 0; i < list.size(); ++i) {
        vectors.push_back(read_vector(list[i], n, at("vectors", i)));
    }
    return FrameVectors(std::move(vectors), n);
}

std::string frame_to_json(const FrameVectors &frame, const JsonOptions &options) {
    json doc;
    doc["dim"] = frame.dim();
    json vectors = json::array();
    for (const ComplexVector &u : frame.vectors()) {
        json entries = json::array();
        for (Eigen::Index k = 0; k < u.size(); ++k) {
            entries.push_back(complex_json(u(k), options.significant_digits));
        }
        vectors.push_back(std::move(entries));
    }
    doc["vectors"] = std::move(vectors);
    return doc.dump(options.indent);
}

Povm parse_povm(std::string_view json_text) {
    const json doc = parse_document(json_text);
    return Povm(read_matrices(doc, "povm", read_dim(doc)));
}

EncodingSetup load_setup(const std::filesystem::path &path) {
    return parse_setup(read_file(path));
}

void save_setup(const EncodingSetup &setup, const std::filesystem::path &path) {
    write_file(path, setup_to_json(setup, JsonOptions{2, 17}));
}

FrameVectors load_frame(const std::filesystem::path &path) {
    return parse_frame(read_file(path));
}

void save_frame(const FrameVectors &frame, const std::filesystem::path &path) {
    write_file(path, frame_to_json(frame, JsonOptions{2, 17}));
}

}  // namespace qencode
