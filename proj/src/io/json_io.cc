// Copyright 2026 The extwit Authors
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

#include "extwit/json_io.h"

#include <fstream>
#include <sstream>

#include "extwit/errors.h"

namespace extwit::io {
namespace {

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json &doc) {
    if (!doc.is_array() || doc.size() != 2 || !doc[0].is_number() || !doc[1].is_number()) {
        throw InputError("complex entries must be [re, im] number pairs");
    }
    return Complex(doc[0].get<double>(), doc[1].get<double>());
}

const json &field(const json &doc, const char *key) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw InputError(std::string("missing field \"") + key + "\"");
    }
    return doc.at(key);
}

SystemLayout layout_from_json(const json &doc) {
    const json &dims = field(doc, "dims");
    const json &cut = field(doc, "cut");
    if (!dims.is_array() || !cut.is_number_integer()) {
        throw InputError("\"dims\" must be an array and \"cut\" an integer");
    }
    std::vector<int> d;
    for (const json &x : dims) {
        if (!x.is_number_integer()) {
            throw InputError("\"dims\" entries must be integers");
        }
        d.push_back(x.get<int>());
    }
    try {
        return SystemLayout(std::move(d), cut.get<int>());
    } catch (const LayoutError &e) {
        throw InputError(e.what());
    }
}

json layout_fields(const SystemLayout &layout) {
    return json{{"dims", layout.dims()}, {"cut", layout.cut()}};
}

json values_array(const std::vector<double> &values) { return json(values); }

}  // namespace

json matrix_to_json(const Matrix &m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(complex_to_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json &doc) {
    if (!doc.is_array() || doc.empty()) {
        throw InputError("matrix data must be a nonempty array of rows");
    }
    Eigen::Index rows = static_cast<Eigen::Index>(doc.size());
    Eigen::Index cols = -1;
    Matrix m;
    for (Eigen::Index i = 0; i < rows; ++i) {
        const json &row = doc[static_cast<size_t>(i)];
        if (!row.is_array()) {
            throw InputError("matrix rows must be arrays");
        }
        if (cols < 0) {
            cols = static_cast<Eigen::Index>(row.size());
            m.resize(rows, cols);
        } else if (static_cast<Eigen::Index>(row.size()) != cols) {
            throw InputError("matrix rows have different lengths");
        }
        for (Eigen::Index j = 0; j < cols; ++j) {
            m(i, j) = complex_from_json(row[static_cast<size_t>(j)]);
        }
    }
    return m;
}

json vector_to_json(const Vector &v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(complex_to_json(v(i)));
    }
    return out;
}

json operator_to_json(const HermitianOperator &op) {
    json out = layout_fields(op.layout());
    out["data"] = matrix_to_json(op.matrix());
    return out;
}

HermitianOperator operator_from_json(const json &doc) {
    SystemLayout layout = layout_from_json(doc);
    Matrix m = matrix_from_json(field(doc, "data"));
    try {
        return HermitianOperator(std::move(layout), std::move(m), kHermitianInputTol);
    } catch (const LayoutError &e) {
        throw InputError(e.what());
    }
}

json product_vector_to_json(const ProductVector &v) {
    json out = layout_fields(v.layout());
    json factors = json::array();
    for (const Vector &f : v.factors()) {
        factors.push_back(vector_to_json(f));
    }
    out["factors"] = std::move(factors);
    return out;
}

ProductVector product_vector_from_json(const json &doc) {
    SystemLayout layout = layout_from_json(doc);
    const json &factors = field(doc, "factors");
    if (!factors.is_array()) {
        throw InputError("\"factors\" must be an array");
    }
    std::vector<Vector> out;
    for (const json &f : factors) {
        if (!f.is_array()) {
            throw InputError("each factor must be an array of [re, im] pairs");
        }
        Vector v(static_cast<Eigen::Index>(f.size()));
        for (size_t i = 0; i < f.size(); ++i) {
            v(static_cast<Eigen::Index>(i)) = complex_from_json(f[i]);
        }
        out.push_back(std::move(v));
    }
    try {
        return ProductVector(std::move(layout), std::move(out));
    } catch (const LayoutError &e) {
        throw InputError(e.what());
    }
}

json see_saw_report_to_json(const SeeSawReport &report) {
    json runs = json::array();
    for (const SeeSawRun &run : report.runs) {
        runs.push_back({{"seed", run.seed},
                        {"initial_value", run.initial_value},
                        {"final_value", run.final_value},
                        {"iterations", run.iterations},
                        {"converged", run.converged},
                        {"monotone", run.monotone}});
    }
    return {{"best_value", report.best_value},
            {"best_restart", report.best_restart},
            {"best_vector", product_vector_to_json(report.best_vector)},
            {"restarts", report.restarts},
            {"runs", std::move(runs)}};
}

json zero_set_to_json(const ZeroSet &zeros) {
    json vectors = json::array();
    for (const ProductVector &v : zeros.vectors) {
        vectors.push_back(product_vector_to_json(v));
    }
    return {{"span_rank", zeros.span_rank},
            {"count", zeros.vectors.size()},
            {"values", values_array(zeros.values)},
            {"vectors", std::move(vectors)}};
}

json spanning_to_json(const SpanningResult &result) {
    json out = {{"verdict", to_string(result.verdict)},
                {"rank", result.rank},
                {"dimension", result.dimension},
                {"zero_count", result.zeros.vectors.size()}};
    if (!result.caveat.empty()) {
        out["caveat"] = result.caveat;
    }
    return out;
}

json certification_to_json(const Certification &cert) {
    json out = {{"is_witness_numeric", cert.is_witness_numeric},
                {"min_product_value", cert.min_product_value},
                {"min_eigenvalue", cert.min_eigenvalue},
                {"negative_rank", cert.negative_rank},
                {"provenance", cert.witness.provenance}};
    if (cert.detection_state) {
        out["detection_state"] = operator_to_json(*cert.detection_state);
        out["detection_value"] = cert.detection_value;
    } else {
        out["detection_state"] = nullptr;
    }
    out["see_saw"] = see_saw_report_to_json(cert.see_saw);
    return out;
}

json extension_spec_to_json(const ExtensionSpec &spec) {
    return {{"cap_left", operator_to_json(spec.cap_left())},
            {"cap_right", operator_to_json(spec.cap_right())}};
}

ExtensionSpec extension_spec_from_json(const json &doc) {
    return ExtensionSpec(operator_from_json(field(doc, "cap_left")),
                         operator_from_json(field(doc, "cap_right")));
}

json exhibit_to_json(const choi::Exhibit &exhibit) {
    return {{"extended_witness", operator_to_json(exhibit.extended_witness.op)},
            {"rho_abb", operator_to_json(exhibit.rho_abb)},
            {"rho_ab", operator_to_json(exhibit.rho_ab)},
            {"ext_value", exhibit.values.ext_value},
            {"reduced_value", exhibit.values.reduced_value},
            {"ext_closed_form", exhibit.values.ext_closed_form},
            {"reduced_closed_form", exhibit.values.reduced_closed_form},
            {"kappa", exhibit.kappa},
            {"rho_abb_min_eigenvalue", exhibit.rho_abb_min_eigenvalue},
            {"rho_abb_psd", exhibit.rho_abb_psd},
            {"detected_extended", exhibit.detected_extended},
            {"undetected_reduced", exhibit.undetected_reduced},
            {"accepted", exhibit.accepted},
            {"message", exhibit.message}};
}

json scenario_to_json(const mdiew::MdiewScenario &scenario) {
    auto basis = [](const mdiew::StateBasis &b) {
        json out = json::array();
        for (const HermitianOperator &s : b.states) {
            out.push_back(operator_to_json(s));
        }
        return out;
    };
    json beta = json::array();
    for (Eigen::Index s = 0; s < scenario.beta.rows(); ++s) {
        json row = json::array();
        for (Eigen::Index t = 0; t < scenario.beta.cols(); ++t) {
            row.push_back(scenario.beta(s, t));
        }
        beta.push_back(std::move(row));
    }
    return {{"witness", operator_to_json(scenario.witness.op)},
            {"basis_left", basis(scenario.basis_left)},
            {"basis_right", basis(scenario.basis_right)},
            {"beta", std::move(beta)},
            {"povm_left", operator_to_json(scenario.povm_left)},
            {"povm_right", operator_to_json(scenario.povm_right)}};
}

mdiew::MdiewScenario scenario_from_json(const json &doc) {
    auto basis = [](const json &arr) {
        if (!arr.is_array() || arr.empty()) {
            throw InputError("basis must be a nonempty array of operators");
        }
        mdiew::StateBasis b;
        for (const json &s : arr) {
            b.states.push_back(operator_from_json(s));
        }
        b.dim = b.states.front().dim();
        return b;
    };
    mdiew::MdiewScenario out;
    out.witness = Witness{operator_from_json(field(doc, "witness")), "scenario"};
    out.basis_left = basis(field(doc, "basis_left"));
    out.basis_right = basis(field(doc, "basis_right"));
    const json &beta = field(doc, "beta");
    if (!beta.is_array() || beta.size() != out.basis_left.states.size()) {
        throw InputError("beta must have one row per left basis state");
    }
    out.beta.resize(static_cast<Eigen::Index>(beta.size()),
                    static_cast<Eigen::Index>(out.basis_right.states.size()));
    for (size_t s = 0; s < beta.size(); ++s) {
        if (!beta[s].is_array() || beta[s].size() != out.basis_right.states.size()) {
            throw InputError("beta must have one column per right basis state");
        }
        for (size_t t = 0; t < beta[s].size(); ++t) {
            if (!beta[s][t].is_number()) {
                throw InputError("beta entries must be real numbers");
            }
            out.beta(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) =
                beta[s][t].get<double>();
        }
    }
    out.povm_left = operator_from_json(field(doc, "povm_left"));
    out.povm_right = operator_from_json(field(doc, "povm_right"));
    mdiew::validate_basis(out.basis_left);
    mdiew::validate_basis(out.basis_right);
    out.validate();
    return out;
}

json audit_report_to_json(const mdiew::AuditReport &report) {
    return {{"trials", report.trials},
            {"min_value", report.min_value},
            {"max_value", report.max_value},
            {"min_term", report.min_term},
            {"max_route_gap", report.max_route_gap},
            {"negative_values", report.negative_values},
            {"route_mismatches", report.route_mismatches},
            {"first_failure", report.first_failure},
            {"passed", report.passed()}};
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

std::string dump(const json &doc) { return doc.dump(2) + "\n"; }

}  // namespace extwit::io
