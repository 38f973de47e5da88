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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "extwit/choi.h"
#include "extwit/errors.h"
#include "extwit/extension.h"
#include "extwit/json_io.h"
#include "extwit/linalg.h"
#include "extwit/mdiew.h"
#include "extwit/random.h"
#include "extwit/witness.h"

namespace extwit::cli {
namespace {

using io::json;

class Table {
   public:
    explicit Table(std::string title) : title_(std::move(title)) {}

    template <typename T>
    void row(const std::string &key, const T &value) {
        std::ostringstream s;
        s << std::setprecision(12) << value;
        rows_.emplace_back(key, s.str());
    }

    void print(std::ostream &os) const {
        size_t width = 0;
        for (const auto &[k, v] : rows_) {
            width = std::max(width, k.size());
        }
        os << title_ << "\n";
        for (const auto &[k, v] : rows_) {
            os << "  " << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << "\n";
        }
    }

   private:
    std::string title_;
    std::vector<std::pair<std::string, std::string>> rows_;
};

const char *yes_no(bool b) { return b ? "yes" : "no"; }

HermitianOperator identity_witness() { return HermitianOperator::identity(SystemLayout::bipartite(2, 2)); }

HermitianOperator load_operator(const std::string &arg) {
    if (!arg.empty() && arg[0] == '@') {
        auto op = catalogue_operator(arg.substr(1));
        if (!op) {
            throw InputError("unknown catalogue entry " + arg);
        }
        return *op;
    }
    return io::operator_from_json(io::read_json_file(arg));
}

ExtensionSpec exhibit_caps() { return ExtensionSpec(HermitianOperator::identity(SystemLayout::single(1)), choi::exhibit_cap()); }

ExtensionSpec load_spec(const std::string &arg) {
    if (arg == "@exhibit-caps") {
        return exhibit_caps();
    }
    return io::extension_spec_from_json(io::read_json_file(arg));
}

json config_json(const std::string &command, const RunConfig &cfg, json extra) {
    json out = {{"command", command},
                {"seed", cfg.seed},
                {"restarts", cfg.restarts},
                {"tol", cfg.tol},
                {"trials", cfg.trials},
                {"json_out", cfg.json_out.empty() ? json(nullptr) : json(cfg.json_out)},
                {"quiet", cfg.quiet}};
    for (auto &[k, v] : extra.items()) {
        out[k] = v;
    }
    return out;
}

CertifyOptions certify_options(const RunConfig &cfg, uint64_t stream) {
    CertifyOptions opts;
    opts.see_saw.restarts = cfg.restarts;
    opts.see_saw.seed = derive_seed(cfg.seed, stream);
    opts.tol = cfg.tol;
    return opts;
}

ZeroSearchOptions zero_options(const RunConfig &cfg, uint64_t stream) {
    ZeroSearchOptions opts;
    opts.seed = derive_seed(cfg.seed, stream);
    return opts;
}

void check_config(const RunConfig &cfg) {
    if (cfg.restarts < 1) {
        throw InputError("--restarts must be >= 1");
    }
    if (cfg.trials < 1) {
        throw InputError("--trials must be >= 1");
    }
    if (!(cfg.tol >= 0.0)) {
        throw InputError("--tol must be nonnegative");
    }
}

struct Outcome {
    json doc;
    int code = kExitOk;
    Table table{""};
};

Outcome cmd_certify(const RunConfig &cfg, const std::string &witness_arg) {
    Witness w{load_operator(witness_arg), witness_arg};
    w.op.layout().require_bipartite();
    Certification cert = certify_witness(w, certify_options(cfg, 1));

    json spanning = nullptr;
    json nd = nullptr;
    std::string spanning_verdict = "not-applicable";
    std::string nd_verdict = "not-applicable";
    if (cert.is_witness_numeric) {
        SpanningResult ws = spanning_of(w.op, zero_options(cfg, 2));
        SpanningResult gs = spanning_of(partial_transpose(w.op), zero_options(cfg, 3));
        spanning = io::spanning_to_json(ws);
        nd = {{"witness_side", io::spanning_to_json(ws)}, {"gamma_side", io::spanning_to_json(gs)}};
        spanning_verdict = to_string(ws.verdict);
        nd_verdict = (ws.confirmed() && gs.confirmed()) ? to_string(SpanningVerdict::kConfirmed)
                                                       : to_string(SpanningVerdict::kNotFoundAtBudget);
        nd["verdict"] = nd_verdict;
    }

    Outcome o;
    o.doc = {{"config", config_json("certify", cfg, {{"witness", witness_arg}})},
             {"layout", w.op.layout().str()},
             {"is_witness_numeric", cert.is_witness_numeric},
             {"min_product_value", cert.min_product_value},
             {"min_eigenvalue", cert.min_eigenvalue},
             {"negative_rank", cert.negative_rank},
             {"detection_state",
              cert.detection_state ? io::operator_to_json(*cert.detection_state) : json(nullptr)},
             {"detection_value", cert.detection_value},
             {"spanning_verdict", spanning_verdict},
             {"spanning", spanning},
             {"nd_spanning_verdict", nd_verdict},
             {"nd_spanning", nd},
             {"see_saw", io::see_saw_report_to_json(cert.see_saw)}};

    o.table = Table("certify " + witness_arg);
    o.table.row("layout", w.op.layout().str());
    o.table.row("witness (numeric)", yes_no(cert.is_witness_numeric));
    o.table.row("min product value", cert.min_product_value);
    o.table.row("min eigenvalue", cert.min_eigenvalue);
    o.table.row("negative rank", cert.negative_rank);
    if (cert.detection_state) {
        o.table.row("detection value", cert.detection_value);
    }
    o.table.row("spanning", spanning_verdict);
    if (cert.is_witness_numeric) {
        o.table.row("zero-set rank", spanning["rank"].get<int>());
    }
    o.table.row("nd-spanning", nd_verdict);
    return o;
}

Outcome cmd_extend(const RunConfig &cfg,
                   const std::string &witness_arg,
                   const std::string &spec_arg,
                   const std::vector<int> &random_caps,
                   const std::string &witness_out) {
    Witness w{load_operator(witness_arg), witness_arg};
    w.op.layout().require_bipartite();

    std::optional<ExtensionSpec> spec;
    json spec_source;
    if (!random_caps.empty()) {
        if (!spec_arg.empty()) {
            throw InputError("give either a spec file or --random-caps, not both");
        }
        if (random_caps.size() != 2 || random_caps[0] < 1 || random_caps[1] < 1) {
            throw InputError("--random-caps needs two dimensions >= 1");
        }
        uint64_t s = derive_seed(cfg.seed, 10);
        spec.emplace(random_density(random_caps[0], derive_seed(s, 0)),
                     random_density(random_caps[1], derive_seed(s, 1)));
        spec_source = {{"random_caps", random_caps}};
    } else {
        if (spec_arg.empty()) {
            throw InputError("extend needs a spec file or --random-caps");
        }
        spec.emplace(load_spec(spec_arg));
        spec_source = {{"spec", spec_arg}};
    }

    Witness ext = extend_witness(w, *spec);
    Certification cert = certify_witness(ext, certify_options(cfg, 11));
    double residual = gamma_of_extension_residual(w, *spec);
    bool gamma_ok = gamma_of_extension_check(w, *spec);
    bool preserved = cert.min_product_value >= -cfg.tol;

    json extra = spec_source;
    extra["witness"] = witness_arg;
    if (!witness_out.empty()) {
        extra["witness_out"] = witness_out;
    }

    Outcome o;
    o.doc = {{"config", config_json("extend", cfg, extra)},
             {"spec", io::extension_spec_to_json(*spec)},
             {"extended_witness", io::operator_to_json(ext.op)},
             {"provenance", ext.provenance},
             {"recertification", io::certification_to_json(cert)},
             {"witness_preserved", preserved},
             {"gamma_check", {{"residual", residual}, {"passed", gamma_ok}}}};
    o.code = (preserved && gamma_ok) ? kExitOk : kExitViolation;

    if (!witness_out.empty()) {
        std::ofstream f(witness_out);
        if (!f) {
            throw InputError("cannot write " + witness_out);
        }
        f << io::dump(io::operator_to_json(ext.op));
    }

    o.table = Table("extend " + witness_arg);
    o.table.row("extended layout", ext.op.layout().str());
    o.table.row("min product value", cert.min_product_value);
    o.table.row("witness preserved", yes_no(preserved));
    o.table.row("gamma residual", residual);
    o.table.row("gamma check", yes_no(gamma_ok));
    return o;
}

Outcome cmd_choi_demo(const RunConfig &cfg, const std::string &params_arg) {
    choi::AbParams params = choi::AbParams::exhibit_default();
    HermitianOperator cap = choi::exhibit_cap();
    if (!params_arg.empty()) {
        json doc = io::read_json_file(params_arg);
        if (!doc.is_object() || !doc.contains("a") || !doc.contains("b")) {
            throw InputError("params file needs \"a\" and \"b\" matrices");
        }
        params = choi::AbParams(io::matrix_from_json(doc["a"]), io::matrix_from_json(doc["b"]));
        if (doc.contains("cap")) {
            cap = io::operator_from_json(doc["cap"]);
        }
    }
    choi::Exhibit ex = choi::nontrivial_extension_exhibit(params, cap);

    json extra = json::object();
    if (!params_arg.empty()) {
        extra["params"] = params_arg;
    }
    Outcome o;
    o.doc = {{"config", config_json("choi-demo", cfg, extra)},
             {"a", io::matrix_to_json(params.a())},
             {"b", io::matrix_to_json(params.b())},
             {"cap", io::operator_to_json(cap)},
             {"exhibit", io::exhibit_to_json(ex)}};
    o.code = ex.accepted ? kExitOk : kExitViolation;

    o.table = Table("choi-demo");
    o.table.row("extended value", ex.values.ext_value);
    o.table.row("closed form x kappa", ex.values.ext_closed_form * ex.kappa);
    o.table.row("reduced value", ex.values.reduced_value);
    o.table.row("kappa", ex.kappa);
    o.table.row("rho_ABB' min eig", ex.rho_abb_min_eigenvalue);
    o.table.row("accepted", yes_no(ex.accepted));
    if (!ex.message.empty()) {
        o.table.row("message", ex.message);
    }
    return o;
}

Outcome cmd_mdiew_decompose(const RunConfig &cfg, const std::string &witness_arg) {
    Witness w{load_operator(witness_arg), witness_arg};
    mdiew::MdiewScenario scenario = mdiew::ideal_scenario(w);
    mdiew::Decomposition dec = mdiew::decompose_witness(w.op, scenario.basis_left, scenario.basis_right);

    Outcome o;
    o.doc = {{"config", config_json("mdiew decompose", cfg, {{"witness", witness_arg}})},
             {"residual", dec.residual},
             {"max_imag", dec.max_imag},
             {"scenario", io::scenario_to_json(scenario)}};
    o.table = Table("mdiew decompose " + witness_arg);
    o.table.row("basis sizes", std::to_string(scenario.basis_left.states.size()) + " x " +
                                   std::to_string(scenario.basis_right.states.size()));
    o.table.row("residual", dec.residual);
    o.table.row("max imaginary part", dec.max_imag);
    return o;
}

mdiew::AuditMode parse_mode(const std::string &mode) {
    for (auto m : {mdiew::AuditMode::kArbitraryPovm, mdiew::AuditMode::kMisaligned,
                   mdiew::AuditMode::kWrongDegreesOfFreedom}) {
        if (mode == mdiew::to_string(m)) {
            return m;
        }
    }
    throw InputError("unknown audit mode " + mode);
}

Outcome cmd_mdiew_audit(const RunConfig &cfg,
                        const std::string &witness_arg,
                        const std::string &scenario_arg,
                        const std::string &mode,
                        int max_members,
                        int extra_dims) {
    mdiew::MdiewScenario scenario;
    json extra = {{"mode", mode}, {"max_members", max_members}, {"extra_dims", extra_dims}};
    if (!scenario_arg.empty()) {
        if (!witness_arg.empty()) {
            throw InputError("give either a witness or --scenario, not both");
        }
        scenario = io::scenario_from_json(io::read_json_file(scenario_arg));
        extra["scenario"] = scenario_arg;
    } else {
        if (witness_arg.empty()) {
            throw InputError("mdiew audit needs a witness or --scenario");
        }
        scenario = mdiew::ideal_scenario(Witness{load_operator(witness_arg), witness_arg});
        extra["witness"] = witness_arg;
    }

    mdiew::AuditOptions opts;
    opts.trials = cfg.trials;
    opts.seed = derive_seed(cfg.seed, 20);
    opts.mode = parse_mode(mode);
    opts.max_members = max_members;
    opts.extra_dims = extra_dims;
    opts.tol = cfg.tol;
    mdiew::AuditReport report = mdiew::separable_nonnegativity_audit(scenario, opts);

    Outcome o;
    o.doc = {{"config", config_json("mdiew audit", cfg, extra)}, {"audit", io::audit_report_to_json(report)}};
    o.code = report.passed() ? kExitOk : kExitViolation;
    o.table = Table("mdiew audit (" + mode + ")");
    o.table.row("trials", report.trials);
    o.table.row("min value", report.min_value);
    o.table.row("max value", report.max_value);
    o.table.row("min per-member term", report.min_term);
    o.table.row("max route gap", report.max_route_gap);
    o.table.row("negative values", report.negative_values);
    o.table.row("route mismatches", report.route_mismatches);
    o.table.row("passed", yes_no(report.passed()));
    return o;
}

Outcome cmd_fixtures(const RunConfig &cfg, const std::string &dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw InputError("cannot create " + dir + ": " + ec.message());
    }
    choi::AbParams params = choi::AbParams::exhibit_default();
    std::map<std::string, json> files;
    for (const std::string &name : catalogue_names()) {
        files[name + ".json"] = io::operator_to_json(*catalogue_operator(name));
    }
    files["exhibit-caps.json"] = io::extension_spec_to_json(exhibit_caps());
    files["exhibit-params.json"] = {{"a", io::matrix_to_json(params.a())},
                                    {"b", io::matrix_to_json(params.b())},
                                    {"cap", io::operator_to_json(choi::exhibit_cap())}};

    json written = json::array();
    for (const auto &[name, doc] : files) {
        std::filesystem::path p = std::filesystem::path(dir) / name;
        std::ofstream f(p);
        if (!f) {
            throw InputError("cannot write " + p.string());
        }
        f << io::dump(doc);
        written.push_back(name);
    }
    Outcome o;
    o.doc = {{"config", config_json("fixtures", cfg, {{"dir", dir}})}, {"written", written}};
    o.table = Table("fixtures");
    o.table.row("directory", dir);
    o.table.row("files", written.size());
    return o;
}

}  // namespace

std::vector<std::string> catalogue_names() { return {"choi", "identity", "ppt-state", "swap"}; }

std::optional<HermitianOperator> catalogue_operator(const std::string &name) {
    if (name == "choi") {
        return choi::choi_witness().op;
    }
    if (name == "swap") {
        return swap_witness(2).op;
    }
    if (name == "identity") {
        return identity_witness();
    }
    if (name == "ppt-state") {
        return choi::ppt_entangled_state(choi::kCatalogueAlpha);
    }
    return std::nullopt;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Construct, extend and certify bipartite entanglement witnesses."};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", cfg.seed, "master seed")->capture_default_str();
    app.add_option("--restarts", cfg.restarts, "see-saw restarts")->capture_default_str();
    app.add_option("--tol", cfg.tol, "certification tolerance")->capture_default_str();
    app.add_option("--trials", cfg.trials, "audit trials")->capture_default_str();
    app.add_option("--json-out", cfg.json_out, "write JSON here instead of stdout");
    app.add_flag("--quiet", cfg.quiet, "suppress the summary table");

    std::string witness_arg;
    std::string spec_arg;
    std::string params_arg;
    std::string scenario_arg;
    std::string witness_out;
    std::string mode = mdiew::to_string(mdiew::AuditMode::kArbitraryPovm);
    std::string dir = "data";
    std::vector<int> random_caps;
    int max_members = 4;
    int extra_dims = 1;

    auto *certify = app.add_subcommand("certify", "certify a witness and test spanning");
    certify->add_option("witness", witness_arg, "operator JSON file or @catalogue name")->required();

    auto *extend = app.add_subcommand("extend", "extend a witness by PSD caps and re-certify");
    extend->add_option("witness", witness_arg, "operator JSON file or @catalogue name")->required();
    extend->add_option("spec", spec_arg, "extension spec JSON file or @exhibit-caps");
    extend->add_option("--random-caps", random_caps, "draw seeded random density caps of these dims")
        ->expected(2);
    extend->add_option("--witness-out", witness_out, "also write the extended witness here");

    auto *demo = app.add_subcommand("choi-demo", "nontrivial extension exhibit");
    demo->add_option("--params", params_arg, "JSON with a, b and optional cap");

    auto *mdiew_cmd = app.add_subcommand("mdiew", "measurement-device-independent witnessing");
    mdiew_cmd->require_subcommand(1);
    auto *decompose = mdiew_cmd->add_subcommand("decompose", "expand a witness in input-state bases");
    decompose->add_option("witness", witness_arg, "operator JSON file or @catalogue name")->required();
    auto *audit = mdiew_cmd->add_subcommand("audit", "separable-nonnegativity audit");
    audit->add_option("witness", witness_arg, "operator JSON file or @catalogue name");
    audit->add_option("--scenario", scenario_arg, "scenario JSON instead of a witness");
    audit->add_option("--mode", mode, "arbitrary-povm | misaligned | wrong-dof")->capture_default_str();
    audit->add_option("--max-members", max_members, "separable ensemble size bound")->capture_default_str();
    audit->add_option("--extra-dims", extra_dims, "wrong-dof embedding excess")->capture_default_str();

    auto *fixtures = app.add_subcommand("fixtures", "write the bundled fixtures");
    fixtures->add_option("--dir", dir, "target directory")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        check_config(cfg);
        Outcome o;
        if (certify->parsed()) {
            o = cmd_certify(cfg, witness_arg);
        } else if (extend->parsed()) {
            o = cmd_extend(cfg, witness_arg, spec_arg, random_caps, witness_out);
        } else if (demo->parsed()) {
            o = cmd_choi_demo(cfg, params_arg);
        } else if (decompose->parsed()) {
            o = cmd_mdiew_decompose(cfg, witness_arg);
        } else if (audit->parsed()) {
            o = cmd_mdiew_audit(cfg, witness_arg, scenario_arg, mode, max_members, extra_dims);
        } else {
            o = cmd_fixtures(cfg, dir);
        }
        o.doc["exit_code"] = o.code;

        std::string text = io::dump(o.doc);
        if (cfg.json_out.empty()) {
            out << text;
        } else {
            std::ofstream f(cfg.json_out);
            if (!f) {
                throw InputError("cannot write " + cfg.json_out);
            }
            f << text;
        }
        if (!cfg.quiet) {
            o.table.print(err);
        }
        return o.code;
    } catch (const InputError &e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const LayoutError &e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const PreconditionError &e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const json::exception &e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const NumericalError &e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitViolation;
    }
}

}  // namespace extwit::cli
