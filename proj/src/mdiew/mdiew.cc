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

#include "extwit/mdiew.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "extwit/errors.h"
#include "extwit/extension.h"
#include "extwit/linalg.h"
#include "extwit/random.h"

namespace extwit::mdiew {
namespace {

Vector vec(const Matrix &m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

void require_povm(const HermitianOperator &e, const char *side) {
    if (!is_povm_element(e)) {
        throw InputError(std::string(side) + " POVM element violates 0 <= E <= I");
    }
}

// P(0,0|s,t) without the POVM checks; `povms` is E_left ⊗ E_right.
double joint_probability_unchecked(const HermitianOperator &rho,
                                   const HermitianOperator &sigma_s,
                                   const HermitianOperator &sigma_t,
                                   const Matrix &povms) {
    int ea = rho.layout().left_dim();
    int eb = rho.layout().right_dim();
    HermitianOperator local_rho = rho.with_layout(SystemLayout::bipartite(ea, eb));
    HermitianOperator input_s = sigma_s.transpose().with_layout(SystemLayout::single(sigma_s.dim()));
    HermitianOperator input_t = sigma_t.transpose().with_layout(SystemLayout::single(sigma_t.dim()));
    // rho_AB ⊗ sigma_A'^T ⊗ sigma_B'^T, reordered to A' A B B'.
    HermitianOperator joint = permute_systems(kron({local_rho, input_s, input_t}), {2, 0, 1, 3}, 2);
    if (joint.dim() != povms.rows()) {
        throw LayoutError("POVM elements do not match the A' A B B' dimensions");
    }
    return trace_product(joint.matrix(), povms).real();
}

Matrix isometry(int from, int to, uint64_t seed) {
    return random_unitary(to, seed).leftCols(from);
}

}  // namespace

StateBasis tomographic_basis(int d) {
    if (d < 2) {
        throw InputError("tomographic basis needs d >= 2");
    }
    StateBasis basis;
    basis.dim = d;
    SystemLayout layout = SystemLayout::single(d);
    for (int m = 0; m < d; ++m) {
        basis.states.push_back(HermitianOperator::projector(layout, Vector::Unit(d, m)));
    }
    const double r = 1.0 / std::sqrt(2.0);
    for (int m = 0; m < d; ++m) {
        for (int n = m + 1; n < d; ++n) {
            Vector plus = Vector::Zero(d);
            plus(m) = r;
            plus(n) = r;
            Vector plus_i = Vector::Zero(d);
            plus_i(m) = r;
            plus_i(n) = Complex(0.0, r);
            basis.states.push_back(HermitianOperator::projector(layout, plus));
            basis.states.push_back(HermitianOperator::projector(layout, plus_i));
        }
    }
    validate_basis(basis);
    return basis;
}

void validate_basis(const StateBasis &basis) {
    int d = basis.dim;
    if (static_cast<int>(basis.states.size()) != d * d) {
        throw InputError("basis on C^" + std::to_string(d) + " needs " + std::to_string(d * d) +
                         " states, got " + std::to_string(basis.states.size()));
    }
    for (size_t k = 0; k < basis.states.size(); ++k) {
        const HermitianOperator &s = basis.states[k];
        if (s.dim() != d) {
            throw InputError("basis member " + std::to_string(k) + " has the wrong dimension");
        }
        if (std::abs(s.trace() - 1.0) > 1e-10 || !is_psd(s, 1e-10)) {
            throw InputError("basis member " + std::to_string(k) + " is not a state");
        }
    }
    // Add members one at a time; a member that does not raise the rank of the
    // stacked vectorizations depends on earlier ones.
    std::vector<int> dependent;
    Matrix stacked(d * d, 0);
    int rank = 0;
    for (size_t k = 0; k < basis.states.size(); ++k) {
        stacked.conservativeResize(Eigen::NoChange, stacked.cols() + 1);
        stacked.col(stacked.cols() - 1) = vec(basis.states[k].matrix());
        int next = numerical_rank(stacked, 1e-8);
        if (next == rank) {
            dependent.push_back(static_cast<int>(k));
        }
        rank = next;
    }
    if (!dependent.empty()) {
        std::ostringstream msg;
        msg << "basis is rank deficient (rank " << rank << " of " << d * d
            << "); dependent members:";
        for (int k : dependent) {
            msg << " " << k;
        }
        throw InputError(msg.str());
    }
}

HermitianOperator reconstruct(const Eigen::MatrixXd &beta, const StateBasis &left, const StateBasis &right) {
    int n = left.dim * right.dim;
    Matrix sum = Matrix::Zero(n, n);
    for (size_t s = 0; s < left.states.size(); ++s) {
        for (size_t t = 0; t < right.states.size(); ++t) {
            sum += beta(s, t) * kron(left.states[s].matrix(), right.states[t].matrix());
        }
    }
    return HermitianOperator(SystemLayout::bipartite(left.dim, right.dim), std::move(sum));
}

Decomposition decompose_witness(const HermitianOperator &w, const StateBasis &left, const StateBasis &right) {
    validate_basis(left);
    validate_basis(right);
    w.layout().require_bipartite();
    if (w.layout().left_dim() != left.dim || w.layout().right_dim() != right.dim) {
        throw LayoutError("bases on C^" + std::to_string(left.dim) + " ⊗ C^" +
                          std::to_string(right.dim) + " do not match witness layout " +
                          w.layout().str());
    }
    const int ks = static_cast<int>(left.states.size());
    const int kt = static_cast<int>(right.states.size());
    const int n = w.dim();
    Matrix system(n * n, ks * kt);
    for (int s = 0; s < ks; ++s) {
        for (int t = 0; t < kt; ++t) {
            system.col(s * kt + t) = vec(kron(left.states[s].matrix(), right.states[t].matrix()));
        }
    }
    Eigen::ColPivHouseholderQR<Matrix> qr(system);
    if (qr.rank() != ks * kt) {
        throw NumericalError("product basis is rank deficient");
    }
    Vector solution = qr.solve(vec(w.matrix()));

    Decomposition out;
    out.beta.resize(ks, kt);
    for (int s = 0; s < ks; ++s) {
        for (int t = 0; t < kt; ++t) {
            Complex c = solution(s * kt + t);
            out.beta(s, t) = c.real();
            out.max_imag = std::max(out.max_imag, std::abs(c.imag()));
        }
    }
    out.residual = (reconstruct(out.beta, left, right).matrix() - w.matrix()).norm();
    if (out.max_imag > 1e-10) {
        throw NumericalError("decomposition coefficients have imaginary part " +
                             std::to_string(out.max_imag));
    }
    if (out.residual > 1e-9 * std::max(1.0, w.frobenius_norm())) {
        throw NumericalError("decomposition residual " + std::to_string(out.residual) +
                             " exceeds tolerance");
    }
    return out;
}

HermitianOperator maximally_entangled_projector(int d) {
    if (d < 1) {
        throw InputError("dimension must be >= 1");
    }
    Vector v = Vector::Zero(d * d);
    for (int k = 0; k < d; ++k) {
        v(k * d + k) = 1.0 / std::sqrt(static_cast<double>(d));
    }
    return HermitianOperator::projector(SystemLayout::bipartite(d, d), v);
}

bool is_povm_element(const HermitianOperator &e, double tol) {
    Spectrum s = eigh(e);
    return s.values(s.values.size() - 1) >= -tol && s.values(0) <= 1.0 + tol;
}

double joint_probability(const HermitianOperator &rho,
                         const HermitianOperator &sigma_s,
                         const HermitianOperator &sigma_t,
                         const HermitianOperator &povm_left,
                         const HermitianOperator &povm_right) {
    require_povm(povm_left, "left");
    require_povm(povm_right, "right");
    if (povm_left.dim() != sigma_s.dim() * rho.layout().left_dim() ||
        povm_right.dim() != rho.layout().right_dim() * sigma_t.dim()) {
        throw LayoutError("POVM elements do not match the A' A B B' dimensions");
    }
    return joint_probability_unchecked(rho, sigma_s, sigma_t,
                                       kron(povm_left.matrix(), povm_right.matrix()));
}

void MdiewScenario::validate() const {
    require_povm(povm_left, "left");
    require_povm(povm_right, "right");
    double residual = (reconstruct(beta, basis_left, basis_right).matrix() - witness.op.matrix()).norm();
    if (residual > 1e-9 * std::max(1.0, witness.op.frobenius_norm())) {
        throw InputError("beta does not reconstruct the witness (residual " +
                         std::to_string(residual) + ")");
    }
}

MdiewScenario make_scenario(const Witness &w, HermitianOperator povm_left, HermitianOperator povm_right) {
    w.op.layout().require_bipartite();
    MdiewScenario scenario;
    scenario.witness = w;
    scenario.basis_left = tomographic_basis(w.op.layout().left_dim());
    scenario.basis_right = tomographic_basis(w.op.layout().right_dim());
    scenario.beta = decompose_witness(w.op, scenario.basis_left, scenario.basis_right).beta;
    scenario.povm_left = std::move(povm_left);
    scenario.povm_right = std::move(povm_right);
    scenario.validate();
    return scenario;
}

MdiewScenario ideal_scenario(const Witness &w) {
    w.op.layout().require_bipartite();
    return make_scenario(w, maximally_entangled_projector(w.op.layout().left_dim()),
                         maximally_entangled_projector(w.op.layout().right_dim()));
}

double mdiew_value(const MdiewScenario &scenario, const HermitianOperator &rho) {
    require_povm(scenario.povm_left, "left");
    require_povm(scenario.povm_right, "right");
    const int da = scenario.basis_left.dim;
    const int db = scenario.basis_right.dim;
    const int ea = rho.layout().left_dim();
    const int eb = rho.layout().right_dim();
    if (scenario.povm_left.dim() != da * ea || scenario.povm_right.dim() != eb * db) {
        throw LayoutError("POVM elements do not match the A' A B B' dimensions");
    }
    Matrix povms = kron(scenario.povm_left.matrix(), scenario.povm_right.matrix());

    // Contract rho into the POVM product once: with J = rho ⊗ tau reordered to
    // A' A B B', Tr(J M) = Tr(tau R) where R lives on A' B'.
    auto index = [&](int ap, int a, int b, int bp) { return ((ap * ea + a) * eb + b) * db + bp; };
    Matrix r = Matrix::Zero(da * db, da * db);
    for (int ap = 0; ap < da; ++ap) {
        for (int bp = 0; bp < db; ++bp) {
            for (int ap2 = 0; ap2 < da; ++ap2) {
                for (int bp2 = 0; bp2 < db; ++bp2) {
                    Complex sum = 0.0;
                    for (int a = 0; a < ea; ++a) {
                        for (int b = 0; b < eb; ++b) {
                            for (int a2 = 0; a2 < ea; ++a2) {
                                for (int b2 = 0; b2 < eb; ++b2) {
                                    sum += rho(a * eb + b, a2 * eb + b2) *
                                           povms(index(ap2, a2, b2, bp2), index(ap, a, b, bp));
                                }
                            }
                        }
                    }
                    r(ap2 * db + bp2, ap * db + bp) = sum;
                }
            }
        }
    }

    double total = 0.0;
    for (size_t s = 0; s < scenario.basis_left.states.size(); ++s) {
        for (size_t t = 0; t < scenario.basis_right.states.size(); ++t) {
            double beta = scenario.beta(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t));
            if (beta == 0.0) {
                continue;
            }
            Matrix tau = kron(Matrix(scenario.basis_left.states[s].matrix().transpose()),
                              Matrix(scenario.basis_right.states[t].matrix().transpose()));
            total += beta * trace_product(tau, r).real();
        }
    }
    return total;
}

double extended_witness_route(const MdiewScenario &scenario,
                              const SeparableEnsemble &ensemble,
                              std::vector<double> *terms) {
    if (ensemble.layout().num_systems() != 2) {
        throw LayoutError("extended-witness route needs a two-party ensemble");
    }
    Matrix povms = kron(scenario.povm_left.matrix(), scenario.povm_right.matrix());
    Witness transposed{scenario.witness.op.transpose(), scenario.witness.provenance + "^T"};
    double total = 0.0;
    for (size_t i = 0; i < ensemble.size(); ++i) {
        const auto &member = ensemble.members()[i];
        ExtensionSpec caps(member[0], member[1]);
        // [A, A', B', B] -> [A', A, B, B'].
        HermitianOperator extended =
            permute_systems(extend_witness(transposed, caps).op, {1, 0, 3, 2}, 2);
        if (extended.dim() != povms.rows()) {
            throw LayoutError("POVM elements do not match the extended witness");
        }
        double term = trace_product(extended.matrix(), povms).real();
        if (terms != nullptr) {
            terms->push_back(term);
        }
        total += ensemble.weights()[i] * term;
    }
    return total;
}

const char *to_string(AuditMode mode) {
    switch (mode) {
        case AuditMode::kArbitraryPovm:
            return "arbitrary-povm";
        case AuditMode::kMisaligned:
            return "misaligned";
        case AuditMode::kWrongDegreesOfFreedom:
            return "wrong-dof";
    }
    return "unknown";
}

AuditReport separable_nonnegativity_audit(const MdiewScenario &scenario, const AuditOptions &options) {
    if (options.trials < 1) {
        throw InputError("audit needs at least one trial");
    }
    if (options.max_members < 1 || options.extra_dims < 0) {
        throw InputError("audit needs max_members >= 1 and extra_dims >= 0");
    }
    const int da = scenario.basis_left.dim;
    const int db = scenario.basis_right.dim;

    AuditReport report;
    report.trials = options.trials;
    report.min_value = std::numeric_limits<double>::infinity();
    report.max_value = -std::numeric_limits<double>::infinity();
    report.min_term = std::numeric_limits<double>::infinity();

    for (int trial = 0; trial < options.trials; ++trial) {
        uint64_t trial_seed = derive_seed(options.seed, static_cast<uint64_t>(trial));
        Rng rng(trial_seed);
        int members = rng.uniform_int(1, options.max_members);
        bool embed = options.mode == AuditMode::kWrongDegreesOfFreedom;
        int ea = embed ? da + options.extra_dims : da;
        int eb = embed ? db + options.extra_dims : db;

        SeparableEnsemble base = random_separable(SystemLayout::bipartite(da, db), members,
                                                  derive_seed(trial_seed, 1));
        SeparableEnsemble ensemble = base;
        if (embed) {
            Matrix va = isometry(da, ea, derive_seed(trial_seed, 2));
            Matrix vb = isometry(db, eb, derive_seed(trial_seed, 3));
            std::vector<std::vector<HermitianOperator>> moved;
            for (const auto &member : base.members()) {
                moved.push_back({HermitianOperator(SystemLayout::single(ea),
                                                   va * member[0].matrix() * va.adjoint()),
                                 HermitianOperator(SystemLayout::single(eb),
                                                   vb * member[1].matrix() * vb.adjoint())});
            }
            ensemble = SeparableEnsemble(SystemLayout::bipartite(ea, eb), base.weights(),
                                         std::move(moved));
        }

        MdiewScenario trial_scenario = scenario;
        SystemLayout left_layout = SystemLayout::bipartite(da, ea);
        SystemLayout right_layout = SystemLayout::bipartite(eb, db);
        if (options.mode == AuditMode::kMisaligned) {
            Matrix ul = random_unitary(da * ea, derive_seed(trial_seed, 4));
            Matrix ur = random_unitary(eb * db, derive_seed(trial_seed, 5));
            trial_scenario.povm_left = HermitianOperator(
                left_layout, ul * maximally_entangled_projector(da).matrix() * ul.adjoint());
            trial_scenario.povm_right = HermitianOperator(
                right_layout, ur * maximally_entangled_projector(db).matrix() * ur.adjoint());
        } else {
            trial_scenario.povm_left = random_povm_first_element(left_layout, derive_seed(trial_seed, 4));
            trial_scenario.povm_right =
                random_povm_first_element(right_layout, derive_seed(trial_seed, 5));
        }

        double direct = mdiew_value(trial_scenario, ensemble.density());
        std::vector<double> terms;
        double route = extended_witness_route(trial_scenario, ensemble, &terms);
        double gap = std::abs(direct - route);

        report.min_value = std::min(report.min_value, direct);
        report.max_value = std::max(report.max_value, direct);
        report.max_route_gap = std::max(report.max_route_gap, gap);
        for (double term : terms) {
            report.min_term = std::min(report.min_term, term);
        }
        bool failed = false;
        if (direct < -options.tol) {
            ++report.negative_values;
            failed = true;
        }
        if (gap > options.tol) {
            ++report.route_mismatches;
            failed = true;
        }
        if (failed && report.first_failure < 0) {
            report.first_failure = trial;
        }
    }
    return report;
}

}  // namespace extwit::mdiew
