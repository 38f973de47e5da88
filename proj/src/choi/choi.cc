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

#include "extwit/choi.h"

#include <cmath>

#include "extwit/errors.h"
#include "extwit/linalg.h"

namespace extwit::choi {
namespace {

const SystemLayout kAbbLayout({3, 3, 2}, 1);

Matrix matrix_power(const Matrix &m, int k) {
    Matrix out = Matrix::Identity(m.rows(), m.cols());
    for (int i = 0; i < k; ++i) {
        out = out * m;
    }
    return out;
}

Matrix basis_op(int d, int i, int j) {
    Matrix e = Matrix::Zero(d, d);
    e(i, j) = 1.0;
    return e;
}

}  // namespace

Witness choi_witness() {
    Matrix w = Matrix::Zero(9, 9);
    const double diagonal[9] = {1, 0, 1, 1, 1, 0, 0, 1, 1};
    for (int i = 0; i < 9; ++i) {
        w(i, i) = diagonal[i];
    }
    for (int p : {0, 4, 8}) {
        for (int q : {0, 4, 8}) {
            if (p != q) {
                w(p, q) = -1.0;
            }
        }
    }
    return Witness{HermitianOperator(SystemLayout::bipartite(3, 3), std::move(w)), "choi"};
}

Matrix shift_operator(int d) {
    if (d < 2) {
        throw InputError("shift operator needs d >= 2");
    }
    Matrix s = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        s((k + 1) % d, k) = 1.0;
    }
    return s;
}

Vector maximally_entangled_vector(int d) {
    Vector v = Vector::Zero(d * d);
    for (int k = 0; k < d; ++k) {
        v(k * d + k) = 1.0 / std::sqrt(static_cast<double>(d));
    }
    return v;
}

HermitianOperator ppt_entangled_state(double alpha) {
    if (alpha < 0.0 || alpha > 5.0) {
        throw InputError("alpha must lie in [0, 5]");
    }
    Vector plus = maximally_entangled_vector(3);
    Matrix rho = (2.0 / 7.0) * plus * plus.adjoint();
    for (int i = 0; i < 3; ++i) {
        int forward = i * 3 + (i + 1) % 3;   // |01>, |12>, |20>
        int backward = ((i + 1) % 3) * 3 + i;  // |10>, |21>, |02>
        rho(forward, forward) += alpha / 21.0;
        rho(backward, backward) += (5.0 - alpha) / 21.0;
    }
    return HermitianOperator(SystemLayout::bipartite(3, 3), std::move(rho));
}

AbParams::AbParams(Matrix a, Matrix b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.rows() != 2 || a_.cols() != 2 || b_.rows() != 2 || b_.cols() != 2) {
        throw InputError("a and b must be 2x2");
    }
    HermitianOperator ha(SystemLayout::single(2), a_);
    HermitianOperator hb(SystemLayout::single(2), b_);
    if (!is_psd(ha, 1e-10)) {
        throw InputError("block a is not positive semidefinite");
    }
    if (!is_psd(hb, 1e-10)) {
        throw InputError("block b is not positive semidefinite");
    }
    a_ = ha.matrix();
    b_ = hb.matrix();
    if (a_.trace().real() + b_.trace().real() <= 0.0) {
        throw InputError("Tr a + Tr b must be positive");
    }
}

AbParams AbParams::exhibit_default() {
    Matrix a = Matrix::Ones(2, 2);
    Matrix b = Matrix::Identity(2, 2);
    return AbParams(a, b);
}

HermitianOperator exhibit_cap() {
    return HermitianOperator(SystemLayout::single(2), Matrix::Ones(2, 2));
}

Matrix rho_abb_candidate(const Matrix &a, const Matrix &b) {
    Matrix x = kron(basis_op(3, 0, 0), a) + kron(basis_op(3, 2, 2), b);
    Matrix s = shift_operator(3);
    Matrix id2 = Matrix::Identity(2, 2);
    Matrix rho = Matrix::Zero(18, 18);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Matrix block;
            if (i == j) {
                Matrix u = kron(matrix_power(s, i), id2);
                block = u * x * u.adjoint();
            } else {
                block = kron(basis_op(3, i, j), a);
            }
            rho.block(i * 6, j * 6, 6, 6) = block;
        }
    }
    return rho;
}

HermitianOperator rho_abb(const AbParams &params) {
    Matrix rho = rho_abb_candidate(params.a(), params.b());
    rho /= rho.trace().real();
    HermitianOperator out(kAbbLayout, std::move(rho));
    if (!is_psd(out, 1e-10)) {
        throw NumericalError("assembled state is not positive semidefinite");
    }
    return out;
}

double extended_closed_form(const AbParams &params, const HermitianOperator &cap_right) {
    if (cap_right.dim() != 2) {
        throw InputError("cap on B' must be 2x2");
    }
    double total = (params.a() + params.b()).trace().real();
    return 3.0 / total * (cap_right.matrix() * (params.b() - params.a())).trace().real();
}

double reduced_closed_form(const AbParams &params) {
    double total = (params.a() + params.b()).trace().real();
    return 3.0 / total * (params.b() - params.a()).trace().real();
}

ExtensionValues extension_values(const AbParams &params, const HermitianOperator &cap_right) {
    HermitianOperator rho = rho_abb(params);
    Witness w = choi_witness();
    ExtensionSpec spec(HermitianOperator::identity(SystemLayout::single(1)), cap_right);
    HermitianOperator w_ext = extend_operator(w.op, spec);

    ExtensionValues out;
    out.ext_value = expectation(w_ext, rho);
    out.reduced_value = expectation(w.op, partial_trace(rho, {0, 1}));
    out.ext_closed_form = extended_closed_form(params, cap_right);
    out.reduced_closed_form = reduced_closed_form(params);
    return out;
}

double fit_kappa() {
    ExtensionValues v = extension_values(AbParams::exhibit_default(), exhibit_cap());
    return v.ext_value / v.ext_closed_form;
}

Exhibit nontrivial_extension_exhibit(const AbParams &params, const HermitianOperator &cap_right) {
    if (params.a().trace().real() <= 0.0) {
        throw PreconditionError("exhibit needs Tr a > 0 (a11 = a22 = 0 degenerates the marginal)");
    }
    ExtensionSpec spec(HermitianOperator::identity(SystemLayout::single(1)), cap_right);

    Exhibit out;
    out.extended_witness = extend_witness(choi_witness(), spec);
    out.rho_abb = rho_abb(params);
    out.rho_ab = partial_trace(out.rho_abb, {0, 1});
    out.values = extension_values(params, cap_right);
    out.kappa = fit_kappa();
    out.rho_abb_min_eigenvalue = min_eigenvalue(out.rho_abb);
    out.rho_abb_psd = out.rho_abb_min_eigenvalue >= -kPsdTol;
    out.detected_extended = out.values.ext_value < -1e-6 * out.kappa;
    out.undetected_reduced = std::abs(out.values.reduced_value) <= 1e-10;
    out.accepted = out.rho_abb_psd && out.detected_extended && out.undetected_reduced;
    if (out.accepted) {
        out.message = "extended witness detects the state; its B' marginal is not detected";
    } else if (!out.detected_extended) {
        out.message =
            "extended value is not negative: detection needs Tr(cap (b - a)) < 0, "
            "i.e. b12 < a12 for real symmetric blocks with the all-ones cap";
    } else if (!out.undetected_reduced) {
        out.message = "marginal is detected by the base witness (Tr(b - a) != 0)";
    } else {
        out.message = "assembled state is not positive semidefinite";
    }
    return out;
}

}  // namespace extwit::choi
