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

#include "extwit/witness.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "extwit/errors.h"

namespace extwit {
namespace {

void require_same_dim(int a, int b, const char *what) {
    if (a != b) {
        throw LayoutError(std::string(what) + ": dimension mismatch " + std::to_string(a) +
                          " vs " + std::to_string(b));
    }
}

}  // namespace

Witness swap_witness(int dim) {
    if (dim < 2) {
        throw InputError("swap witness needs dimension >= 2");
    }
    int n = dim * dim;
    Matrix v = Matrix::Zero(n, n);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            v(j * dim + i, i * dim + j) = 1.0;
        }
    }
    return Witness{HermitianOperator(SystemLayout::bipartite(dim, dim), std::move(v)), "swap"};
}

double expectation(const HermitianOperator &w, const HermitianOperator &rho) {
    require_same_dim(w.dim(), rho.dim(), "expectation");
    Complex t = trace_product(w.matrix(), rho.matrix());
    double scale = std::max(1.0, w.frobenius_norm() * rho.frobenius_norm());
    if (std::abs(t.imag()) > 1e-10 * scale) {
        std::ostringstream msg;
        msg << "Tr(W rho) has imaginary part " << t.imag();
        throw NumericalError(msg.str());
    }
    return t.real();
}

double expectation(const Witness &w, const HermitianOperator &rho) { return expectation(w.op, rho); }

double expectation(const HermitianOperator &w, const ProductVector &v) {
    Vector full = v.full();
    require_same_dim(w.dim(), static_cast<int>(full.size()), "expectation");
    return full.dot(w.matrix() * full).real();
}

double expectation(const Witness &w, const ProductVector &v) { return expectation(w.op, v); }

Certification certify_witness(const Witness &w, const CertifyOptions &options) {
    Certification out;
    out.witness = w;
    out.witness.certified = false;

    Spectrum spectrum = eigh(w.op);
    Eigen::Index n = spectrum.values.size();
    out.min_eigenvalue = spectrum.values(n - 1);

    Matrix projector = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        if (spectrum.values(k) < -options.tol) {
            projector += spectrum.vectors.col(k) * spectrum.vectors.col(k).adjoint();
            ++out.negative_rank;
        }
    }
    if (out.negative_rank > 0) {
        projector /= static_cast<double>(out.negative_rank);
        out.detection_state = HermitianOperator(w.op.layout(), std::move(projector));
        out.detection_value = expectation(w.op, *out.detection_state);
    }

    out.see_saw = min_product_expectation(w.op, options.see_saw);
    out.min_product_value = out.see_saw.best_value;
    out.is_witness_numeric = out.min_product_value >= -options.tol && out.negative_rank > 0;
    out.witness.certified = out.is_witness_numeric;
    return out;
}

bool certify_indecomposable(const HermitianOperator &w, const HermitianOperator &rho, double tol) {
    require_same_dim(w.dim(), rho.dim(), "certify_indecomposable");
    HermitianOperator state = rho.with_layout(w.layout());
    if (!is_psd(state, tol)) {
        return false;
    }
    if (!is_psd(partial_transpose(state), tol)) {
        return false;
    }
    return expectation(w, state) < -tol;
}

}  // namespace extwit
