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

#include "extwit/extension.h"

#include "extwit/errors.h"
#include "extwit/linalg.h"

namespace extwit {
namespace {

void check_cap(const HermitianOperator &cap, const char *side) {
    if (!is_psd(cap, 1e-10)) {
        throw InputError(std::string(side) + " cap is not positive semidefinite");
    }
    if (cap.matrix().cwiseAbs().maxCoeff() == 0.0) {
        throw InputError(std::string(side) + " cap is the zero operator");
    }
}

SystemLayout extended_layout(const SystemLayout &inner, const ExtensionSpec &spec) {
    SystemLayout full = spec.cap_left().layout().concat(inner).concat(spec.cap_right().layout());
    int cut = static_cast<int>(spec.cap_left().layout().num_systems()) + inner.cut();
    return full.with_cut(cut);
}

}  // namespace

ExtensionSpec::ExtensionSpec(HermitianOperator cap_left, HermitianOperator cap_right)
    : cap_left_(cap_left.with_layout(SystemLayout::single(cap_left.dim()))),
      cap_right_(cap_right.with_layout(SystemLayout::single(cap_right.dim()))) {
    check_cap(cap_left_, "left");
    check_cap(cap_right_, "right");
}

ExtensionSpec ExtensionSpec::trivial() {
    HermitianOperator one = HermitianOperator::identity(SystemLayout::single(1));
    return ExtensionSpec(one, one);
}

HermitianOperator extend_operator(const HermitianOperator &op, const ExtensionSpec &spec) {
    op.layout().require_bipartite();
    Matrix m = kron(kron(spec.cap_left().matrix(), op.matrix()), spec.cap_right().matrix());
    return HermitianOperator(extended_layout(op.layout(), spec), std::move(m));
}

Witness extend_witness(const Witness &w, const ExtensionSpec &spec) {
    return Witness{extend_operator(w.op, spec), "extended(" + w.provenance + ")"};
}

HermitianOperator extend_state(const HermitianOperator &rho, const ExtensionSpec &spec, bool normalize) {
    if (!is_psd(rho)) {
        throw InputError("extend_state: input state is not positive semidefinite");
    }
    HermitianOperator out = extend_operator(rho, spec);
    if (normalize) {
        double t = out.trace();
        if (t <= 0.0) {
            throw InputError("extend_state: extended operator has zero trace");
        }
        out = out * (1.0 / t);
    }
    return out;
}

ZeroSet extended_zero_set(const ZeroSet &zeros, int left_dim, int right_dim) {
    if (left_dim < 1 || right_dim < 1) {
        throw InputError("extension dimensions must be >= 1");
    }
    ZeroSet out;
    for (const ProductVector &v : zeros.vectors) {
        std::vector<int> dims{left_dim};
        dims.insert(dims.end(), v.layout().dims().begin(), v.layout().dims().end());
        dims.push_back(right_dim);
        SystemLayout layout(dims, v.layout().cut() + 1);
        for (int i = 0; i < left_dim; ++i) {
            for (int j = 0; j < right_dim; ++j) {
                std::vector<Vector> factors;
                factors.push_back(Vector::Unit(left_dim, i));
                factors.insert(factors.end(), v.factors().begin(), v.factors().end());
                factors.push_back(Vector::Unit(right_dim, j));
                out.vectors.emplace_back(layout, std::move(factors));
            }
        }
    }
    out.span_rank = span_rank(out.vectors);
    return out;
}

double gamma_of_extension_residual(const Witness &w, const ExtensionSpec &spec) {
    HermitianOperator lhs = partial_transpose(extend_operator(w.op, spec));
    ExtensionSpec transposed_right(spec.cap_left(), spec.cap_right().transpose());
    HermitianOperator rhs = extend_operator(partial_transpose(w.op), transposed_right);
    return (lhs.matrix() - rhs.matrix()).norm();
}

bool gamma_of_extension_check(const Witness &w, const ExtensionSpec &spec, double tol) {
    return gamma_of_extension_residual(w, spec) <= tol;
}

}  // namespace extwit
