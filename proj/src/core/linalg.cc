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

#include "extwit/linalg.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "extwit/errors.h"

namespace extwit {
namespace {

// Row-major digits of every flat index: digits[i * n + k] is the index of
// subsystem k in basis state i.
std::vector<int> basis_digits(const std::vector<int> &dims) {
    int n = static_cast<int>(dims.size());
    int total = 1;
    for (int d : dims) {
        total *= d;
    }
    std::vector<int> digits(static_cast<size_t>(total) * n);
    for (int i = 0; i < total; ++i) {
        int rest = i;
        for (int k = n - 1; k >= 0; --k) {
            digits[static_cast<size_t>(i) * n + k] = rest % dims[k];
            rest /= dims[k];
        }
    }
    return digits;
}

std::vector<int> strides_of(const std::vector<int> &dims) {
    std::vector<int> strides(dims.size());
    int s = 1;
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
        strides[k] = s;
        s *= dims[k];
    }
    return strides;
}

void check_system_indices(const SystemLayout &layout, const std::vector<int> &systems) {
    std::vector<bool> seen(layout.num_systems(), false);
    for (int s : systems) {
        if (s < 0 || s >= static_cast<int>(layout.num_systems())) {
            throw LayoutError("subsystem index " + std::to_string(s) + " invalid for layout " +
                              layout.str());
        }
        if (seen[s]) {
            throw LayoutError("subsystem index " + std::to_string(s) + " repeated");
        }
        seen[s] = true;
    }
}

}  // namespace

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Vector kron(const Vector &a, const Vector &b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

HermitianOperator kron(const HermitianOperator &a, const HermitianOperator &b) {
    return HermitianOperator(a.layout().concat(b.layout()), kron(a.matrix(), b.matrix()));
}

HermitianOperator kron(std::initializer_list<HermitianOperator> factors) {
    if (factors.size() == 0) {
        throw LayoutError("kron of an empty list");
    }
    auto it = factors.begin();
    HermitianOperator out = *it;
    for (++it; it != factors.end(); ++it) {
        out = kron(out, *it);
    }
    return out;
}

HermitianOperator partial_transpose(const HermitianOperator &m, const std::vector<int> &systems) {
    const SystemLayout &layout = m.layout();
    check_system_indices(layout, systems);
    const std::vector<int> &dims = layout.dims();
    int n = static_cast<int>(dims.size());
    int total = layout.total_dim();
    std::vector<int> digits = basis_digits(dims);
    std::vector<int> strides = strides_of(dims);

    Matrix out(total, total);
    for (int i = 0; i < total; ++i) {
        const int *di = &digits[static_cast<size_t>(i) * n];
        for (int j = 0; j < total; ++j) {
            const int *dj = &digits[static_cast<size_t>(j) * n];
            int ti = i;
            int tj = j;
            for (int s : systems) {
                int delta = (dj[s] - di[s]) * strides[s];
                ti += delta;
                tj -= delta;
            }
            out(ti, tj) = m(i, j);
        }
    }
    return HermitianOperator(layout, std::move(out));
}

HermitianOperator partial_transpose(const HermitianOperator &m) {
    m.layout().require_bipartite();
    return partial_transpose(m, m.layout().right_systems());
}

HermitianOperator partial_trace(const HermitianOperator &m, const std::vector<int> &keep) {
    const SystemLayout &layout = m.layout();
    if (keep.empty()) {
        throw LayoutError("partial_trace needs a nonempty keep set");
    }
    check_system_indices(layout, keep);
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());

    const std::vector<int> &dims = layout.dims();
    int n = static_cast<int>(dims.size());
    std::vector<int> kept_dims;
    int new_cut = 0;
    std::vector<bool> is_kept(n, false);
    for (int s : kept) {
        kept_dims.push_back(dims[s]);
        is_kept[s] = true;
        if (s < layout.cut()) {
            ++new_cut;
        }
    }
    SystemLayout out_layout(kept_dims, new_cut);
    std::vector<int> out_strides = strides_of(kept_dims);

    int total = layout.total_dim();
    std::vector<int> digits = basis_digits(dims);
    // Reduced index of every basis state and a key for the traced-out part.
    std::vector<int> reduced(total);
    std::vector<int> env(total);
    for (int i = 0; i < total; ++i) {
        int r = 0;
        int e = 0;
        int kk = 0;
        for (int k = 0; k < n; ++k) {
            int digit = digits[static_cast<size_t>(i) * n + k];
            if (is_kept[k]) {
                r += digit * out_strides[kk++];
            } else {
                e = e * dims[k] + digit;
            }
        }
        reduced[i] = r;
        env[i] = e;
    }

    int out_dim = out_layout.total_dim();
    Matrix out = Matrix::Zero(out_dim, out_dim);
    for (int i = 0; i < total; ++i) {
        for (int j = 0; j < total; ++j) {
            if (env[i] == env[j]) {
                out(reduced[i], reduced[j]) += m(i, j);
            }
        }
    }
    return HermitianOperator(std::move(out_layout), std::move(out));
}

std::vector<int> permuted_index_map(const std::vector<int> &dims, const std::vector<int> &perm) {
    int n = static_cast<int>(dims.size());
    if (static_cast<int>(perm.size()) != n) {
        throw LayoutError("permutation length " + std::to_string(perm.size()) +
                          " does not match " + std::to_string(n) + " subsystems");
    }
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p]) {
            throw LayoutError("permutation is not a bijection on subsystem indices");
        }
        seen[p] = true;
    }
    std::vector<int> new_dims(n);
    for (int k = 0; k < n; ++k) {
        new_dims[k] = dims[perm[k]];
    }
    std::vector<int> old_strides = strides_of(dims);
    std::vector<int> new_digits = basis_digits(new_dims);
    int total = static_cast<int>(new_digits.size()) / n;
    std::vector<int> source(total);
    for (int i = 0; i < total; ++i) {
        int src = 0;
        for (int k = 0; k < n; ++k) {
            src += new_digits[static_cast<size_t>(i) * n + k] * old_strides[perm[k]];
        }
        source[i] = src;
    }
    return source;
}

HermitianOperator permute_systems(const HermitianOperator &m,
                                  const std::vector<int> &perm,
                                  std::optional<int> new_cut) {
    const SystemLayout &layout = m.layout();
    std::vector<int> source = permuted_index_map(layout.dims(), perm);
    std::vector<int> new_dims(perm.size());
    for (size_t k = 0; k < perm.size(); ++k) {
        new_dims[k] = layout.dims()[perm[k]];
    }
    int total = layout.total_dim();
    Matrix out(total, total);
    for (int i = 0; i < total; ++i) {
        for (int j = 0; j < total; ++j) {
            out(i, j) = m(source[i], source[j]);
        }
    }
    return HermitianOperator(SystemLayout(std::move(new_dims), new_cut.value_or(layout.cut())),
                             std::move(out));
}

Spectrum eigh(const Matrix &hermitian) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian);
    if (solver.info() != Eigen::Success) {
        std::ostringstream msg;
        msg << "eigensolver did not converge on a " << hermitian.rows() << "x" << hermitian.cols()
            << " matrix (Frobenius norm " << hermitian.norm() << ", Hermiticity defect "
            << hermiticity_defect(hermitian) << ")";
        throw NumericalError(msg.str());
    }
    // Eigen returns ascending order.
    Spectrum s;
    s.values = solver.eigenvalues().reverse();
    s.vectors = solver.eigenvectors().rowwise().reverse();
    return s;
}

Spectrum eigh(const HermitianOperator &m) { return eigh(m.matrix()); }

double min_eigenvalue(const HermitianOperator &m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.matrix(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigensolver did not converge on a " + std::to_string(m.dim()) +
                             "-dimensional operator");
    }
    return solver.eigenvalues()(0);
}

bool is_psd(const HermitianOperator &m, double tol) {
    if (tol < 0) {
        throw InputError("is_psd tolerance must be nonnegative");
    }
    return min_eigenvalue(m) >= -tol;
}

Complex trace_product(const Matrix &a, const Matrix &b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) {
        throw LayoutError("trace_product shape mismatch");
    }
    return a.cwiseProduct(b.transpose()).sum();
}

int numerical_rank(const Matrix &m, double rel_threshold) {
    if (m.size() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    const Eigen::VectorXd &sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) {
        return 0;
    }
    double cutoff = rel_threshold * sv(0);
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv(k) > cutoff) {
            ++rank;
        }
    }
    return rank;
}

}  // namespace extwit
