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

#ifndef EXTWIT_LINALG_H
#define EXTWIT_LINALG_H

#include <initializer_list>
#include <optional>
#include <vector>

#include "extwit/hermitian_operator.h"

namespace extwit {

/// Default PSD tolerance for unit-normalized operators.
inline constexpr double kPsdTol = 1e-9;

/// Kronecker product; the result layout concatenates the operand layouts with
/// the cut between them.
HermitianOperator kron(const HermitianOperator &a, const HermitianOperator &b);
/// Left-to-right Kronecker product of two or more operators.
HermitianOperator kron(std::initializer_list<HermitianOperator> factors);

Matrix kron(const Matrix &a, const Matrix &b);
Vector kron(const Vector &a, const Vector &b);

/// Transposes the listed tensor factors. Involution, exact to the bit.
HermitianOperator partial_transpose(const HermitianOperator &m, const std::vector<int> &systems);
/// Transposes every subsystem right of the cut.
HermitianOperator partial_transpose(const HermitianOperator &m);

/// Traces out every subsystem not in `keep`. The kept subsystems stay in their
/// original order; the cut counts kept subsystems that were left of the old cut.
HermitianOperator partial_trace(const HermitianOperator &m, const std::vector<int> &keep);

/// Reorders tensor factors: subsystem k of the result is subsystem perm[k] of
/// the input. The cut index is kept unless `new_cut` is given.
HermitianOperator permute_systems(const HermitianOperator &m,
                                  const std::vector<int> &perm,
                                  std::optional<int> new_cut = std::nullopt);

/// Permutation of flat basis indices matching permute_systems: entry i of the
/// result is the input index that moves to position i.
std::vector<int> permuted_index_map(const std::vector<int> &dims, const std::vector<int> &perm);

struct Spectrum {
    /// Descending.
    Eigen::VectorXd values;
    /// Orthonormal columns, column k pairs with values[k].
    Matrix vectors;
};

Spectrum eigh(const HermitianOperator &m);
Spectrum eigh(const Matrix &hermitian);

double min_eigenvalue(const HermitianOperator &m);
bool is_psd(const HermitianOperator &m, double tol = kPsdTol);

/// Tr(A B) for square matrices of equal size, without forming the product.
Complex trace_product(const Matrix &a, const Matrix &b);

/// f(M) through the spectral decomposition.
template <typename F>
Matrix spectral_map(const Matrix &hermitian, F f) {
    Spectrum s = eigh(hermitian);
    Eigen::VectorXcd mapped(s.values.size());
    for (Eigen::Index k = 0; k < s.values.size(); ++k) {
        mapped(k) = f(s.values(k));
    }
    return s.vectors * mapped.asDiagonal() * s.vectors.adjoint();
}

/// Numerical rank of the columns of `m`: number of singular values above
/// rel_threshold * sigma_max.
int numerical_rank(const Matrix &m, double rel_threshold);

}  // namespace extwit

#endif
