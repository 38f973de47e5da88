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

#ifndef EXTWIT_HERMITIAN_OPERATOR_H
#define EXTWIT_HERMITIAN_OPERATOR_H

#include <complex>

#include <Eigen/Dense>

#include "extwit/system_layout.h"

namespace extwit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Deviation from Hermiticity tolerated when constructing from raw data.
inline constexpr double kHermitianInputTol = 1e-9;

/// Dense complex Hermitian matrix together with its subsystem layout.
///
/// Construction checks max |M_ij - conj(M_ji)| against `tol` (scaled by the
/// largest entry magnitude when that exceeds 1) and then replaces the matrix by
/// (M + M^dagger)/2, so every stored operator is exactly Hermitian. Exactly
/// Hermitian input is stored bit-for-bit.
class HermitianOperator {
   public:
    /// 1x1 zero on the trivial layout.
    HermitianOperator();
    HermitianOperator(SystemLayout layout, Matrix entries, double tol = kHermitianInputTol);

    static HermitianOperator identity(const SystemLayout &layout);
    static HermitianOperator zero(const SystemLayout &layout);
    /// |v><v| (not normalized).
    static HermitianOperator projector(const SystemLayout &layout, const Vector &v);

    const SystemLayout &layout() const { return layout_; }
    const Matrix &matrix() const { return m_; }
    int dim() const { return static_cast<int>(m_.rows()); }
    Complex operator()(int row, int col) const { return m_(row, col); }

    /// Same matrix with a relabelled layout of equal total dimension.
    HermitianOperator with_layout(SystemLayout layout) const;

    /// Full transpose (equivalently complex conjugate for Hermitian matrices).
    HermitianOperator transpose() const;

    double trace() const;
    double frobenius_norm() const { return m_.norm(); }

    HermitianOperator operator+(const HermitianOperator &other) const;
    HermitianOperator operator-(const HermitianOperator &other) const;
    HermitianOperator operator*(double scale) const;

   private:
    SystemLayout layout_;
    Matrix m_;
};

/// Largest |M_ij - conj(M_ji)|.
double hermiticity_defect(const Matrix &m);

}  // namespace extwit

#endif
