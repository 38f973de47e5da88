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

#include "extwit/hermitian_operator.h"

#include <algorithm>
#include <sstream>

#include "extwit/errors.h"

namespace extwit {

double hermiticity_defect(const Matrix &m) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = i; j < m.cols(); ++j) {
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return worst;
}

HermitianOperator::HermitianOperator() : layout_(), m_(Matrix::Zero(1, 1)) {}

HermitianOperator::HermitianOperator(SystemLayout layout, Matrix entries, double tol)
    : layout_(std::move(layout)), m_(std::move(entries)) {
    if (m_.rows() != m_.cols()) {
        throw InputError("operator matrix must be square");
    }
    if (m_.rows() != layout_.total_dim()) {
        std::ostringstream msg;
        msg << "matrix side " << m_.rows() << " does not match layout " << layout_.str()
            << " (total " << layout_.total_dim() << ")";
        throw LayoutError(msg.str());
    }
    if (!m_.allFinite()) {
        throw InputError("operator has non-finite entries");
    }
    double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
    double defect = hermiticity_defect(m_);
    if (defect > tol * scale) {
        std::ostringstream msg;
        msg << "operator is not Hermitian: defect " << defect << " exceeds " << tol * scale;
        throw InputError(msg.str());
    }
    Matrix sym = (m_ + m_.adjoint()) * 0.5;
    m_ = std::move(sym);
}

HermitianOperator HermitianOperator::identity(const SystemLayout &layout) {
    int n = layout.total_dim();
    return HermitianOperator(layout, Matrix::Identity(n, n));
}

HermitianOperator HermitianOperator::zero(const SystemLayout &layout) {
    int n = layout.total_dim();
    return HermitianOperator(layout, Matrix::Zero(n, n));
}

HermitianOperator HermitianOperator::projector(const SystemLayout &layout, const Vector &v) {
    return HermitianOperator(layout, v * v.adjoint());
}

HermitianOperator HermitianOperator::with_layout(SystemLayout layout) const {
    return HermitianOperator(std::move(layout), m_);
}

HermitianOperator HermitianOperator::transpose() const {
    return HermitianOperator(layout_, m_.transpose());
}

double HermitianOperator::trace() const { return m_.trace().real(); }

HermitianOperator HermitianOperator::operator+(const HermitianOperator &other) const {
    if (!(layout_ == other.layout_)) {
        throw LayoutError("cannot add operators with layouts " + layout_.str() + " and " +
                          other.layout_.str());
    }
    return HermitianOperator(layout_, m_ + other.m_);
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator &other) const {
    if (!(layout_ == other.layout_)) {
        throw LayoutError("cannot subtract operators with layouts " + layout_.str() + " and " +
                          other.layout_.str());
    }
    return HermitianOperator(layout_, m_ - other.m_);
}

HermitianOperator HermitianOperator::operator*(double scale) const {
    return HermitianOperator(layout_, m_ * scale);
}

}  // namespace extwit
