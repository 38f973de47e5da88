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

#ifndef EXTWIT_PRODUCT_STATE_H
#define EXTWIT_PRODUCT_STATE_H

#include <vector>

#include "extwit/hermitian_operator.h"

namespace extwit {

/// Pure product vector: one unit vector per subsystem of its layout.
class ProductVector {
   public:
    /// The trivial vector |0> on a one-dimensional system.
    ProductVector();
    /// Factors must already have unit norm (within 1e-12).
    ProductVector(SystemLayout layout, std::vector<Vector> factors);
    /// Normalizes each factor first; a zero factor is an error.
    static ProductVector normalized(SystemLayout layout, std::vector<Vector> factors);

    const SystemLayout &layout() const { return layout_; }
    const std::vector<Vector> &factors() const { return factors_; }
    const Vector &factor(size_t k) const { return factors_.at(k); }

    /// Kronecker product of the factors.
    Vector full() const;
    HermitianOperator density() const;

   private:
    SystemLayout layout_;
    std::vector<Vector> factors_;
};

/// Convex mixture of product states sum_i p_i rho_i^(1) ⊗ ... ⊗ rho_i^(n).
class SeparableEnsemble {
   public:
    /// members[i][k] is the local state of member i on subsystem k.
    SeparableEnsemble(SystemLayout layout,
                      std::vector<double> weights,
                      std::vector<std::vector<HermitianOperator>> members);

    const SystemLayout &layout() const { return layout_; }
    const std::vector<double> &weights() const { return weights_; }
    const std::vector<std::vector<HermitianOperator>> &members() const { return members_; }
    size_t size() const { return weights_.size(); }

    HermitianOperator member_density(size_t i) const;
    HermitianOperator density() const;

   private:
    SystemLayout layout_;
    std::vector<double> weights_;
    std::vector<std::vector<HermitianOperator>> members_;
};

}  // namespace extwit

#endif
