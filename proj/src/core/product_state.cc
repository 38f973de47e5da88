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

#include "extwit/product_state.h"

#include <cmath>
#include <numeric>

#include "extwit/errors.h"
#include "extwit/linalg.h"

namespace extwit {
namespace {

void check_factor_shapes(const SystemLayout &layout, const std::vector<Vector> &factors) {
    if (factors.size() != layout.num_systems()) {
        throw LayoutError("product vector has " + std::to_string(factors.size()) +
                          " factors for layout " + layout.str());
    }
    for (size_t k = 0; k < factors.size(); ++k) {
        if (factors[k].size() != layout.dim(k)) {
            throw LayoutError("factor " + std::to_string(k) + " has size " +
                              std::to_string(factors[k].size()) + ", layout says " +
                              std::to_string(layout.dim(k)));
        }
    }
}

}  // namespace

ProductVector::ProductVector() : layout_(), factors_{Vector::Ones(1)} {}

ProductVector::ProductVector(SystemLayout layout, std::vector<Vector> factors)
    : layout_(std::move(layout)), factors_(std::move(factors)) {
    check_factor_shapes(layout_, factors_);
    for (size_t k = 0; k < factors_.size(); ++k) {
        if (std::abs(factors_[k].norm() - 1.0) > 1e-12) {
            throw InputError("product vector factor " + std::to_string(k) + " is not a unit vector");
        }
    }
}

ProductVector ProductVector::normalized(SystemLayout layout, std::vector<Vector> factors) {
    check_factor_shapes(layout, factors);
    for (Vector &f : factors) {
        double n = f.norm();
        if (n == 0.0) {
            throw InputError("cannot normalize a zero factor");
        }
        f /= n;
    }
    return ProductVector(std::move(layout), std::move(factors));
}

Vector ProductVector::full() const {
    Vector out = factors_.front();
    for (size_t k = 1; k < factors_.size(); ++k) {
        out = kron(out, factors_[k]);
    }
    return out;
}

HermitianOperator ProductVector::density() const {
    return HermitianOperator::projector(layout_, full());
}

SeparableEnsemble::SeparableEnsemble(SystemLayout layout,
                                     std::vector<double> weights,
                                     std::vector<std::vector<HermitianOperator>> members)
    : layout_(std::move(layout)), weights_(std::move(weights)), members_(std::move(members)) {
    if (weights_.empty() || weights_.size() != members_.size()) {
        throw InputError("ensemble needs one weight per member and at least one member");
    }
    double sum = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0)) {
            throw InputError("ensemble weights must be nonnegative");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw InputError("ensemble weights sum to " + std::to_string(sum) + ", not 1");
    }
    for (const auto &member : members_) {
        if (member.size() != layout_.num_systems()) {
            throw LayoutError("ensemble member does not match layout " + layout_.str());
        }
        for (size_t k = 0; k < member.size(); ++k) {
            if (member[k].dim() != layout_.dim(k)) {
                throw LayoutError("ensemble member factor " + std::to_string(k) +
                                  " has the wrong dimension");
            }
        }
    }
}

HermitianOperator SeparableEnsemble::member_density(size_t i) const {
    const auto &member = members_.at(i);
    Matrix m = member.front().matrix();
    for (size_t k = 1; k < member.size(); ++k) {
        m = kron(m, member[k].matrix());
    }
    return HermitianOperator(layout_, std::move(m));
}

HermitianOperator SeparableEnsemble::density() const {
    int n = layout_.total_dim();
    Matrix sum = Matrix::Zero(n, n);
    for (size_t i = 0; i < size(); ++i) {
        sum += weights_[i] * member_density(i).matrix();
    }
    return HermitianOperator(layout_, std::move(sum));
}

}  // namespace extwit
