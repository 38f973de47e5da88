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

#include "extwit/random.h"

#include <cmath>

#include "extwit/errors.h"
#include "extwit/linalg.h"

namespace extwit {
namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void require_positive(int value, const char *what) {
    if (value < 1) {
        throw InputError(std::string(what) + " must be >= 1, got " + std::to_string(value));
    }
}

Matrix wishart(int dim, Rng &rng) {
    Matrix g = ginibre(dim, dim, rng);
    return g * g.adjoint();
}

}  // namespace

uint64_t derive_seed(uint64_t master, uint64_t stream) {
    return splitmix64(master ^ splitmix64(stream));
}

Complex Rng::complex_normal() {
    double re = normal();
    double im = normal();
    return Complex(re, im) * M_SQRT1_2;
}

Matrix ginibre(int rows, int cols, Rng &rng) {
    Matrix g(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            g(i, j) = rng.complex_normal();
        }
    }
    return g;
}

Vector random_unit_vector(int dim, Rng &rng) {
    require_positive(dim, "dimension");
    Vector v(dim);
    for (int i = 0; i < dim; ++i) {
        v(i) = rng.complex_normal();
    }
    return v / v.norm();
}

Matrix random_unitary(int dim, uint64_t seed) {
    require_positive(dim, "dimension");
    Rng rng(seed);
    Matrix g = ginibre(dim, dim, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < dim; ++k) {
        Complex d = r(k, k);
        double a = std::abs(d);
        if (a > 0) {
            q.col(k) *= d / a;
        }
    }
    return q;
}

HermitianOperator random_density(const SystemLayout &layout, uint64_t seed) {
    Rng rng(seed);
    Matrix w = wishart(layout.total_dim(), rng);
    w /= w.trace().real();
    return HermitianOperator(layout, std::move(w));
}

HermitianOperator random_density(int dim, uint64_t seed) {
    require_positive(dim, "dimension");
    return random_density(SystemLayout::single(dim), seed);
}

HermitianOperator random_hermitian(const SystemLayout &layout, uint64_t seed) {
    Rng rng(seed);
    int n = layout.total_dim();
    Matrix g = ginibre(n, n, rng);
    return HermitianOperator(layout, (g + g.adjoint()) * 0.5);
}

ProductVector random_product_vector(const SystemLayout &layout, uint64_t seed) {
    Rng rng(seed);
    std::vector<Vector> factors;
    for (int d : layout.dims()) {
        factors.push_back(random_unit_vector(d, rng));
    }
    return ProductVector(layout, std::move(factors));
}

SeparableEnsemble random_separable(const SystemLayout &layout, int k, uint64_t seed) {
    require_positive(k, "ensemble size");
    Rng rng(seed);
    std::vector<double> weights(k);
    double sum = 0.0;
    for (int i = 0; i < k; ++i) {
        // Dirichlet(1,...,1) from normalized unit exponentials.
        weights[i] = std::exponential_distribution<double>(1.0)(rng.engine());
        sum += weights[i];
    }
    for (double &w : weights) {
        w /= sum;
    }
    std::vector<std::vector<HermitianOperator>> members;
    for (int i = 0; i < k; ++i) {
        std::vector<HermitianOperator> member;
        for (size_t s = 0; s < layout.num_systems(); ++s) {
            uint64_t local_seed = derive_seed(seed, static_cast<uint64_t>(i) * 64 + s + 1);
            member.push_back(random_density(layout.dim(s), local_seed));
        }
        members.push_back(std::move(member));
    }
    return SeparableEnsemble(layout, std::move(weights), std::move(members));
}

HermitianOperator random_povm_first_element(const SystemLayout &layout, uint64_t seed) {
    Rng rng(seed);
    int n = layout.total_dim();
    Matrix s = wishart(n, rng);
    Matrix t = wishart(n, rng);
    Matrix inv_sqrt = spectral_map(s + t, [](double x) { return 1.0 / std::sqrt(x); });
    Matrix e = inv_sqrt * s * inv_sqrt;
    return HermitianOperator(layout, (e + e.adjoint()) * 0.5);
}

HermitianOperator random_povm_first_element(int dim, uint64_t seed) {
    require_positive(dim, "dimension");
    return random_povm_first_element(SystemLayout::single(dim), seed);
}

}  // namespace extwit
