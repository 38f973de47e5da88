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

#ifndef EXTWIT_RANDOM_H
#define EXTWIT_RANDOM_H

#include <cstdint>
#include <random>

#include "extwit/hermitian_operator.h"
#include "extwit/product_state.h"

namespace extwit {

/// SplitMix64 finalizer applied to (master, stream). Child seeds depend only on
/// the pair, so work split across restarts or trials reproduces regardless of
/// the order in which it runs.
uint64_t derive_seed(uint64_t master, uint64_t stream);

class Rng {
   public:
    explicit Rng(uint64_t seed) : seed_(seed), engine_(seed) {}

    uint64_t seed() const { return seed_; }
    /// Independent generator for sub-stream `stream`.
    Rng split(uint64_t stream) const { return Rng(derive_seed(seed_, stream)); }

    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
    /// Standard complex Gaussian, E|z|^2 = 1.
    Complex complex_normal();
    int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

    std::mt19937_64 &engine() { return engine_; }

   private:
    uint64_t seed_;
    std::mt19937_64 engine_;
};

/// rows x cols matrix of i.i.d. standard complex Gaussians.
Matrix ginibre(int rows, int cols, Rng &rng);
Vector random_unit_vector(int dim, Rng &rng);
/// Haar-random unitary (QR of a Ginibre matrix with the phase fix).
Matrix random_unitary(int dim, uint64_t seed);

/// Hilbert-Schmidt random state G G^dagger / Tr.
HermitianOperator random_density(const SystemLayout &layout, uint64_t seed);
HermitianOperator random_density(int dim, uint64_t seed);

/// (G + G^dagger) / 2 with Gaussian G.
HermitianOperator random_hermitian(const SystemLayout &layout, uint64_t seed);

ProductVector random_product_vector(const SystemLayout &layout, uint64_t seed);

/// Dirichlet(1,...,1) weights over k product states whose local factors are
/// Hilbert-Schmidt random states.
SeparableEnsemble random_separable(const SystemLayout &layout, int k, uint64_t seed);

/// E = (S+T)^(-1/2) S (S+T)^(-1/2) for Wishart S, T; 0 <= E <= I.
HermitianOperator random_povm_first_element(const SystemLayout &layout, uint64_t seed);
HermitianOperator random_povm_first_element(int dim, uint64_t seed);

}  // namespace extwit

#endif
