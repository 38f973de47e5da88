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

#ifndef EXTWIT_MDIEW_H
#define EXTWIT_MDIEW_H

#include <cstdint>
#include <vector>

#include "extwit/hermitian_operator.h"
#include "extwit/product_state.h"
#include "extwit/witness.h"

namespace extwit::mdiew {

/// d^2 linearly independent unit-trace PSD states on C^d.
struct StateBasis {
    int dim = 0;
    std::vector<HermitianOperator> states;
};

/// |m><m| for each m, then for each m < n the projectors onto
/// (|m> + |n>)/sqrt 2 and (|m> + i|n>)/sqrt 2. Throws InputError for d < 2.
StateBasis tomographic_basis(int d);

/// Throws InputError if the members are not d^2 unit-trace PSD operators on
/// C^d, or NumericalError naming the members that are linearly dependent on
/// earlier ones (Gram rank threshold 1e-8).
void validate_basis(const StateBasis &basis);

/// Coefficients of W = sum_{s,t} beta(s,t) sigma_s ⊗ sigma_t. The transposes
/// of the prepared inputs are applied at probability time, which cancels
/// against the maximally entangled projection and gives
/// mdiew_value = Tr(W rho) / (d_A d_B) for ideal measurements.
struct Decomposition {
    Eigen::MatrixXd beta;
    /// ||sum beta sigma ⊗ sigma - W||_F.
    double residual = 0.0;
    /// Largest |Im beta| before discarding the imaginary part.
    double max_imag = 0.0;
};

/// Least-squares solve over the product basis. Throws NumericalError if the
/// residual exceeds 1e-9 or Im beta exceeds 1e-10.
Decomposition decompose_witness(const HermitianOperator &w,
                                const StateBasis &left,
                                const StateBasis &right);

HermitianOperator reconstruct(const Eigen::MatrixXd &beta, const StateBasis &left, const StateBasis &right);

/// |Psi+><Psi+| on [d | d].
HermitianOperator maximally_entangled_projector(int d);

/// True iff 0 <= E <= I within tol.
bool is_povm_element(const HermitianOperator &e, double tol = 1e-10);

/// Tr((sigma_s^T ⊗ rho ⊗ sigma_t^T)(E_left ⊗ E_right)) with systems in A' A B B'
/// order. rho lives on [A | B] (any dimensions), sigma_s on A', sigma_t on B',
/// E_left on [A' | A], E_right on [B | B']. Throws InputError if either POVM
/// element violates 0 <= E <= I at 1e-10.
double joint_probability(const HermitianOperator &rho,
                         const HermitianOperator &sigma_s,
                         const HermitianOperator &sigma_t,
                         const HermitianOperator &povm_left,
                         const HermitianOperator &povm_right);

struct MdiewScenario {
    Witness witness;
    StateBasis basis_left;
    StateBasis basis_right;
    Eigen::MatrixXd beta;
    HermitianOperator povm_left;
    HermitianOperator povm_right;

    /// POVM bounds at 1e-10 and beta reconstruction residual <= 1e-9.
    void validate() const;
};

/// Tomographic bases and beta for `w`, with the given first POVM elements.
MdiewScenario make_scenario(const Witness &w, HermitianOperator povm_left, HermitianOperator povm_right);
/// Same with ideal maximally entangled projections on both sides.
MdiewScenario ideal_scenario(const Witness &w);

/// sum_{s,t} beta(s,t) P(0,0|s,t).
double mdiew_value(const MdiewScenario &scenario, const HermitianOperator &rho);

/// The same quantity for a separable rho = sum_i p_i rho_A^i ⊗ rho_B^i written
/// as sum_i p_i Tr(W_i (E_left ⊗ E_right)) with extended witnesses
/// W_i = rho_A^i ⊗ W^T ⊗ rho_B^i permuted into A' A B B' order. Fills
/// `terms` with the per-member traces when given.
double extended_witness_route(const MdiewScenario &scenario,
                              const SeparableEnsemble &ensemble,
                              std::vector<double> *terms = nullptr);

enum class AuditMode {
    /// Fresh random POVM first elements on both sides.
    kArbitraryPovm,
    /// Ideal projectors conjugated by Haar-random unitaries on each party.
    kMisaligned,
    /// The separable state is embedded into larger local spaces by random
    /// isometries and measured with random POVMs on those spaces.
    kWrongDegreesOfFreedom,
};

const char *to_string(AuditMode mode);

struct AuditOptions {
    int trials = 1000;
    uint64_t seed = 42;
    AuditMode mode = AuditMode::kArbitraryPovm;
    int max_members = 4;
    int extra_dims = 1;
    double tol = 1e-9;
};

struct AuditReport {
    int trials = 0;
    double min_value = 0.0;
    double max_value = 0.0;
    double min_term = 0.0;
    double max_route_gap = 0.0;
    int negative_values = 0;
    int route_mismatches = 0;
    /// First failing trial, or -1.
    int first_failure = -1;

    bool passed() const { return negative_values == 0 && route_mismatches == 0; }
};

/// Samples separable ensembles and measurements and checks that the witness
/// value is never below -tol and that both computation routes agree to tol.
/// Trial t draws everything from derive_seed(seed, t).
AuditReport separable_nonnegativity_audit(const MdiewScenario &scenario, const AuditOptions &options);

}  // namespace extwit::mdiew

#endif
