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

#ifndef EXTWIT_WITNESS_H
#define EXTWIT_WITNESS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extwit/hermitian_operator.h"
#include "extwit/linalg.h"
#include "extwit/product_state.h"

namespace extwit {

/// Candidate entanglement witness on a bipartite layout.
struct Witness {
    HermitianOperator op;
    std::string provenance;
    /// Set only by certify_witness after the numerical checks pass.
    bool certified = false;
};

/// Swap (flip) operator on C^d ⊗ C^d.
Witness swap_witness(int dim = 2);

/// Re Tr(W rho). Throws NumericalError if the imaginary part of the trace
/// exceeds 1e-10 (scaled by the operator norms when those exceed 1).
double expectation(const HermitianOperator &w, const HermitianOperator &rho);
double expectation(const Witness &w, const HermitianOperator &rho);
/// <v|W|v> for the full product vector.
double expectation(const HermitianOperator &w, const ProductVector &v);
double expectation(const Witness &w, const ProductVector &v);

struct SeeSawOptions {
    int restarts = 64;
    int max_iters = 500;
    /// Stop when one full sweep lowers the value by less than this.
    double value_tol = 1e-12;
    uint64_t seed = 42;
};

/// One alternating-minimization descent.
struct SeeSawRun {
    uint64_t seed = 0;
    double initial_value = 0.0;
    double final_value = 0.0;
    int iterations = 0;
    bool converged = false;
    /// Objective after every half-step; non-increasing up to 1e-12 relative.
    std::vector<double> trace;
    bool monotone = true;
    ProductVector vector;
};

struct SeeSawReport {
    double best_value = 0.0;
    int best_restart = 0;
    ProductVector best_vector;
    int restarts = 0;
    std::vector<SeeSawRun> runs;
};

/// Local operator on the left party with entries <i ⊗ psi|W|j ⊗ psi>.
Matrix left_effective_operator(const HermitianOperator &w, const Vector &psi);
/// Local operator on the right party with entries <phi ⊗ i|W|phi ⊗ j>.
Matrix right_effective_operator(const HermitianOperator &w, const Vector &phi);

/// Eigenvector of the smallest eigenvalue. Among numerically degenerate minima
/// the lowest column index of the descending eigensolve wins; the result is
/// re-phased so its largest-magnitude entry is real and positive.
Vector min_eigenvector(const Matrix &hermitian);

/// Descends from `start` (a two-factor vector on the coarse bipartition).
/// Converged means one sweep lowered the value by at most `value_tol` and,
/// when `step_tol` > 0, moved the phase-fixed factors by at most `step_tol`.
SeeSawRun see_saw_descent(const HermitianOperator &w,
                          const ProductVector &start,
                          int max_iters,
                          double value_tol,
                          double step_tol = 0.0);

/// Minimum of <phi ⊗ psi|W|phi ⊗ psi> over product vectors across the cut,
/// estimated by independent seeded restarts. Restart r uses seed
/// derive_seed(options.seed, r); ties go to the lowest restart index.
SeeSawReport min_product_expectation(const HermitianOperator &w, const SeeSawOptions &options = {});

struct CertifyOptions {
    SeeSawOptions see_saw;
    double tol = kPsdTol;
};

struct Certification {
    bool is_witness_numeric = false;
    double min_product_value = 0.0;
    double min_eigenvalue = 0.0;
    int negative_rank = 0;
    /// Normalized projector onto the eigenspace with eigenvalues < -tol.
    std::optional<HermitianOperator> detection_state;
    double detection_value = 0.0;
    SeeSawReport see_saw;
    Witness witness;
};

Certification certify_witness(const Witness &w, const CertifyOptions &options = {});

/// Product vectors on which the operator vanishes.
struct ZeroSet {
    std::vector<ProductVector> vectors;
    std::vector<double> values;
    int span_rank = 0;
};

/// Relative singular-value threshold for span ranks.
inline constexpr double kSpanRankThreshold = 1e-8;

int span_rank(const std::vector<ProductVector> &vectors, double rel_threshold = kSpanRankThreshold);

struct ZeroSearchOptions {
    int target_count = 64;
    int max_descents = 512;
    double zero_tol = 1e-8;
    int max_iters = 5000;
    /// Factor movement per sweep below which a descent counts as converged.
    /// Values are quadratic in the distance to a zero, so the value alone
    /// cannot pin a zero more tightly than ~1e-8.
    double step_tol = 1e-13;
    /// Gram overlap |<u|v>| above 1 - dedup_tol marks a duplicate.
    double dedup_tol = 1e-6;
    uint64_t seed = 42;
};

/// Runs seeded see-saw descents and keeps deduplicated product zeros. No
/// certification is required: the Γ-side search uses this on W^Γ.
ZeroSet collect_zero_set(const HermitianOperator &w, const ZeroSearchOptions &options = {});

enum class SpanningVerdict { kConfirmed, kNotFoundAtBudget };

const char *to_string(SpanningVerdict verdict);

struct SpanningResult {
    SpanningVerdict verdict = SpanningVerdict::kNotFoundAtBudget;
    int rank = 0;
    int dimension = 0;
    ZeroSet zeros;
    /// Empty when confirmed; otherwise explains the one-sided semantics.
    std::string caveat;

    bool confirmed() const { return verdict == SpanningVerdict::kConfirmed; }
};

struct SpanningOptions {
    CertifyOptions certify;
    ZeroSearchOptions zeros;
};

/// Spanning check for a certified witness. Throws PreconditionError if the
/// operator does not certify as a witness. A failed rank check never claims
/// non-optimality.
SpanningResult has_spanning_property(const Witness &w, const SpanningOptions &options = {});

/// Spanning check on any operator (no certification step).
SpanningResult spanning_of(const HermitianOperator &op, const ZeroSearchOptions &options);

struct NdSpanningResult {
    SpanningResult witness_side;
    SpanningResult gamma_side;
    bool nd_spanning() const { return witness_side.confirmed() && gamma_side.confirmed(); }
};

/// Spanning for both W and W^Γ.
NdSpanningResult nd_spanning(const Witness &w, const SpanningOptions &options = {});

/// One-sided indecomposability certificate: rho and rho^Γ are PSD and
/// Tr(W rho) < -tol. False means "not certified", never "decomposable".
bool certify_indecomposable(const HermitianOperator &w,
                            const HermitianOperator &rho,
                            double tol = kPsdTol);

}  // namespace extwit

#endif
