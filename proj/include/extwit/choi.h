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

#ifndef EXTWIT_CHOI_H
#define EXTWIT_CHOI_H

#include <string>

#include "extwit/extension.h"
#include "extwit/hermitian_operator.h"
#include "extwit/witness.h"

namespace extwit::choi {

/// The 9x9 Choi witness on [3 | 3]: diagonal (1,0,1,1,1,0,0,1,1) and -1 on the
/// off-diagonal pairs among |00>, |11>, |22>.
Witness choi_witness();

/// Cyclic shift S|k> = |k+1 mod d>. Throws InputError for d < 2.
Matrix shift_operator(int d);

/// Maximally entangled vector (1/sqrt(d)) sum_k |k>|k>.
Vector maximally_entangled_vector(int d);

/// PPT entangled 3x3 family detected by the Choi witness:
///   rho = 2/7 P+ + alpha/7 s_plus + (5 - alpha)/7 s_minus,
/// with s_plus uniform on |01>,|12>,|20> and s_minus uniform on |10>,|21>,|02>.
/// Tr(W rho) = (3 - alpha)/7; PPT iff 1 <= alpha <= 4.
HermitianOperator ppt_entangled_state(double alpha);

/// The catalogue member used as the default indecomposability certificate.
inline constexpr double kCatalogueAlpha = 3.5;

/// Pair of 2x2 blocks parametrizing the three-party family below.
class AbParams {
   public:
    /// Throws InputError unless a, b are Hermitian PSD (1e-10) and
    /// Tr a + Tr b > 0.
    AbParams(Matrix a, Matrix b);

    /// a = [[1,1],[1,1]], b = I.
    static AbParams exhibit_default();

    const Matrix &a() const { return a_; }
    const Matrix &b() const { return b_; }

   private:
    Matrix a_;
    Matrix b_;
};

/// All-ones 2x2 cap on B'.
HermitianOperator exhibit_cap();

/// sum_{ij} |i><j| ⊗ rho_ij on [3 | 3 2] with
/// rho_ii = (S^i ⊗ I) X (S^i ⊗ I)^dagger, X = |0><0| ⊗ a + |2><2| ⊗ b,
/// rho_ij = |i><j| ⊗ a (i != j). No checks and no normalization; entries of
/// a and b are used as given (the PSD characterization tests feed signed
/// blocks through this).
Matrix rho_abb_candidate(const Matrix &a, const Matrix &b);

/// rho_abb_candidate divided by its exact trace, 3 (Tr a + Tr b).
HermitianOperator rho_abb(const AbParams &params);

/// 3/Tr(a+b) * Tr(cap (b - a)).
double extended_closed_form(const AbParams &params, const HermitianOperator &cap_right);
/// 3/Tr(a+b) * Tr(b - a).
double reduced_closed_form(const AbParams &params);

struct ExtensionValues {
    /// Tr((W ⊗ cap) rho_ABB'), from matrices.
    double ext_value = 0.0;
    /// Tr(W Tr_B'(rho_ABB')), from matrices.
    double reduced_value = 0.0;
    double ext_closed_form = 0.0;
    double reduced_closed_form = 0.0;
};

ExtensionValues extension_values(const AbParams &params, const HermitianOperator &cap_right);

/// Ratio matrix value / closed form on the default exhibit. Unit-trace
/// normalization makes this 1/3.
double fit_kappa();

struct Exhibit {
    Witness extended_witness;
    HermitianOperator rho_abb;
    HermitianOperator rho_ab;
    ExtensionValues values;
    double kappa = 0.0;
    double rho_abb_min_eigenvalue = 0.0;
    bool rho_abb_psd = false;
    bool detected_extended = false;
    bool undetected_reduced = false;
    bool accepted = false;
    std::string message;
};

/// Extended witness W ⊗ cap, the state, and its B' marginal, with the checks
/// ext_value < -1e-6 kappa, |reduced_value| <= 1e-10 and rho PSD at 1e-9.
/// A failed check is reported in `message`, not thrown. Throws
/// PreconditionError when Tr a = 0 (the marginal degenerates).
Exhibit nontrivial_extension_exhibit(const AbParams &params = AbParams::exhibit_default(),
                                     const HermitianOperator &cap_right = exhibit_cap());

}  // namespace extwit::choi

#endif
