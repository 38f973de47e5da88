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

#ifndef EXTWIT_EXTENSION_H
#define EXTWIT_EXTENSION_H

#include "extwit/hermitian_operator.h"
#include "extwit/witness.h"

namespace extwit {

/// Pair of positive semidefinite caps placed left and right of a bipartite
/// operator: W -> cap_left ⊗ W ⊗ cap_right.
class ExtensionSpec {
   public:
    /// Throws InputError if either cap fails is_psd at 1e-10 or is zero.
    ExtensionSpec(HermitianOperator cap_left, HermitianOperator cap_right);

    /// One-dimensional unit caps.
    static ExtensionSpec trivial();

    const HermitianOperator &cap_left() const { return cap_left_; }
    const HermitianOperator &cap_right() const { return cap_right_; }
    int left_dim() const { return cap_left_.dim(); }
    int right_dim() const { return cap_right_.dim(); }

   private:
    HermitianOperator cap_left_;
    HermitianOperator cap_right_;
};

/// cap_left ⊗ W ⊗ cap_right with layout [caps_left..., W..., caps_right...];
/// the cut sits between the left cap plus W's left party and the rest, so a
/// witness on [A | B] becomes one on [A' A | B B']. No matrix permutation.
Witness extend_witness(const Witness &w, const ExtensionSpec &spec);
HermitianOperator extend_operator(const HermitianOperator &op, const ExtensionSpec &spec);

/// Same product for states. Throws InputError if rho is not PSD (1e-9).
HermitianOperator extend_state(const HermitianOperator &rho, const ExtensionSpec &spec, bool normalize);

/// Product zeros {e_i ⊗ phi ⊗ psi ⊗ f_j} over the computational bases of the
/// new systems. The rank is recomputed from the stacked vectors; `values` is
/// left empty since no operator is evaluated here.
ZeroSet extended_zero_set(const ZeroSet &zeros, int left_dim, int right_dim);

/// || (cap_left ⊗ W ⊗ cap_right)^Γ - cap_left ⊗ W^Γ ⊗ cap_right^T ||_F.
double gamma_of_extension_residual(const Witness &w, const ExtensionSpec &spec);
bool gamma_of_extension_check(const Witness &w, const ExtensionSpec &spec, double tol = 1e-10);

}  // namespace extwit

#endif
