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

#ifndef EXTWIT_SYSTEM_LAYOUT_H
#define EXTWIT_SYSTEM_LAYOUT_H

#include <cstddef>
#include <string>
#include <vector>

namespace extwit {

/// Ordered subsystem dimensions plus a bipartition cut.
///
/// Subsystems [0, cut) form the left party, [cut, n) the right party. A cut of
/// 0 or n is allowed for operators that are not used with bipartite semantics
/// (single-system caps, POVM elements, local states); operations that need a
/// bipartition call require_bipartite().
class SystemLayout {
   public:
    SystemLayout();
    SystemLayout(std::vector<int> dims, int cut);

    static SystemLayout single(int dim);
    static SystemLayout bipartite(int left_dim, int right_dim);

    const std::vector<int> &dims() const { return dims_; }
    int cut() const { return cut_; }
    size_t num_systems() const { return dims_.size(); }
    int dim(size_t system) const { return dims_.at(system); }
    int total_dim() const;
    int left_dim() const;
    int right_dim() const;

    bool is_bipartite() const;
    void require_bipartite() const;

    /// Indices of the subsystems right of the cut.
    std::vector<int> right_systems() const;

    /// Layout of this ⊗ other; the cut falls between the two operands.
    SystemLayout concat(const SystemLayout &other) const;

    /// Same dims, different cut.
    SystemLayout with_cut(int cut) const;

    /// Two-subsystem layout [left_dim, right_dim] grouping each party.
    SystemLayout coarse_bipartite() const;

    std::string str() const;

    bool operator==(const SystemLayout &other) const = default;

   private:
    std::vector<int> dims_;
    int cut_;
};

}  // namespace extwit

#endif
