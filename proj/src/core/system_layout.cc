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

#include "extwit/system_layout.h"

#include <sstream>

#include "extwit/errors.h"

namespace extwit {

SystemLayout::SystemLayout() : dims_{1}, cut_(0) {}

SystemLayout::SystemLayout(std::vector<int> dims, int cut) : dims_(std::move(dims)), cut_(cut) {
    if (dims_.empty()) {
        throw LayoutError("layout needs at least one subsystem");
    }
    for (int d : dims_) {
        if (d < 1) {
            throw LayoutError("subsystem dimension must be >= 1, got " + std::to_string(d));
        }
    }
    if (cut_ < 0 || cut_ > static_cast<int>(dims_.size())) {
        throw LayoutError("cut " + std::to_string(cut_) + " outside [0, " +
                          std::to_string(dims_.size()) + "]");
    }
}

SystemLayout SystemLayout::single(int dim) { return SystemLayout({dim}, 0); }

SystemLayout SystemLayout::bipartite(int left_dim, int right_dim) {
    return SystemLayout({left_dim, right_dim}, 1);
}

int SystemLayout::total_dim() const {
    int n = 1;
    for (int d : dims_) {
        n *= d;
    }
    return n;
}

int SystemLayout::left_dim() const {
    int n = 1;
    for (int k = 0; k < cut_; ++k) {
        n *= dims_[k];
    }
    return n;
}

int SystemLayout::right_dim() const { return total_dim() / left_dim(); }

bool SystemLayout::is_bipartite() const {
    return cut_ > 0 && cut_ < static_cast<int>(dims_.size());
}

void SystemLayout::require_bipartite() const {
    if (!is_bipartite()) {
        throw LayoutError("layout " + str() + " has no bipartition (need 0 < cut < n)");
    }
}

std::vector<int> SystemLayout::right_systems() const {
    std::vector<int> out;
    for (int k = cut_; k < static_cast<int>(dims_.size()); ++k) {
        out.push_back(k);
    }
    return out;
}

SystemLayout SystemLayout::concat(const SystemLayout &other) const {
    std::vector<int> dims = dims_;
    dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
    return SystemLayout(std::move(dims), static_cast<int>(dims_.size()));
}

SystemLayout SystemLayout::with_cut(int cut) const { return SystemLayout(dims_, cut); }

SystemLayout SystemLayout::coarse_bipartite() const {
    require_bipartite();
    return bipartite(left_dim(), right_dim());
}

std::string SystemLayout::str() const {
    std::ostringstream out;
    out << "[";
    for (size_t k = 0; k < dims_.size(); ++k) {
        if (k == static_cast<size_t>(cut_) && k > 0) {
            out << " |";
        }
        out << (k ? " " : "") << dims_[k];
    }
    out << "]";
    return out.str();
}

}  // namespace extwit
