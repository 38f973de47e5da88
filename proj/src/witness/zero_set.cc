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

#include <algorithm>
#include <cmath>

#include "extwit/errors.h"
#include "extwit/random.h"
#include "extwit/witness.h"

namespace extwit {

const char *to_string(SpanningVerdict verdict) {
    switch (verdict) {
        case SpanningVerdict::kConfirmed:
            return "confirmed";
        case SpanningVerdict::kNotFoundAtBudget:
            return "not-found-at-budget";
    }
    return "unknown";
}

int span_rank(const std::vector<ProductVector> &vectors, double rel_threshold) {
    if (vectors.empty()) {
        return 0;
    }
    Vector first = vectors.front().full();
    Matrix stacked(first.size(), static_cast<Eigen::Index>(vectors.size()));
    for (size_t k = 0; k < vectors.size(); ++k) {
        Vector v = vectors[k].full();
        if (v.size() != first.size()) {
            throw LayoutError("span_rank: vectors of different dimensions");
        }
        stacked.col(static_cast<Eigen::Index>(k)) = v;
    }
    return numerical_rank(stacked, rel_threshold);
}

ZeroSet collect_zero_set(const HermitianOperator &w, const ZeroSearchOptions &options) {
    w.layout().require_bipartite();
    SystemLayout coarse = w.layout().coarse_bipartite();
    double floor = 1e-15 * std::max(1.0, w.frobenius_norm());

    ZeroSet out;
    std::vector<Vector> kept;
    for (int d = 0; d < options.max_descents; ++d) {
        if (static_cast<int>(out.vectors.size()) >= options.target_count) {
            break;
        }
        uint64_t seed = derive_seed(options.seed, static_cast<uint64_t>(d));
        ProductVector start = random_product_vector(coarse, seed);
        SeeSawRun run = see_saw_descent(w, start, options.max_iters, floor, options.step_tol);
        // Descents still creeping toward a degenerate zero sit far from it even
        // when their value is tiny; only converged descents count.
        if (!run.converged || std::abs(run.final_value) > options.zero_tol) {
            continue;
        }
        Vector full = run.vector.full();
        bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const Vector &u) {
            return std::abs(u.dot(full)) > 1.0 - options.dedup_tol;
        });
        if (duplicate) {
            continue;
        }
        kept.push_back(full);
        out.vectors.push_back(run.vector);
        out.values.push_back(run.final_value);
    }
    out.span_rank = span_rank(out.vectors);
    return out;
}

SpanningResult spanning_of(const HermitianOperator &op, const ZeroSearchOptions &options) {
    SpanningResult out;
    out.zeros = collect_zero_set(op, options);
    out.rank = out.zeros.span_rank;
    out.dimension = op.dim();
    if (out.rank == out.dimension) {
        out.verdict = SpanningVerdict::kConfirmed;
    } else {
        out.verdict = SpanningVerdict::kNotFoundAtBudget;
        out.caveat = "product zeros found span " + std::to_string(out.rank) + " of " +
                     std::to_string(out.dimension) +
                     " dimensions at this search budget; optimality not decided";
    }
    return out;
}

namespace {

void require_witness(const Witness &w, const CertifyOptions &options) {
    Certification cert = certify_witness(w, options);
    if (!cert.is_witness_numeric) {
        throw PreconditionError("operator '" + w.provenance +
                                "' is not a witness (min product value " +
                                std::to_string(cert.min_product_value) + ", min eigenvalue " +
                                std::to_string(cert.min_eigenvalue) + ")");
    }
}

}  // namespace

SpanningResult has_spanning_property(const Witness &w, const SpanningOptions &options) {
    require_witness(w, options.certify);
    return spanning_of(w.op, options.zeros);
}

NdSpanningResult nd_spanning(const Witness &w, const SpanningOptions &options) {
    require_witness(w, options.certify);
    NdSpanningResult out;
    out.witness_side = spanning_of(w.op, options.zeros);
    out.gamma_side = spanning_of(partial_transpose(w.op), options.zeros);
    return out;
}

}  // namespace extwit
