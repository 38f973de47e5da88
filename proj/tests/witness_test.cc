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

#include <gtest/gtest.h>

#include <cmath>

#include "extwit/choi.h"
#include "extwit/errors.h"
#include "extwit/linalg.h"
#include "extwit/random.h"
#include "extwit/witness.h"
#include "oracles.h"

namespace extwit {
namespace {

Vector basis_vector(int d, int k) {
    Vector v = Vector::Zero(d);
    v(k) = 1.0;
    return v;
}

ProductVector product(int i, int j, int d = 3) {
    return ProductVector(SystemLayout::bipartite(d, d), {basis_vector(d, i), basis_vector(d, j)});
}

Witness minus_identity() {
    return Witness{HermitianOperator::identity(SystemLayout::bipartite(2, 2)) * -1.0, "-I"};
}

TEST(Expectation, ChoiOnBasisProductIsExactlyZero) {
    Witness w = choi::choi_witness();
    EXPECT_EQ(expectation(w, product(0, 1)), 0.0);
    EXPECT_EQ(expectation(w, product(0, 1).density()), 0.0);
}

TEST(Expectation, ChoiOnPsiPlus) {
    Witness w = choi::choi_witness();
    HermitianOperator p = HermitianOperator::projector(w.op.layout(), choi::maximally_entangled_vector(3));
    EXPECT_NEAR(expectation(w, p), -1.0, 1e-14);
}

TEST(Expectation, IdentityStateGivesTrace) {
    for (uint64_t seed = 0; seed < 5; ++seed) {
        HermitianOperator w = random_hermitian(SystemLayout::bipartite(2, 3), seed);
        EXPECT_NEAR(expectation(w, HermitianOperator::identity(w.layout())), w.trace(), 1e-12);
    }
}

TEST(Expectation, DimensionMismatchThrows) {
    EXPECT_THROW(expectation(choi::choi_witness(), HermitianOperator::identity(SystemLayout::bipartite(2, 2))),
                 LayoutError);
}

TEST(SeeSaw, SwapMinimumIsZero) {
    SeeSawReport r = min_product_expectation(swap_witness(2).op);
    EXPECT_NEAR(r.best_value, 0.0, 1e-9);
}

TEST(SeeSaw, ChoiMinimumIsZero) {
    SeeSawReport r = min_product_expectation(choi::choi_witness().op);
    EXPECT_NEAR(r.best_value, 0.0, 1e-9);
}

TEST(SeeSaw, MinusIdentity) {
    SeeSawReport r = min_product_expectation(minus_identity().op);
    EXPECT_NEAR(r.best_value, -1.0, 1e-12);
}

TEST(SeeSaw, ReportInvariants) {
    HermitianOperator w = random_hermitian(SystemLayout::bipartite(3, 2), 17);
    SeeSawOptions opts;
    opts.restarts = 16;
    SeeSawReport r = min_product_expectation(w, opts);
    ASSERT_EQ(r.runs.size(), 16u);
    EXPECT_EQ(r.restarts, 16);
    double best = r.runs[0].final_value;
    for (const SeeSawRun &run : r.runs) {
        best = std::min(best, run.final_value);
        EXPECT_TRUE(run.monotone);
        for (size_t k = 1; k < run.trace.size(); ++k) {
            EXPECT_LE(run.trace[k], run.trace[k - 1] + 1e-12 * std::max(1.0, std::abs(run.trace[k - 1])));
        }
    }
    EXPECT_EQ(r.best_value, best);
    EXPECT_EQ(r.runs[static_cast<size_t>(r.best_restart)].final_value, best);
    EXPECT_NEAR(expectation(w, r.best_vector), r.best_value, 1e-10);
}

TEST(SeeSaw, DeterministicUnderSeed) {
    HermitianOperator w = random_hermitian(SystemLayout::bipartite(3, 3), 4);
    SeeSawReport a = min_product_expectation(w);
    SeeSawReport b = min_product_expectation(w);
    EXPECT_EQ(a.best_value, b.best_value);
    EXPECT_EQ(a.best_restart, b.best_restart);
    EXPECT_TRUE((a.best_vector.full().array() == b.best_vector.full().array()).all());
}

TEST(SeeSaw, AgreesWithBlochGridOracle) {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        HermitianOperator w = random_hermitian(SystemLayout::bipartite(2, 2), 1000 + seed);
        double oracle_min = oracle::brute_force_product_min(w.matrix());
        SeeSawReport r = min_product_expectation(w);
        EXPECT_NEAR(r.best_value, oracle_min, 1e-6) << "seed " << seed;
    }
}

TEST(SeeSaw, EffectiveOperatorsReproduceValue) {
    HermitianOperator w = random_hermitian(SystemLayout::bipartite(3, 2), 9);
    ProductVector v = random_product_vector(w.layout(), 10);
    Matrix left = left_effective_operator(w, v.factor(1));
    Matrix right = right_effective_operator(w, v.factor(0));
    double direct = expectation(w, v);
    EXPECT_NEAR((v.factor(0).adjoint() * left * v.factor(0))(0, 0).real(), direct, 1e-12);
    EXPECT_NEAR((v.factor(1).adjoint() * right * v.factor(1))(0, 0).real(), direct, 1e-12);
}

TEST(SeeSaw, DegenerateMinimumIsRephased) {
    Vector v = min_eigenvector(Matrix::Identity(3, 3) * Complex(2.0, 0.0));
    Eigen::Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    EXPECT_GT(v(arg).real(), 0.0);
    EXPECT_EQ(v(arg).imag(), 0.0);
    Vector again = min_eigenvector(Matrix::Identity(3, 3) * Complex(2.0, 0.0));
    EXPECT_TRUE((v.array() == again.array()).all());
}

TEST(Certify, Choi) {
    Certification c = certify_witness(choi::choi_witness());
    EXPECT_TRUE(c.is_witness_numeric);
    EXPECT_TRUE(c.witness.certified);
    EXPECT_EQ(c.negative_rank, 1);
    ASSERT_TRUE(c.detection_state.has_value());
    HermitianOperator psi_plus =
        HermitianOperator::projector(SystemLayout::bipartite(3, 3), choi::maximally_entangled_vector(3));
    EXPECT_LE((c.detection_state->matrix() - psi_plus.matrix()).norm(), 1e-10);
    EXPECT_NEAR(c.detection_value, -1.0, 1e-10);
}

TEST(Certify, SwapDetectsSinglet) {
    Certification c = certify_witness(swap_witness(2));
    EXPECT_TRUE(c.is_witness_numeric);
    Vector psi = Vector::Zero(4);
    psi(1) = 1.0 / std::sqrt(2.0);
    psi(2) = -1.0 / std::sqrt(2.0);
    ASSERT_TRUE(c.detection_state.has_value());
    EXPECT_LE((c.detection_state->matrix() - psi * psi.adjoint()).norm(), 1e-10);
    EXPECT_NEAR(c.detection_value, -1.0, 1e-10);
}

TEST(Certify, PsdOperatorIsNotAWitness) {
    Witness w{HermitianOperator::identity(SystemLayout::bipartite(3, 3)) * (1.0 / 9.0), "I/9"};
    Certification c = certify_witness(w);
    EXPECT_FALSE(c.is_witness_numeric);
    EXPECT_FALSE(c.detection_state.has_value());
}

TEST(Certify, NegativeOperatorIsNotAWitness) {
    Certification c = certify_witness(minus_identity());
    EXPECT_FALSE(c.is_witness_numeric);
    EXPECT_NEAR(c.min_product_value, -1.0, 1e-12);
}

TEST(Certify, CataloguedWitnessesDetectStrongly) {
    for (const Witness &w : {choi::choi_witness(), swap_witness(2), swap_witness(3)}) {
        Certification c = certify_witness(w);
        EXPECT_TRUE(c.is_witness_numeric) << w.provenance;
        EXPECT_GE(c.min_product_value, -1e-8) << w.provenance;
        EXPECT_LE(c.detection_value, -0.5) << w.provenance;
    }
}

TEST(ZeroSet, SwapHasFullRank) {
    ZeroSet z = collect_zero_set(swap_witness(2).op);
    EXPECT_EQ(z.span_rank, 4);
    ASSERT_EQ(z.values.size(), z.vectors.size());
    for (const ProductVector &v : z.vectors) {
        EXPECT_LE(std::abs(expectation(swap_witness(2).op, v)), 1e-8);
    }
}

TEST(ZeroSet, ChoiRankIsDeficient) {
    ZeroSet z = collect_zero_set(choi::choi_witness().op);
    EXPECT_LT(z.span_rank, 9);
    EXPECT_GT(z.span_rank, 0);
    for (size_t i = 0; i < z.vectors.size(); ++i) {
        EXPECT_LE(std::abs(expectation(choi::choi_witness().op, z.vectors[i])), 1e-8);
        EXPECT_EQ(z.values[i], expectation(choi::choi_witness().op, z.vectors[i]));
    }
}

TEST(ZeroSet, SpanRankOfBasisProducts) {
    std::vector<ProductVector> v = {product(0, 1), product(1, 2), product(0, 1)};
    EXPECT_EQ(span_rank(v), 2);
    EXPECT_EQ(span_rank({}), 0);
}

TEST(ZeroSet, DistinctMembers) {
    ZeroSet z = collect_zero_set(swap_witness(2).op);
    for (size_t i = 0; i < z.vectors.size(); ++i) {
        for (size_t j = i + 1; j < z.vectors.size(); ++j) {
            double overlap = std::abs(z.vectors[i].full().dot(z.vectors[j].full()));
            EXPECT_LE(overlap, 1.0 - 1e-6);
        }
    }
}

TEST(Spanning, SwapConfirmed) {
    SpanningResult r = has_spanning_property(swap_witness(2));
    EXPECT_TRUE(r.confirmed());
    EXPECT_EQ(r.rank, 4);
    EXPECT_EQ(r.dimension, 4);
    EXPECT_STREQ(to_string(r.verdict), "confirmed");
}

TEST(Spanning, ChoiNotFoundWithCaveat) {
    SpanningResult r = has_spanning_property(choi::choi_witness());
    EXPECT_FALSE(r.confirmed());
    EXPECT_STREQ(to_string(r.verdict), "not-found-at-budget");
    EXPECT_NE(r.caveat.find("optimality not decided"), std::string::npos);
}

TEST(Spanning, NonWitnessIsPreconditionViolation) {
    EXPECT_THROW(has_spanning_property(minus_identity()), PreconditionError);
    EXPECT_THROW(nd_spanning(minus_identity()), PreconditionError);
}

TEST(Spanning, SwapIsNotNdSpanning) {
    // swap^Gamma is twice the projector on Phi+; its product zeros span only
    // the orthogonal complement of Phi+.
    NdSpanningResult r = nd_spanning(swap_witness(2));
    EXPECT_TRUE(r.witness_side.confirmed());
    EXPECT_EQ(r.gamma_side.rank, 3);
    EXPECT_FALSE(r.nd_spanning());
}

TEST(Indecomposable, ChoiWithCataloguePptState) {
    HermitianOperator rho = choi::ppt_entangled_state(choi::kCatalogueAlpha);
    EXPECT_TRUE(certify_indecomposable(choi::choi_witness().op, rho));
}

TEST(Indecomposable, ChoiWithPsiPlusIsNpt) {
    HermitianOperator p =
        HermitianOperator::projector(SystemLayout::bipartite(3, 3), choi::maximally_entangled_vector(3));
    EXPECT_LT(expectation(choi::choi_witness(), p), 0.0);
    EXPECT_FALSE(certify_indecomposable(choi::choi_witness().op, p));
}

TEST(Indecomposable, SwapNeverDetectsPptStates) {
    int collected = 0;
    uint64_t seed = 0;
    while (collected < 1000) {
        Rng rng(derive_seed(77, seed));
        HermitianOperator sigma = random_density(4, derive_seed(78, seed));
        ++seed;
        double p = rng.uniform();
        HermitianOperator rho =
            HermitianOperator(SystemLayout::bipartite(2, 2),
                              p * sigma.matrix() + (1.0 - p) * Matrix::Identity(4, 4) / 4.0);
        if (!is_psd(partial_transpose(rho), kPsdTol)) {
            continue;
        }
        ++collected;
        EXPECT_GE(expectation(swap_witness(2).op, rho), -1e-12);
        EXPECT_FALSE(certify_indecomposable(swap_witness(2).op, rho));
    }
}

TEST(Indecomposable, DimensionMismatchThrows) {
    EXPECT_THROW(certify_indecomposable(choi::choi_witness().op, random_density(SystemLayout::bipartite(2, 2), 1)),
                 LayoutError);
}

}  // namespace
}  // namespace extwit
