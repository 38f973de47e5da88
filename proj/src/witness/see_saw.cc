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

Matrix left_effective_operator(const HermitianOperator &w, const Vector &psi) {
    const int dl = w.layout().left_dim();
    const int dr = w.layout().right_dim();
    if (psi.size() != dr) {
        throw LayoutError("right factor has the wrong dimension");
    }
    const Matrix &m = w.matrix();
    Matrix a(dl, dl);
    for (int i = 0; i < dl; ++i) {
        for (int j = 0; j < dl; ++j) {
            a(i, j) = psi.dot(m.block(i * dr, j * dr, dr, dr) * psi);
        }
    }
    return a;
}

Matrix right_effective_operator(const HermitianOperator &w, const Vector &phi) {
    const int dl = w.layout().left_dim();
    const int dr = w.layout().right_dim();
    if (phi.size() != dl) {
        throw LayoutError("left factor has the wrong dimension");
    }
    const Matrix &m = w.matrix();
    Matrix b = Matrix::Zero(dr, dr);
    for (int i = 0; i < dl; ++i) {
        for (int j = 0; j < dl; ++j) {
            Complex c = std::conj(phi(i)) * phi(j);
            if (c != Complex(0.0)) {
                b += c * m.block(i * dr, j * dr, dr, dr);
            }
        }
    }
    return b;
}

Vector min_eigenvector(const Matrix &hermitian) {
    Spectrum s = eigh(hermitian);
    Eigen::Index n = s.values.size();
    double lowest = s.values(n - 1);
    double spread = std::max(1.0, std::abs(s.values(0)) + std::abs(lowest));
    Eigen::Index pick = n - 1;
    for (Eigen::Index k = 0; k < n; ++k) {
        if (s.values(k) - lowest <= 1e-12 * spread) {
            pick = k;
            break;
        }
    }
    Vector v = s.vectors.col(pick);
    Eigen::Index big = 0;
    for (Eigen::Index k = 1; k < v.size(); ++k) {
        if (std::abs(v(k)) > std::abs(v(big))) {
            big = k;
        }
    }
    Complex phase = v(big) / std::abs(v(big));
    v *= std::conj(phase);
    v(big) = Complex(v(big).real(), 0.0);
    return v / v.norm();
}

SeeSawRun see_saw_descent(const HermitianOperator &w,
                          const ProductVector &start,
                          int max_iters,
                          double value_tol,
                          double step_tol) {
    const SystemLayout &layout = w.layout();
    layout.require_bipartite();
    SystemLayout coarse = layout.coarse_bipartite();
    if (start.factors().size() != 2 || start.factor(0).size() != coarse.dim(0) ||
        start.factor(1).size() != coarse.dim(1)) {
        throw LayoutError("see-saw start must be a product vector on " + coarse.str());
    }

    SeeSawRun run;
    Vector phi = start.factor(0);
    Vector psi = start.factor(1);
    double value = expectation(w, start);
    run.initial_value = value;
    run.trace.push_back(value);

    auto record = [&run](double next) {
        double prev = run.trace.back();
        if (next > prev + 1e-12 * std::max(1.0, std::abs(prev))) {
            run.monotone = false;
        }
        run.trace.push_back(next);
    };

    for (int it = 0; it < max_iters; ++it) {
        double before = value;
        Vector old_phi = phi;
        Vector old_psi = psi;
        Matrix a = left_effective_operator(w, psi);
        phi = min_eigenvector(a);
        record(phi.dot(a * phi).real());

        Matrix b = right_effective_operator(w, phi);
        psi = min_eigenvector(b);
        value = psi.dot(b * psi).real();
        record(value);

        run.iterations = it + 1;
        bool settled = step_tol <= 0.0 ||
                       (phi - old_phi).norm() + (psi - old_psi).norm() <= step_tol;
        if (before - value <= value_tol && settled) {
            run.converged = true;
            break;
        }
    }
    run.vector = ProductVector(coarse, {phi, psi});
    run.final_value = expectation(w, run.vector);
    return run;
}

SeeSawReport min_product_expectation(const HermitianOperator &w, const SeeSawOptions &options) {
    if (options.restarts < 1) {
        throw InputError("see-saw needs at least one restart");
    }
    w.layout().require_bipartite();
    SystemLayout coarse = w.layout().coarse_bipartite();

    SeeSawReport report;
    report.restarts = options.restarts;
    for (int r = 0; r < options.restarts; ++r) {
        uint64_t seed = derive_seed(options.seed, static_cast<uint64_t>(r));
        ProductVector start = random_product_vector(coarse, seed);
        SeeSawRun run = see_saw_descent(w, start, options.max_iters, options.value_tol);
        run.seed = seed;
        report.runs.push_back(std::move(run));
    }
    report.best_restart = 0;
    for (int r = 1; r < options.restarts; ++r) {
        if (report.runs[r].final_value < report.runs[report.best_restart].final_value) {
            report.best_restart = r;
        }
    }
    report.best_value = report.runs[report.best_restart].final_value;
    report.best_vector = report.runs[report.best_restart].vector;
    return report;
}

}  // namespace extwit
