/* Copyright 2026 The qunit-classifier authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "qunit/core.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qunit/errors.hpp"

namespace qunit {

namespace {

void require_dim(int n) {
    if (n < 2) {
        throw DimensionError("system dimension must be at least 2, got " +
                             std::to_string(n));
    }
}

int isqrt(int x) {
    int r = static_cast<int>(std::sqrt(static_cast<double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

} // namespace

ComplexMatrix generalized_hadamard(int n) {
    require_dim(n);
    ComplexMatrix h(n, n);
    const double base = 2.0 * std::numbers::pi / n;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            h(k, j) = std::polar(1.0 / std::sqrt(double(n)), base * j * k);
        }
    }
    return h;
}

RealVector spin_diagonal(int n) {
    require_dim(n);
    RealVector s(n);
    for (int k = 0; k < n; ++k) s(k) = k - (n - 1) / 2.0;
    return s;
}

ComplexVector phase_encode(const Eigen::Ref<const RealVector>& x,
                           const Eigen::Ref<const RealVector>& w, int n) {
    require_dim(n);
    if (x.size() != w.size() || x.size() < 1) {
        throw DimensionError("feature and weight vectors must share length ≥ 1, got " +
                             std::to_string(x.size()) + " vs " + std::to_string(w.size()));
    }
    if (!all_finite(x) || !all_finite(w)) {
        throw InvalidInputError("phase_encode: non-finite component in x or w");
    }
    const double theta = w.dot(x);
    const double amp = 1.0 / std::sqrt(double(n));
    ComplexVector psi(n);
    for (int k = 0; k < n; ++k) {
        psi(k) = std::polar(amp, theta * (k - (n - 1) / 2.0));
    }
    return psi;
}

ComplexMatrix gell_mann_matrix(int index, int n) {
    require_dim(n);
    if (index < 1 || index > n * n - 1) {
        throw DimensionError("generator index " + std::to_string(index) +
                             " out of range for dimension " + std::to_string(n));
    }
    ComplexMatrix g = ComplexMatrix::Zero(n, n);
    const int s = isqrt(index + 1);
    if (s * s == index + 1) {
        // diagonal generator for level l = s − 1
        const int l = s - 1;
        const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
        for (int m = 0; m < l; ++m) g(m, m) = scale;
        g(l, l) = -l * scale;
        return g;
    }
    const int km1 = isqrt(index);
    const int k = km1 + 1;                // 1-based upper level
    const int offset = index - km1 * km1; // 0-based within the k block
    const int j = offset / 2 + 1;         // 1-based lower level
    if (offset % 2 == 0) {
        g(j - 1, k - 1) = 1.0;
        g(k - 1, j - 1) = 1.0;
    } else {
        g(j - 1, k - 1) = Complex(0.0, -1.0);
        g(k - 1, j - 1) = Complex(0.0, 1.0);
    }
    return g;
}

std::vector<HermitianGenerator> gell_mann_basis(int n) {
    require_dim(n);
    std::vector<HermitianGenerator> basis;
    basis.reserve(n * n - 1);
    for (int a = 1; a <= n * n - 1; ++a) {
        basis.push_back({a, gell_mann_matrix(a, n)});
    }
    return basis;
}

ComplexMatrix computational_projector(int n, int outcome) {
    require_dim(n);
    if (outcome < 0 || outcome >= n) {
        throw DimensionError("projector outcome " + std::to_string(outcome) +
                             " out of range for dimension " + std::to_string(n));
    }
    ComplexMatrix p = ComplexMatrix::Zero(n, n);
    p(outcome, outcome) = 1.0;
    return p;
}

ComplexVector apply_unitary(const ComplexMatrix& u, const ComplexVector& state) {
    if (u.rows() != u.cols() || u.cols() != state.size()) {
        throw DimensionError("apply_unitary: dimension mismatch");
    }
    return u * state;
}

ComplexMatrix apply_unitary(const ComplexMatrix& u, const ComplexMatrix& rho) {
    if (u.rows() != u.cols() || rho.rows() != rho.cols() || u.cols() != rho.rows()) {
        throw DimensionError("apply_unitary: dimension mismatch");
    }
    return u * rho * u.adjoint();
}

RealVector outcome_probabilities(const ComplexVector& state) {
    return state.cwiseAbs2();
}

RealVector outcome_probabilities(const ComplexMatrix& rho) {
    if (rho.rows() != rho.cols()) {
        throw DimensionError("outcome_probabilities: matrix must be square");
    }
    return rho.diagonal().real();
}

bool is_density_matrix(const Eigen::Ref<const ComplexMatrix>& rho, double tol) {
    if (rho.rows() != rho.cols()) return false;
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -kPsdTol;
}

} // namespace qunit
