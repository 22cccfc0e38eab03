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

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qunit {

using Real = double;
using Complex = std::complex<double>;

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Tolerance for structural invariants: unitarity, state norm, trace.
inline constexpr double kStructuralTol = 1e-10;

/// Determinant accumulates more rounding through the Euler product.
inline constexpr double kDetTol = 1e-8;

/// Eigenvalue floor when checking density matrices for positivity.
inline constexpr double kPsdTol = 1e-9;

inline bool all_finite(const Eigen::Ref<const RealVector>& v) {
    return v.allFinite();
}

inline bool all_finite(const Eigen::Ref<const ComplexMatrix>& m) {
    return m.real().allFinite() && m.imag().allFinite();
}

/// ‖U†U − I‖_max
inline double unitarity_residual(const Eigen::Ref<const ComplexMatrix>& u) {
    ComplexMatrix gram = u.adjoint() * u;
    gram -= ComplexMatrix::Identity(u.cols(), u.cols());
    return gram.cwiseAbs().maxCoeff();
}

inline bool is_unitary(const Eigen::Ref<const ComplexMatrix>& u,
                       double tol = kStructuralTol) {
    return u.rows() == u.cols() && unitarity_residual(u) <= tol;
}

/// Hermitian within tol, unit trace within tol, eigenvalues ≥ −kPsdTol.
bool is_density_matrix(const Eigen::Ref<const ComplexMatrix>& rho,
                       double tol = kStructuralTol);

} // namespace qunit
