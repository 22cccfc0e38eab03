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

#include <vector>

#include "qunit/types.hpp"

namespace qunit {

/// Hermitian traceless basis element of su(N), carrying its 1-based index
/// in the generalized Gell-Mann convention.
struct HermitianGenerator {
    int index = 0;
    ComplexMatrix matrix;
};

/// N×N discrete-Fourier unitary: entry (k, j) = exp(i 2πjk/N)/√N.
/// Reduces to the standard Hadamard gate at N = 2.
ComplexMatrix generalized_hadamard(int n);

/// Spin-like diagonal (−(N−1)/2, −(N−1)/2 + 1, …, (N−1)/2).
RealVector spin_diagonal(int n);

/// Encode a feature vector as phases on the uniform superposition:
/// amplitude k = exp(iθ(k − (N−1)/2))/√N with θ = Σ_j w_j x_j.
ComplexVector phase_encode(const Eigen::Ref<const RealVector>& x,
                           const Eigen::Ref<const RealVector>& w, int n);

/// Single generalized Gell-Mann matrix, index in 1..N²−1. Indexing: for each
/// pair j < k the symmetric element E_jk + E_kj comes at (k−1)² + 2(j−1) + 1
/// and the antisymmetric −i(E_jk − E_kj) right after it; the diagonal element
/// for level l sits at (l+1)² − 1.
ComplexMatrix gell_mann_matrix(int index, int n);

/// All N²−1 generators, normalized so Tr(λ_a λ_b) = 2δ_ab.
std::vector<HermitianGenerator> gell_mann_basis(int n);

/// Computational-basis projector |a⟩⟨a|.
ComplexMatrix computational_projector(int n, int outcome);

/// U|ψ⟩ for states, U ρ U† for density matrices.
ComplexVector apply_unitary(const ComplexMatrix& u, const ComplexVector& state);
ComplexMatrix apply_unitary(const ComplexMatrix& u, const ComplexMatrix& rho);

/// Projective-measurement outcome probabilities in the computational basis.
RealVector outcome_probabilities(const ComplexVector& state);
RealVector outcome_probabilities(const ComplexMatrix& rho);

} // namespace qunit
