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

/// One factor exp(i λ_g α_s) of the Euler product.
struct EulerFactor {
    int generator_index = 0; // 1-based Gell-Mann index
    int parameter_slot = 0;  // 0-based slot into the angle vector
};

/// Ordered factorization of SU(N) into one-generator exponentials.
/// For dimension N the factor list is A(2)…A(N) (each A(k) contributing a
/// λ3 factor then a λ_{(k−1)²+1} factor), followed by the factor list of the
/// embedded SU(N−1), followed by a final exp(i λ_{N²−1} α). Slots are assigned
/// by a single global counter in factor order, giving exactly N²−1 slots.
struct EulerParameterization {
    int dim = 0;
    std::vector<EulerFactor> factors;
    int total_slots = 0; // always dim²−1
};

EulerParameterization build_parameterization(int n);

/// Ordered product of the factor exponentials. Unitary with det = 1.
ComplexMatrix evaluate(const EulerParameterization& p,
                       const Eigen::Ref<const RealVector>& angles);

struct EvaluationWithDerivatives {
    ComplexMatrix unitary;
    std::vector<ComplexMatrix> slot_derivatives; // one per slot, ∂U/∂α_s
};

/// U together with all per-slot derivatives. Each slot's derivative is the
/// sum over factors on that slot of prefix · (iλ) · exp(iλα) · suffix.
EvaluationWithDerivatives
evaluate_with_derivatives(const EulerParameterization& p,
                          const Eigen::Ref<const RealVector>& angles);

/// Closed-form single-factor exponential exp(i λ_index α): a diagonal phase
/// matrix for diagonal generators, a Givens-style rotation in the (1, k)
/// plane for the antisymmetric pair generators used by the factorization.
ComplexMatrix factor_exponential(int generator_index, double angle, int n);

} // namespace qunit
