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

#include "qunit/euler.hpp"

#include <cmath>
#include <string>

#include "qunit/core.hpp"
#include "qunit/errors.hpp"

namespace qunit {

namespace {

constexpr int kLambda3 = 3;

int antisymmetric_first_level(int k) { return (k - 1) * (k - 1) + 1; }

void append_factors(int n, std::vector<EulerFactor>& factors, int& next_slot) {
    if (n == 1) return;
    for (int k = 2; k <= n; ++k) {
        factors.push_back({kLambda3, next_slot++});
        factors.push_back({antisymmetric_first_level(k), next_slot++});
    }
    append_factors(n - 1, factors, next_slot);
    factors.push_back({n * n - 1, next_slot++});
}

} // namespace

EulerParameterization build_parameterization(int n) {
    if (n < 2) {
        throw DimensionError("SU(N) parameterization needs N ≥ 2, got " +
                             std::to_string(n));
    }
    EulerParameterization p;
    p.dim = n;
    int next_slot = 0;
    append_factors(n, p.factors, next_slot);
    p.total_slots = next_slot;
    return p;
}

ComplexMatrix factor_exponential(int generator_index, double angle, int n) {
    ComplexMatrix m = ComplexMatrix::Identity(n, n);
    const int s = static_cast<int>(std::round(std::sqrt(double(generator_index + 1))));
    if (s * s == generator_index + 1) {
        // exp of a diagonal generator is elementwise
        const int l = s - 1;
        const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
        for (int i = 0; i < l; ++i) m(i, i) = std::polar(1.0, angle * scale);
        m(l, l) = std::polar(1.0, -angle * l * scale);
        return m;
    }
    // antisymmetric generator coupling levels 1 and k: a real Givens rotation
    const int km1 = static_cast<int>(std::sqrt(double(generator_index)));
    const int k = km1 + 1;
    const double c = std::cos(angle);
    const double sn = std::sin(angle);
    m(0, 0) = c;
    m(0, k - 1) = sn;
    m(k - 1, 0) = -sn;
    m(k - 1, k - 1) = c;
    return m;
}

ComplexMatrix evaluate(const EulerParameterization& p,
                       const Eigen::Ref<const RealVector>& angles) {
    if (angles.size() != p.total_slots) {
        throw DimensionError("angle vector has " + std::to_string(angles.size()) +
                             " entries, parameterization expects " +
                             std::to_string(p.total_slots));
    }
    ComplexMatrix u = ComplexMatrix::Identity(p.dim, p.dim);
    for (const auto& f : p.factors) {
        u = u * factor_exponential(f.generator_index, angles(f.parameter_slot), p.dim);
    }
    return u;
}

EvaluationWithDerivatives
evaluate_with_derivatives(const EulerParameterization& p,
                          const Eigen::Ref<const RealVector>& angles) {
    if (angles.size() != p.total_slots) {
        throw DimensionError("angle vector has " + std::to_string(angles.size()) +
                             " entries, parameterization expects " +
                             std::to_string(p.total_slots));
    }
    const int n = p.dim;
    const int count = static_cast<int>(p.factors.size());

    std::vector<ComplexMatrix> factor(count);
    for (int t = 0; t < count; ++t) {
        factor[t] = factor_exponential(p.factors[t].generator_index,
                                       angles(p.factors[t].parameter_slot), n);
    }

    // prefix[t] = F_0 … F_{t−1};  suffix[t] = F_{t+1} … F_{end}
    std::vector<ComplexMatrix> prefix(count + 1), suffix(count + 1);
    prefix[0] = ComplexMatrix::Identity(n, n);
    for (int t = 0; t < count; ++t) prefix[t + 1] = prefix[t] * factor[t];
    suffix[count] = ComplexMatrix::Identity(n, n);
    for (int t = count - 1; t >= 0; --t) suffix[t] = factor[t] * suffix[t + 1];

    EvaluationWithDerivatives result;
    result.unitary = prefix[count];
    result.slot_derivatives.assign(p.total_slots, ComplexMatrix::Zero(n, n));
    for (int t = 0; t < count; ++t) {
        const ComplexMatrix gen = gell_mann_matrix(p.factors[t].generator_index, n);
        result.slot_derivatives[p.factors[t].parameter_slot] +=
            prefix[t] * (Complex(0.0, 1.0) * gen) * factor[t] * suffix[t + 1];
    }
    return result;
}

} // namespace qunit
