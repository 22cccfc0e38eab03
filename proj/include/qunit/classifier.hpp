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

#include <cstdint>
#include <vector>

#include "qunit/dataset.hpp"
#include "qunit/euler.hpp"
#include "qunit/types.hpp"

namespace qunit {

/// All trainable parameters: d feature weights and N²−1 Euler angles.
struct ParameterState {
    RealVector w;
    RealVector alpha;
    std::uint64_t seed = 0;
};

/// Ensemble density matrix of one class under the current encoding weights.
struct ClassEnsemble {
    int class_index = 0;
    ComplexMatrix rho;
    int sample_count = 0; // m_k
};

struct ForwardReport {
    RealVector per_class_error;             // E_k = 1 − p_k
    double total_error = 0.0;               // (1/M) Σ m_k E_k
    std::vector<int> per_sample_predictions; // split order
};

/// ρ = (1/m) Σ |ψ(x_i)⟩⟨ψ(x_i)| over the given samples.
ClassEnsemble class_density(const std::vector<RealVector>& samples,
                            const Eigen::Ref<const RealVector>& w, int n,
                            int class_index = 0);

/// Most probable measurement outcome of U(α)|ψ(x)⟩; ties break to the
/// lowest class index.
int predict(const Eigen::Ref<const RealVector>& x, const ParameterState& params,
            int n);

/// Density-matrix forward pass over a split: per-class errors, weighted total
/// error, and per-sample argmax predictions. Every class must be present.
ForwardReport forward(const LabeledDataset& split, const ParameterState& params,
                      int n);

/// Argmax with lowest-index tie-break.
int argmax_class(const Eigen::Ref<const RealVector>& probabilities);

/// Group split rows by label, preserving order. Throws if a class is empty.
std::vector<std::vector<RealVector>> rows_by_class(const LabeledDataset& split);

} // namespace qunit
