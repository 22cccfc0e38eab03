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

#include "qunit/classifier.hpp"
#include "qunit/dataset.hpp"

namespace qunit {

enum class InitScheme { kZeros, kUniformSmall };
enum class GradientMode { kAnalytic, kFiniteDifference };

struct TrainConfig {
    double learning_rate = 0.002;
    int max_epochs = 2000;
    int convergence_window = 20;
    double convergence_delta = 1e-6;
    InitScheme init_scheme = InitScheme::kUniformSmall;
    std::uint64_t seed = 0;
    GradientMode gradient_mode = GradientMode::kAnalytic;
};

struct EpochRecord {
    int epoch = 0;
    double error = 0.0;          // total single-shot error E
    double train_accuracy = 0.0; // percent
    double wall_time_ms = 0.0;
};

struct TrainLog {
    std::vector<EpochRecord> records;
    ParameterState final_params;
    bool converged = false;
};

struct AccuracyReport {
    double percent = 0.0;
    RealVector per_class_percent;
};

/// Gradient of the total error, ordered (∂E/∂w_1..∂E/∂w_d,
/// ∂E/∂α_1..∂E/∂α_{N²−1}). The analytic path uses the per-slot unitary
/// derivatives and the phase-encoding derivative ∂ψ/∂w_j = i x_j S̄3 ψ;
/// the finite-difference path is central differencing of forward().
RealVector gradient(const LabeledDataset& split, const ParameterState& params,
                    int n, GradientMode mode = GradientMode::kAnalytic);

/// Plain full-batch gradient descent at a fixed learning rate. Each epoch
/// logs (error, train accuracy) before the parameter update; training stops
/// at max_epochs or when |E_t − E_{t−window}| < convergence_delta.
TrainLog train(const LabeledDataset& split, int n, const TrainConfig& cfg);

/// Per-sample argmax accuracy against labels, aggregate and per class.
AccuracyReport evaluate(const LabeledDataset& split, const ParameterState& params,
                        int n);

/// Seeded parameter draw: w then alpha, uniform in [−0.1, 0.1] for
/// kUniformSmall, all zero for kZeros.
ParameterState initial_parameters(int d, int n, InitScheme scheme,
                                  std::uint64_t seed);

} // namespace qunit
