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
#include "qunit/trainer.hpp"
#include "qunit/types.hpp"

namespace qunit {

struct FcnnConfig {
    int hidden_dim = 0; // 0 = single linear layer
    double learning_rate = 0.1;
    int epochs = 1000;
    std::uint64_t seed = 0;
};

/// Fully connected net, d → N or d → h → N with tanh on the hidden layer and
/// softmax + cross-entropy at the output. hidden_dim == 0 stores the single
/// layer in (w1, b1) and leaves (w2, b2) empty.
struct FcnnModel {
    int hidden_dim = 0;
    RealMatrix w1; // h×d, or N×d when hidden_dim == 0
    RealVector b1;
    RealMatrix w2; // N×h
    RealVector b2;
};

/// Full-batch gradient descent on softmax cross-entropy, deterministic per
/// seed. When log is given, each epoch appends (cross-entropy, train accuracy)
/// for the weights before that epoch's update.
FcnnModel fcnn_train(const LabeledDataset& split, const FcnnConfig& cfg,
                     std::vector<EpochRecord>* log = nullptr);

/// Mean cross-entropy of the model on a split (exposed for gradient checks).
double fcnn_loss(const FcnnModel& model, const LabeledDataset& split);

int fcnn_predict(const FcnnModel& model, const Eigen::Ref<const RealVector>& x);

/// Percent of split samples whose argmax output matches the label.
double fcnn_evaluate(const FcnnModel& model, const LabeledDataset& split);

struct ParameterCounts {
    long quantum = 0;   // d + N² − 1
    long classical = 0; // (N+1)·d for zero hidden, (d+1)h + (h+1)N otherwise
};

ParameterCounts parameter_counts(int d, int n, int hidden_dim);

} // namespace qunit
