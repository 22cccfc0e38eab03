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

#include "qunit/fcnn.hpp"

#include <cmath>

#include "qunit/classifier.hpp"
#include "qunit/errors.hpp"
#include "qunit/rng.hpp"

namespace qunit {

namespace {

RealMatrix softmax_rows(RealMatrix logits) {
    for (int i = 0; i < logits.rows(); ++i) {
        RealVector row = logits.row(i);
        row.array() -= row.maxCoeff();
        row = row.array().exp();
        logits.row(i) = row / row.sum();
    }
    return logits;
}

RealMatrix uniform_matrix(Rng& rng, int rows, int cols) {
    RealMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m(i, j) = rng.uniform(-0.1, 0.1);
    }
    return m;
}

RealVector uniform_vector(Rng& rng, int size) {
    RealVector v(size);
    for (int i = 0; i < size; ++i) v(i) = rng.uniform(-0.1, 0.1);
    return v;
}

RealMatrix forward_probs(const FcnnModel& model, const RealMatrix& x) {
    if (model.hidden_dim == 0) {
        return softmax_rows((x * model.w1.transpose()).rowwise() +
                            model.b1.transpose());
    }
    RealMatrix hidden =
        ((x * model.w1.transpose()).rowwise() + model.b1.transpose()).array().tanh();
    return softmax_rows((hidden * model.w2.transpose()).rowwise() +
                        model.b2.transpose());
}

} // namespace

FcnnModel fcnn_train(const LabeledDataset& split, const FcnnConfig& cfg,
                     std::vector<EpochRecord>* log) {
    if (cfg.learning_rate <= 0.0 || cfg.epochs < 1 || cfg.hidden_dim < 0) {
        throw InvalidInputError("invalid FCNN configuration");
    }
    const int d = split.feature_dim;
    const int n = split.class_count;
    const int m = split.sample_count();
    const int h = cfg.hidden_dim;

    RealMatrix targets = RealMatrix::Zero(m, n);
    for (int i = 0; i < m; ++i) targets(i, split.labels[i]) = 1.0;

    Rng rng(cfg.seed);
    FcnnModel model;
    model.hidden_dim = h;
    if (h == 0) {
        model.w1 = uniform_matrix(rng, n, d);
        model.b1 = uniform_vector(rng, n);
    } else {
        model.w1 = uniform_matrix(rng, h, d);
        model.b1 = uniform_vector(rng, h);
        model.w2 = uniform_matrix(rng, n, h);
        model.b2 = uniform_vector(rng, n);
    }

    const RealMatrix& x = split.features;
    const auto record = [&](const RealMatrix& probs) {
        if (!log) return;
        double loss = 0.0;
        int correct = 0;
        for (int i = 0; i < m; ++i) {
            loss -= std::log(std::max(probs(i, split.labels[i]), 1e-300));
            if (argmax_class(RealVector(probs.row(i))) == split.labels[i]) ++correct;
        }
        log->push_back(
            {static_cast<int>(log->size()), loss / m, 100.0 * correct / m, 0.0});
    };

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        if (h == 0) {
            const RealMatrix probs = forward_probs(model, x);
            record(probs);
            const RealMatrix dz = (probs - targets) / m;
            model.w1 -= cfg.learning_rate * (dz.transpose() * x);
            model.b1 -= cfg.learning_rate * dz.colwise().sum().transpose();
        } else {
            const RealMatrix hidden =
                ((x * model.w1.transpose()).rowwise() + model.b1.transpose())
                    .array()
                    .tanh();
            const RealMatrix probs = softmax_rows(
                (hidden * model.w2.transpose()).rowwise() + model.b2.transpose());
            record(probs);
            const RealMatrix dz2 = (probs - targets) / m;
            const RealMatrix dhidden =
                (dz2 * model.w2).cwiseProduct((1.0 - hidden.array().square()).matrix());
            model.w2 -= cfg.learning_rate * (dz2.transpose() * hidden);
            model.b2 -= cfg.learning_rate * dz2.colwise().sum().transpose();
            model.w1 -= cfg.learning_rate * (dhidden.transpose() * x);
            model.b1 -= cfg.learning_rate * dhidden.colwise().sum().transpose();
        }
        if (!model.w1.allFinite() ||
            (h > 0 && !model.w2.allFinite())) {
            throw DivergedError("FCNN weights are not finite", epoch);
        }
    }
    return model;
}

double fcnn_loss(const FcnnModel& model, const LabeledDataset& split) {
    const RealMatrix probs = forward_probs(model, split.features);
    double loss = 0.0;
    for (int i = 0; i < split.sample_count(); ++i) {
        loss -= std::log(std::max(probs(i, split.labels[i]), 1e-300));
    }
    return loss / split.sample_count();
}

int fcnn_predict(const FcnnModel& model, const Eigen::Ref<const RealVector>& x) {
    const RealMatrix probs = forward_probs(model, x.transpose());
    return argmax_class(RealVector(probs.row(0)));
}

double fcnn_evaluate(const FcnnModel& model, const LabeledDataset& split) {
    const RealMatrix probs = forward_probs(model, split.features);
    int correct = 0;
    for (int i = 0; i < split.sample_count(); ++i) {
        if (argmax_class(RealVector(probs.row(i))) == split.labels[i]) ++correct;
    }
    return 100.0 * correct / split.sample_count();
}

ParameterCounts parameter_counts(int d, int n, int hidden_dim) {
    if (d < 1 || n < 1 || hidden_dim < 0) {
        throw InvalidInputError("parameter_counts: d, N ≥ 1 and hidden_dim ≥ 0");
    }
    ParameterCounts counts;
    counts.quantum = static_cast<long>(d) + static_cast<long>(n) * n - 1;
    if (hidden_dim == 0) {
        counts.classical = static_cast<long>(n + 1) * d;
    } else {
        counts.classical = static_cast<long>(d + 1) * hidden_dim +
                           static_cast<long>(hidden_dim + 1) * n;
    }
    return counts;
}

} // namespace qunit
