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

#include "qunit/classifier.hpp"

#include <string>

#include "qunit/core.hpp"
#include "qunit/errors.hpp"

namespace qunit {

int argmax_class(const Eigen::Ref<const RealVector>& probabilities) {
    int best = 0;
    for (int a = 1; a < probabilities.size(); ++a) {
        if (probabilities(a) > probabilities(best)) best = a;
    }
    return best;
}

std::vector<std::vector<RealVector>> rows_by_class(const LabeledDataset& split) {
    std::vector<std::vector<RealVector>> by_class(split.class_count);
    for (int i = 0; i < split.sample_count(); ++i) {
        by_class[split.labels[i]].push_back(split.features.row(i));
    }
    for (int k = 0; k < split.class_count; ++k) {
        if (by_class[k].empty()) {
            throw EmptyClassError("class " + std::to_string(k) +
                                  " has no samples in split '" + split.name + "'");
        }
    }
    return by_class;
}

ClassEnsemble class_density(const std::vector<RealVector>& samples,
                            const Eigen::Ref<const RealVector>& w, int n,
                            int class_index) {
    if (samples.empty()) {
        throw EmptyClassError("class_density: class " + std::to_string(class_index) +
                              " has no samples");
    }
    ComplexMatrix rho = ComplexMatrix::Zero(n, n);
    for (const auto& x : samples) {
        const ComplexVector psi = phase_encode(x, w, n);
        rho.noalias() += psi * psi.adjoint();
    }
    rho /= static_cast<double>(samples.size());
    return {class_index, std::move(rho), static_cast<int>(samples.size())};
}

int predict(const Eigen::Ref<const RealVector>& x, const ParameterState& params,
            int n) {
    const auto parameterization = build_parameterization(n);
    const ComplexMatrix u = evaluate(parameterization, params.alpha);
    const ComplexVector psi = phase_encode(x, params.w, n);
    return argmax_class(outcome_probabilities(ComplexVector(u * psi)));
}

ForwardReport forward(const LabeledDataset& split, const ParameterState& params,
                      int n) {
    if (split.class_count != n) {
        throw DimensionError("forward: split has " + std::to_string(split.class_count) +
                             " classes, model expects " + std::to_string(n));
    }
    const auto by_class = rows_by_class(split);
    const auto parameterization = build_parameterization(n);
    const ComplexMatrix u = evaluate(parameterization, params.alpha);

    ForwardReport report;
    report.per_class_error.resize(n);
    const int total = split.sample_count();
    double weighted = 0.0;
    for (int k = 0; k < n; ++k) {
        const ClassEnsemble ensemble = class_density(by_class[k], params.w, n, k);
        const ComplexMatrix transformed = u * ensemble.rho * u.adjoint();
        const double p_k = transformed(k, k).real();
        report.per_class_error(k) = 1.0 - p_k;
        weighted += ensemble.sample_count * report.per_class_error(k);
    }
    report.total_error = weighted / total;

    report.per_sample_predictions.reserve(total);
    for (int i = 0; i < total; ++i) {
        const ComplexVector psi = phase_encode(split.features.row(i), params.w, n);
        report.per_sample_predictions.push_back(
            argmax_class(outcome_probabilities(ComplexVector(u * psi))));
    }
    return report;
}

} // namespace qunit
