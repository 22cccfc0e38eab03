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

#include "qunit/trainer.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "qunit/core.hpp"
#include "qunit/errors.hpp"
#include "qunit/rng.hpp"

namespace qunit {

namespace {

struct EpochResult {
    double error = 0.0;
    double train_accuracy = 0.0;
    RealVector grad; // (w block, alpha block)
};

/// One fused pass: total error, per-sample train accuracy, and the full
/// analytic gradient, sharing the encoded states and the evaluated unitary.
EpochResult epoch_pass(const LabeledDataset& split,
                       const std::vector<std::vector<RealVector>>& by_class,
                       const EulerParameterization& parameterization,
                       const ParameterState& params, int n, bool want_gradient) {
    const int d = static_cast<int>(params.w.size());
    const int slots = parameterization.total_slots;
    const int total = split.sample_count();
    const RealVector spin = spin_diagonal(n);

    ComplexMatrix u;
    std::vector<ComplexMatrix> du;
    if (want_gradient) {
        auto eval = evaluate_with_derivatives(parameterization, params.alpha);
        u = std::move(eval.unitary);
        du = std::move(eval.slot_derivatives);
    } else {
        u = evaluate(parameterization, params.alpha);
    }

    EpochResult result;
    if (want_gradient) result.grad = RealVector::Zero(d + slots);

    int correct = 0;
    double weighted_error = 0.0;
    for (int k = 0; k < n; ++k) {
        const auto& rows = by_class[k];
        const int m_k = static_cast<int>(rows.size());
        ComplexMatrix rho = ComplexMatrix::Zero(n, n);
        for (const auto& x : rows) {
            const ComplexVector psi = phase_encode(x, params.w, n);
            rho.noalias() += psi * psi.adjoint();

            const ComplexVector u_psi = u * psi;
            if (argmax_class(outcome_probabilities(u_psi)) == k) ++correct;

            if (want_gradient) {
                // ∂p_k/∂w_j = −2 x_j Im(conj⟨k|Uψ⟩ · ⟨k|U S̄3 ψ⟩)
                const Complex a = u_psi(k);
                Complex b(0.0, 0.0);
                for (int c = 0; c < n; ++c) b += u(k, c) * (spin(c) * psi(c));
                const double coeff = 2.0 / total * std::imag(std::conj(a) * b);
                result.grad.head(d) += coeff * x;
            }
        }
        rho /= static_cast<double>(m_k);
        const ComplexMatrix transformed = u * rho * u.adjoint();
        weighted_error += m_k * (1.0 - transformed(k, k).real());

        if (want_gradient) {
            // ∂p_k/∂α_s = 2 Re((dU_s ρ_k U†)(k,k))
            const ComplexMatrix rho_udag = rho * u.adjoint();
            for (int s = 0; s < slots; ++s) {
                const Complex entry = du[s].row(k) * rho_udag.col(k);
                result.grad(d + s) -= 2.0 * (double(m_k) / total) * entry.real();
            }
        }
    }
    result.error = weighted_error / total;
    result.train_accuracy = 100.0 * correct / total;
    return result;
}

RealVector finite_difference_gradient(const LabeledDataset& split,
                                      const ParameterState& params, int n) {
    const double h = 1e-6;
    const int d = static_cast<int>(params.w.size());
    const int slots = static_cast<int>(params.alpha.size());
    RealVector g(d + slots);
    ParameterState probe = params;
    auto error_at = [&](const ParameterState& p) {
        return forward(split, p, n).total_error;
    };
    for (int j = 0; j < d; ++j) {
        const double keep = probe.w(j);
        probe.w(j) = keep + h;
        const double plus = error_at(probe);
        probe.w(j) = keep - h;
        const double minus = error_at(probe);
        probe.w(j) = keep;
        g(j) = (plus - minus) / (2.0 * h);
    }
    for (int s = 0; s < slots; ++s) {
        const double keep = probe.alpha(s);
        probe.alpha(s) = keep + h;
        const double plus = error_at(probe);
        probe.alpha(s) = keep - h;
        const double minus = error_at(probe);
        probe.alpha(s) = keep;
        g(d + s) = (plus - minus) / (2.0 * h);
    }
    return g;
}

} // namespace

RealVector gradient(const LabeledDataset& split, const ParameterState& params,
                    int n, GradientMode mode) {
    if (mode == GradientMode::kFiniteDifference) {
        return finite_difference_gradient(split, params, n);
    }
    const auto by_class = rows_by_class(split);
    const auto parameterization = build_parameterization(n);
    return epoch_pass(split, by_class, parameterization, params, n, true).grad;
}

ParameterState initial_parameters(int d, int n, InitScheme scheme,
                                  std::uint64_t seed) {
    ParameterState params;
    params.seed = seed;
    params.w = RealVector::Zero(d);
    params.alpha = RealVector::Zero(n * n - 1);
    if (scheme == InitScheme::kUniformSmall) {
        Rng rng(seed);
        for (int j = 0; j < d; ++j) params.w(j) = rng.uniform(-0.1, 0.1);
        for (int s = 0; s < n * n - 1; ++s) params.alpha(s) = rng.uniform(-0.1, 0.1);
    }
    return params;
}

TrainLog train(const LabeledDataset& split, int n, const TrainConfig& cfg) {
    if (cfg.learning_rate < 0.0 || !std::isfinite(cfg.learning_rate)) {
        throw InvalidInputError("learning_rate must be finite and non-negative");
    }
    if (cfg.max_epochs < 1 || cfg.convergence_window < 1 || cfg.convergence_delta < 0) {
        throw InvalidInputError("invalid training configuration");
    }

    const auto by_class = rows_by_class(split); // also validates class coverage
    const auto parameterization = build_parameterization(n);
    ParameterState params =
        initial_parameters(split.feature_dim, n, cfg.init_scheme, cfg.seed);

    TrainLog log;
    log.records.reserve(cfg.max_epochs);
    const bool analytic = cfg.gradient_mode == GradientMode::kAnalytic;

    for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
        const auto start = std::chrono::steady_clock::now();
        EpochResult pass =
            epoch_pass(split, by_class, parameterization, params, n, analytic);
        if (!analytic) {
            pass.grad = finite_difference_gradient(split, params, n);
        }
        if (!std::isfinite(pass.error)) {
            throw DivergedError("training error is not finite", epoch);
        }
        if (!pass.grad.allFinite()) {
            throw DivergedError("training gradient is not finite", epoch);
        }
        const auto stop = std::chrono::steady_clock::now();
        const double ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
        log.records.push_back({epoch, pass.error, pass.train_accuracy, ms});

        const int window = cfg.convergence_window;
        if (epoch >= window &&
            std::abs(log.records[epoch].error - log.records[epoch - window].error) <
                cfg.convergence_delta) {
            log.converged = true;
            break;
        }
        if (epoch == cfg.max_epochs - 1) break;

        params.w -= cfg.learning_rate * pass.grad.head(split.feature_dim);
        params.alpha -= cfg.learning_rate * pass.grad.tail(parameterization.total_slots);
    }

    log.final_params = std::move(params);
    log.final_params.seed = cfg.seed;
    return log;
}

AccuracyReport evaluate(const LabeledDataset& split, const ParameterState& params,
                        int n) {
    const auto parameterization = build_parameterization(n);
    const ComplexMatrix u = evaluate(parameterization, params.alpha);

    AccuracyReport report;
    report.per_class_percent = RealVector::Zero(split.class_count);
    RealVector class_totals = RealVector::Zero(split.class_count);
    int correct = 0;
    for (int i = 0; i < split.sample_count(); ++i) {
        const ComplexVector psi = phase_encode(split.features.row(i), params.w, n);
        const int predicted = argmax_class(outcome_probabilities(ComplexVector(u * psi)));
        const int label = split.labels[i];
        class_totals(label) += 1.0;
        if (predicted == label) {
            ++correct;
            report.per_class_percent(label) += 1.0;
        }
    }
    for (int k = 0; k < split.class_count; ++k) {
        if (class_totals(k) > 0) {
            report.per_class_percent(k) *= 100.0 / class_totals(k);
        }
    }
    report.percent = 100.0 * correct / split.sample_count();
    return report;
}

} // namespace qunit
