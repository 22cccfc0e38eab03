#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qunit/core.hpp"
#include "qunit/errors.hpp"
#include "qunit/euler.hpp"
#include "test_helpers.hpp"

using namespace qunit;

namespace {

constexpr double kPi = std::numbers::pi;

int expected_factor_count(int n) {
    // f(2) = 3, f(N) = 2(N−1) + f(N−1) + 1
    int f = 3;
    for (int k = 3; k <= n; ++k) f = 2 * (k - 1) + f + 1;
    return f;
}

RealVector finite_difference_slot(const EulerParameterization& p,
                                  const RealVector& angles, int slot,
                                  ComplexMatrix& out) {
    const double h = 1e-6;
    RealVector plus = angles, minus = angles;
    plus(slot) += h;
    minus(slot) -= h;
    out = (evaluate(p, plus) - evaluate(p, minus)) / (2.0 * h);
    return angles;
}

} // namespace

TEST_CASE("N=2 factor list matches the lambda3, lambda2, lambda3 expansion") {
    const auto p = build_parameterization(2);
    REQUIRE(p.factors.size() == 3);
    CHECK(p.factors[0].generator_index == 3);
    CHECK(p.factors[1].generator_index == 2);
    CHECK(p.factors[2].generator_index == 3);
    CHECK(p.factors[0].parameter_slot == 0);
    CHECK(p.factors[1].parameter_slot == 1);
    CHECK(p.factors[2].parameter_slot == 2);
    CHECK(p.total_slots == 3);
}

TEST_CASE("slot and factor counts follow the recursion") {
    for (int n = 2; n <= 5; ++n) {
        const auto p = build_parameterization(n);
        CHECK(p.total_slots == n * n - 1);
        CHECK(static_cast<int>(p.factors.size()) == expected_factor_count(n));
        // every slot is used
        std::vector<int> used(p.total_slots, 0);
        for (const auto& f : p.factors) ++used[f.parameter_slot];
        for (int count : used) CHECK(count >= 1);
    }
    CHECK(build_parameterization(4).total_slots == 15);
    CHECK_THROWS_AS(build_parameterization(1), DimensionError);
}

TEST_CASE("zero angles give the identity") {
    for (int n : {2, 3, 4}) {
        const auto p = build_parameterization(n);
        const ComplexMatrix u = evaluate(p, RealVector::Zero(p.total_slots));
        CHECK((u - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("N=2 pure lambda2 rotation at pi/2") {
    // exp(i λ2 π/2) = cos(π/2) I + i sin(π/2) λ2 = [[0, 1], [−1, 0]]
    const auto p = build_parameterization(2);
    RealVector angles(3);
    angles << 0.0, kPi / 2.0, 0.0;
    const ComplexMatrix u = evaluate(p, angles);
    CHECK(std::abs(u(0, 0)) < 1e-12);
    CHECK(std::abs(u(0, 1) - Complex(1, 0)) < 1e-12);
    CHECK(std::abs(u(1, 0) - Complex(-1, 0)) < 1e-12);
    CHECK(std::abs(u(1, 1)) < 1e-12);
}

TEST_CASE("N=2 diagonal factors compose by angle addition") {
    const auto p = build_parameterization(2);
    RealVector angles(3);
    angles << 0.35, 0.0, -1.2;
    const ComplexMatrix u = evaluate(p, angles);
    const double phase = 0.35 + (-1.2);
    CHECK(std::abs(u(0, 0) - std::polar(1.0, phase)) < 1e-12);
    CHECK(std::abs(u(1, 1) - std::polar(1.0, -phase)) < 1e-12);
    CHECK(std::abs(u(0, 1)) < 1e-15);
    CHECK(std::abs(u(1, 0)) < 1e-15);
}

TEST_CASE("evaluate rejects angle vectors of the wrong length") {
    const auto p = build_parameterization(3);
    CHECK_THROWS_AS(evaluate(p, RealVector::Zero(5)), DimensionError);
    CHECK_THROWS_AS(evaluate_with_derivatives(p, RealVector::Zero(5)), DimensionError);
}

TEST_CASE("random angle vectors give unitaries with unit determinant") {
    Rng rng(77);
    for (int n : {2, 3, 4}) {
        const auto p = build_parameterization(n);
        for (int trial = 0; trial < 200; ++trial) {
            const RealVector angles =
                test_helpers::random_real_vector(rng, p.total_slots, -kPi, kPi);
            const ComplexMatrix u = evaluate(p, angles);
            CHECK(unitarity_residual(u) <= kStructuralTol);
            CHECK(std::abs(u.determinant() - Complex(1, 0)) <= kDetTol);
        }
    }
}

TEST_CASE("derivative at zero angles is i times the generator") {
    const auto p = build_parameterization(2);
    const auto eval = evaluate_with_derivatives(p, RealVector::Zero(3));
    const ComplexMatrix expected = Complex(0, 1) * gell_mann_matrix(2, 2);
    CHECK((eval.slot_derivatives[1] - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("analytic slot derivatives match central finite differences") {
    Rng rng(99);
    for (int n : {2, 3}) {
        const auto p = build_parameterization(n);
        for (int trial = 0; trial < 25; ++trial) {
            const RealVector angles =
                test_helpers::random_real_vector(rng, p.total_slots, -2.0, 2.0);
            const auto eval = evaluate_with_derivatives(p, angles);
            CHECK((eval.unitary - evaluate(p, angles)).cwiseAbs().maxCoeff() < 1e-14);
            for (int slot = 0; slot < p.total_slots; ++slot) {
                ComplexMatrix fd;
                finite_difference_slot(p, angles, slot, fd);
                CHECK((eval.slot_derivatives[slot] - fd).cwiseAbs().maxCoeff() < 1e-6);
            }
        }
    }
}

TEST_CASE("every SU(2) element is reachable: closed-form angle fit") {
    // U(α) = [[e^{i(α1+α3)}cos α2, e^{i(α1−α3)}sin α2], [−e^{−i(α1−α3)}sin α2,
    // e^{−i(α1+α3)}cos α2]], so angles can be read off any SU(2) matrix.
    Rng rng(2024);
    const auto p = build_parameterization(2);
    for (int trial = 0; trial < 100; ++trial) {
        ComplexMatrix target = test_helpers::random_unitary(rng, 2);
        target /= std::sqrt(target.determinant());
        const Complex a = target(0, 0);
        const Complex b = target(0, 1);
        const double alpha2 = std::atan2(std::abs(b), std::abs(a));
        double sum = 0.0, diff = 0.0; // α1+α3 and α1−α3
        if (std::abs(a) > 1e-12) sum = std::arg(a);
        if (std::abs(b) > 1e-12) diff = std::arg(b);
        RealVector angles(3);
        angles << (sum + diff) / 2.0, alpha2, (sum - diff) / 2.0;
        const ComplexMatrix fit = evaluate(p, angles);
        CHECK((fit - target).cwiseAbs().maxCoeff() <= 1e-6);
    }
}
