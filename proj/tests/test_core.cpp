#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qunit/core.hpp"
#include "qunit/errors.hpp"
#include "test_helpers.hpp"

using namespace qunit;
using test_helpers::random_density;
using test_helpers::random_state;
using test_helpers::random_unitary;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("generalized Hadamard reduces to the standard Hadamard at N=2") {
    const ComplexMatrix h = generalized_hadamard(2);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(h(0, 0) - Complex(r, 0)) < 1e-12);
    CHECK(std::abs(h(0, 1) - Complex(r, 0)) < 1e-12);
    CHECK(std::abs(h(1, 0) - Complex(r, 0)) < 1e-12);
    CHECK(std::abs(h(1, 1) - Complex(-r, 0)) < 1e-12);

    ComplexVector zero = ComplexVector::Zero(2);
    zero(0) = 1.0;
    const ComplexVector plus = apply_unitary(h, zero);
    CHECK(std::abs(plus(0) - Complex(r, 0)) < 1e-12);
    CHECK(std::abs(plus(1) - Complex(r, 0)) < 1e-12);
}

TEST_CASE("generalized Hadamard column phases at N=3") {
    // column j=1: entries e^{i 2πk/3}/√3 for k = 0..2, evaluated by hand
    const ComplexMatrix h = generalized_hadamard(3);
    const double r = 1.0 / std::sqrt(3.0);
    CHECK(std::abs(h(0, 1) - Complex(r, 0)) < 1e-12);
    CHECK(std::abs(h(1, 1) - std::polar(r, 2 * kPi / 3)) < 1e-12);
    CHECK(std::abs(h(2, 1) - std::polar(r, 4 * kPi / 3)) < 1e-12);
}

TEST_CASE("generalized Hadamard is unitary for N up to 8") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(unitarity_residual(generalized_hadamard(n)) <= kStructuralTol);
    }
}

TEST_CASE("dimension below 2 is rejected") {
    CHECK_THROWS_AS(generalized_hadamard(1), DimensionError);
    CHECK_THROWS_AS(gell_mann_basis(1), DimensionError);
    CHECK_THROWS_AS(spin_diagonal(0), DimensionError);
}

TEST_CASE("spin diagonal is centered with unit steps") {
    for (int n = 2; n <= 6; ++n) {
        const RealVector s = spin_diagonal(n);
        CHECK(std::abs(s.sum()) < 1e-12);
        for (int k = 1; k < n; ++k) {
            CHECK(s(k) - s(k - 1) == doctest::Approx(1.0).epsilon(1e-14));
        }
        CHECK(s(0) == doctest::Approx(-(n - 1) / 2.0));
    }
}

TEST_CASE("phase encoding with zero weights is the uniform superposition") {
    RealVector x(3);
    x << 1.5, -2.0, 7.0;
    const RealVector w = RealVector::Zero(3);
    const ComplexVector psi = phase_encode(x, w, 2);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(psi(0) - Complex(r, 0)) < 1e-12);
    CHECK(std::abs(psi(1) - Complex(r, 0)) < 1e-12);
}

TEST_CASE("phase encoding at theta = pi, N = 2") {
    // exp(iπ diag(−1/2, 1/2)) by hand: amplitudes (−i, i)/√2
    RealVector x(1), w(1);
    x << kPi;
    w << 1.0;
    const ComplexVector psi = phase_encode(x, w, 2);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(psi(0) - Complex(0, -r)) < 1e-12);
    CHECK(std::abs(psi(1) - Complex(0, r)) < 1e-12);
}

TEST_CASE("phase encoding depends on x only through theta (N odd)") {
    RealVector x1(1), x2(1), w(1);
    x1 << 0.75;
    x2 << 0.75 + 2 * kPi; // same theta mod 2π
    w << 1.0;
    const ComplexVector a = phase_encode(x1, w, 3);
    const ComplexVector b = phase_encode(x2, w, 3);
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("phase encoding is invariant under joint permutation of (x_j, w_j)") {
    Rng rng(11);
    RealVector x = test_helpers::random_real_vector(rng, 6, -2, 2);
    RealVector w = test_helpers::random_real_vector(rng, 6, -1, 1);
    RealVector xp(6), wp(6);
    const int perm[6] = {4, 0, 5, 2, 1, 3};
    for (int j = 0; j < 6; ++j) {
        xp(j) = x(perm[j]);
        wp(j) = w(perm[j]);
    }
    const ComplexVector a = phase_encode(x, w, 3);
    const ComplexVector b = phase_encode(xp, wp, 3);
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("phase encoding output probabilities are always uniform") {
    Rng rng(42);
    for (int n : {2, 3, 4}) {
        for (int trial = 0; trial < 50; ++trial) {
            const RealVector x = test_helpers::random_real_vector(rng, 5, -10, 10);
            const RealVector w = test_helpers::random_real_vector(rng, 5, -3, 3);
            const RealVector p = outcome_probabilities(phase_encode(x, w, n));
            for (int k = 0; k < n; ++k) {
                CHECK(p(k) == doctest::Approx(1.0 / n).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("phase encoding validates inputs") {
    RealVector x(2), w(3);
    x << 1, 2;
    w << 1, 2, 3;
    CHECK_THROWS_AS(phase_encode(x, w, 2), DimensionError);

    RealVector bad(2), ok(2);
    bad << std::nan(""), 1.0;
    ok << 1.0, 1.0;
    CHECK_THROWS_AS(phase_encode(bad, ok, 2), InvalidInputError);
    CHECK_THROWS_AS(phase_encode(ok, bad, 2), InvalidInputError);
}

TEST_CASE("Gell-Mann basis at N=2 is the Pauli matrices") {
    const auto basis = gell_mann_basis(2);
    REQUIRE(basis.size() == 3);
    CHECK(std::abs(basis[0].matrix(0, 1) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(basis[0].matrix(1, 0) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(basis[1].matrix(0, 1) - Complex(0, -1)) < 1e-15);
    CHECK(std::abs(basis[1].matrix(1, 0) - Complex(0, 1)) < 1e-15);
    CHECK(std::abs(basis[2].matrix(0, 0) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(basis[2].matrix(1, 1) - Complex(-1, 0)) < 1e-15);
}

TEST_CASE("Gell-Mann basis at N=3 has 8 generators ending in diag(1,1,-2)/sqrt3") {
    const auto basis = gell_mann_basis(3);
    REQUIRE(basis.size() == 8);
    const double r = 1.0 / std::sqrt(3.0);
    const ComplexMatrix& last = basis[7].matrix;
    CHECK(std::abs(last(0, 0) - Complex(r, 0)) < 1e-12);
    CHECK(std::abs(last(1, 1) - Complex(r, 0)) < 1e-12);
    CHECK(std::abs(last(2, 2) - Complex(-2 * r, 0)) < 1e-12);
}

TEST_CASE("Gell-Mann generators are Hermitian, traceless, orthonormal") {
    for (int n : {2, 3, 4, 5}) {
        const auto basis = gell_mann_basis(n);
        REQUIRE(static_cast<int>(basis.size()) == n * n - 1);
        double trace_sum = 0.0;
        for (const auto& g : basis) {
            CHECK((g.matrix - g.matrix.adjoint()).cwiseAbs().maxCoeff() == 0.0);
            CHECK(std::abs(g.matrix.trace()) < 1e-12);
            trace_sum += g.matrix.trace().real();
        }
        CHECK(std::abs(trace_sum) < 1e-12);
        for (const auto& a : basis) {
            for (const auto& b : basis) {
                const double expected = a.index == b.index ? 2.0 : 0.0;
                const Complex product = (a.matrix * b.matrix).trace();
                CHECK(std::abs(product - Complex(expected, 0)) < 1e-10);
            }
        }
    }
}

TEST_CASE("computational projectors sum to identity and are orthogonal") {
    for (int n : {2, 3, 4}) {
        ComplexMatrix sum = ComplexMatrix::Zero(n, n);
        for (int a = 0; a < n; ++a) {
            sum += computational_projector(n, a);
            for (int b = 0; b < n; ++b) {
                const ComplexMatrix product =
                    computational_projector(n, a) * computational_projector(n, b);
                if (a != b) CHECK(product.cwiseAbs().maxCoeff() == 0.0);
            }
        }
        CHECK((sum - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("apply_unitary with the identity leaves inputs unchanged") {
    Rng rng(3);
    const ComplexMatrix eye = ComplexMatrix::Identity(3, 3);
    const ComplexVector psi = random_state(rng, 3);
    CHECK((apply_unitary(eye, psi) - psi).cwiseAbs().maxCoeff() < 1e-15);
    const ComplexMatrix rho = random_density(rng, 3);
    CHECK((apply_unitary(eye, rho) - rho).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("state and density-matrix transport agree on pure states") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix u = random_unitary(rng, 3);
        const ComplexVector psi = random_state(rng, 3);
        const ComplexMatrix rho = psi * psi.adjoint();
        const ComplexVector moved = apply_unitary(u, psi);
        const ComplexMatrix via_rho = apply_unitary(u, rho);
        const ComplexMatrix via_state = moved * moved.adjoint();
        CHECK((via_rho - via_state).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("Hadamard conjugation of |0><0| gives the flat matrix") {
    const ComplexMatrix h = generalized_hadamard(2);
    ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
    rho(0, 0) = 1.0;
    const ComplexMatrix moved = apply_unitary(h, rho);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            CHECK(std::abs(moved(i, j) - Complex(0.5, 0)) < 1e-12);
        }
    }
}

TEST_CASE("apply_unitary preserves norm and trace") {
    Rng rng(19);
    for (int n : {2, 3, 4}) {
        const ComplexMatrix u = random_unitary(rng, n);
        const ComplexVector psi = random_state(rng, n);
        CHECK(std::abs(apply_unitary(u, psi).norm() - 1.0) < kStructuralTol);
        const ComplexMatrix rho = random_density(rng, n);
        CHECK(std::abs(apply_unitary(u, rho).trace().real() - 1.0) < kStructuralTol);
    }
}

TEST_CASE("apply_unitary rejects mismatched dimensions") {
    const ComplexMatrix u = generalized_hadamard(2);
    ComplexVector psi = ComplexVector::Zero(3);
    psi(0) = 1.0;
    CHECK_THROWS_AS(apply_unitary(u, psi), DimensionError);
}

TEST_CASE("outcome probabilities of basis, uniform, and mixed states") {
    ComplexVector zero = ComplexVector::Zero(4);
    zero(0) = 1.0;
    const RealVector p0 = outcome_probabilities(zero);
    CHECK(p0(0) == doctest::Approx(1.0));
    CHECK(p0.tail(3).cwiseAbs().maxCoeff() == 0.0);

    for (int n : {2, 3, 5}) {
        ComplexVector e0 = ComplexVector::Zero(n);
        e0(0) = 1.0;
        const RealVector uniform =
            outcome_probabilities(apply_unitary(generalized_hadamard(n), e0));
        const ComplexMatrix mixed = ComplexMatrix::Identity(n, n) / double(n);
        const RealVector mixed_p = outcome_probabilities(mixed);
        for (int k = 0; k < n; ++k) {
            CHECK(uniform(k) == doctest::Approx(1.0 / n).epsilon(1e-10));
            CHECK(mixed_p(k) == doctest::Approx(1.0 / n).epsilon(1e-12));
        }
    }
}

TEST_CASE("probabilities remain normalized under random circuits") {
    Rng rng(123);
    for (int n : {2, 3, 4}) {
        for (int trial = 0; trial < 200; ++trial) {
            const ComplexMatrix u = random_unitary(rng, n);
            const RealVector p =
                outcome_probabilities(apply_unitary(u, random_state(rng, n)));
            CHECK(std::abs(p.sum() - 1.0) < kStructuralTol);
            CHECK(p.minCoeff() > -kStructuralTol);
            CHECK(p.maxCoeff() < 1.0 + kStructuralTol);
        }
    }
}

TEST_CASE("is_density_matrix accepts ensembles and rejects junk") {
    Rng rng(5);
    CHECK(is_density_matrix(random_density(rng, 3)));
    ComplexMatrix not_unit_trace = ComplexMatrix::Identity(3, 3);
    CHECK_FALSE(is_density_matrix(not_unit_trace));
    ComplexMatrix not_hermitian = ComplexMatrix::Zero(2, 2);
    not_hermitian(0, 1) = 1.0;
    not_hermitian(0, 0) = 1.0;
    CHECK_FALSE(is_density_matrix(not_hermitian));
}
