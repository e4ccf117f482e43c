#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "trotterkit/eig.hpp"
#include "trotterkit/expm.hpp"
#include "trotterkit/hamiltonians.hpp"
#include "trotterkit/trotter.hpp"

using namespace trotterkit;

namespace {

ComplexMatrix pauli(char l) { return build_pauli(parse_pauli(std::string(1, l))); }

SplitHamiltonian xz_split() { return make_split(pauli('X'), pauli('Z')); }

SplitHamiltonian diag_split(std::uint64_t seed, std::size_t dim) {
    SplitMix64 rng(seed);
    std::vector<double> a(dim), b(dim);
    for (auto& v : a) v = rng.next_symmetric();
    for (auto& v : b) v = rng.next_symmetric();
    return make_split(build_diagonal(a), build_diagonal(b));
}

// Random unitary: eigenbasis of a seeded random Hermitian matrix.
ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
    return eig_hermitian(build_random_hermitian(dim, seed)).eigenvectors;
}

}  // namespace

TEST_CASE("make_split validation") {
    CHECK_THROWS_AS(make_split(pauli('X'), ComplexMatrix::identity(3)),
                    std::invalid_argument);
    ComplexMatrix bad(2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(make_split(bad, pauli('Z')), std::invalid_argument);

    const SplitHamiltonian h = xz_split();
    // ||[X,Z]|| = ||-2iY|| = 2
    CHECK(h.commutator_norm == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(diag_split(3, 4).commutator_norm <= 1e-10);
}

TEST_CASE("trotter_step") {
    const SplitHamiltonian h = xz_split();
    CHECK(frobenius_norm(trotter_step(h, 0.0).matrix - ComplexMatrix::identity(2)) <= 1e-14);

    const SplitHamiltonian sonly = make_split(build_diagonal({1.0, 2.0}), ComplexMatrix::zero(2));
    const double dt = 0.37;
    CHECK(frobenius_norm(trotter_step(sonly, dt).matrix -
                         exact_expm(sonly.s, dt).matrix) <= 1e-13);

    // closed forms: e^{-i dt X} = cos dt I - i sin dt X, e^{-i dt Z} = diag(e^{-i dt}, e^{i dt})
    const double d = 0.1;
    const Complex em = std::exp(Complex(0.0, -d)), ep = std::exp(Complex(0.0, d));
    ComplexMatrix expected(2);
    expected(0, 0) = std::cos(d) * em;
    expected(0, 1) = Complex(0.0, -std::sin(d)) * ep;
    expected(1, 0) = Complex(0.0, -std::sin(d)) * em;
    expected(1, 1) = std::cos(d) * ep;
    CHECK(frobenius_norm(trotter_step(h, d).matrix - expected) <= 1e-13);
}

TEST_CASE("trotter_evolve commuting split is exact") {
    const SplitHamiltonian h = diag_split(17, 5);
    const double t = 1.4;
    const ComplexMatrix exact = exact_expm(h.sum(), t).matrix;
    for (unsigned n : {1, 2, 7, 64})
        CHECK(frobenius_norm(trotter_evolve(h, t, n).matrix - exact) <= 1e-10);
}

TEST_CASE("trotter_evolve n=1 equals a single step") {
    const SplitHamiltonian h = xz_split();
    CHECK(frobenius_norm(trotter_evolve(h, 0.9, 1).matrix -
                         trotter_step(h, 0.9).matrix) <= 1e-14);
    CHECK_THROWS_AS(trotter_evolve(h, 1.0, 0), std::invalid_argument);
}

TEST_CASE("trotter_evolve X/Z at n=64 matches the measured first-order constant") {
    // measured operator-norm error at n=64 is 1.0914e-2; assert with margin
    const SplitHamiltonian h = xz_split();
    const ComplexMatrix diff =
        trotter_evolve(h, 1.0, 64).matrix - exact_expm(h.sum(), 1.0).matrix;
    const double err = operator_2norm(diff);
    CHECK(err <= 1.2e-2);
    CHECK(err >= 1.0e-2);
}

TEST_CASE("linearized_trotter") {
    const SplitHamiltonian h = xz_split();
    const LinearizedResult id = linearized_trotter(h, 0.0, 4);
    CHECK(frobenius_norm(id.matrix - ComplexMatrix::identity(2)) <= 1e-14);

    // commuting diagonals at N = 2^20: entrywise (1+x/N)^N limit
    const SplitHamiltonian d = diag_split(5, 3);
    const LinearizedResult lin = linearized_trotter(d, 0.8, 20);
    CHECK(frobenius_norm(lin.matrix - exact_expm(d.sum(), 0.8).matrix) <= 1e-4);

    // error decays ~1/N for the noncommuting pair
    const ComplexMatrix exact = exact_expm(h.sum(), 1.0).matrix;
    double prev = -1.0;
    for (unsigned m = 6; m <= 14; ++m) {
        const double err = operator_2norm(linearized_trotter(h, 1.0, m).matrix - exact);
        if (prev > 0.0) {
            const double ratio = prev / err;
            CHECK(ratio > 1.6);
            CHECK(ratio < 2.4);
        }
        prev = err;
    }
}

TEST_CASE("defect") {
    const StateVector xi = basis_state(2, 0);
    CHECK(defect(diag_split(9, 2), 0.05, basis_state(2, 1)) <= 1e-10 / 0.05);
    CHECK_THROWS_AS(defect(xz_split(), 0.0, xi), std::invalid_argument);

    const SplitHamiltonian tonly = make_split(pauli('X'), ComplexMatrix::zero(2));
    CHECK(defect(tonly, 0.1, xi) <= 1e-12);

    // first-order defect: values decay monotonically with h, ratio to h bounded
    const SplitHamiltonian h = xz_split();
    double prev = 1e300;
    for (double step : {1e-1, 1e-2, 1e-3, 1e-4}) {
        const double v = defect(h, step, xi);
        CHECK(v < prev);
        CHECK(v / step < 10.0);
        prev = v;
    }
}

TEST_CASE("defect_supremum") {
    const StateVector xi = basis_state(2, 0);
    CHECK(defect_supremum(diag_split(2, 2), 0.01, xi, 1.0) <= 1e-8);

    // samples=1 degenerates to the s=-|t| endpoint
    const SplitHamiltonian h = xz_split();
    const StateVector endpoint = evolve_state(exact_expm(h.sum(), -1.0), xi);
    CHECK(defect_supremum(h, 0.01, xi, 1.0, 1) ==
          doctest::Approx(defect(h, 0.01, endpoint)).epsilon(1e-12));

    CHECK(defect_supremum(h, 1e-2, xi, 1.0) > defect_supremum(h, 1e-3, xi, 1.0));
}

TEST_CASE("generator_residual") {
    const StateVector xi = basis_state(3, 1);
    CHECK(generator_residual(ComplexMatrix::zero(3), 0.01, xi) <= 1e-14);
    CHECK_THROWS_AS(generator_residual(ComplexMatrix::zero(3), 0.0, xi),
                    std::invalid_argument);

    // diagonal case: residual equals the scalar |i(e^{-iE h}-1)/h - E|
    const double e1 = 1.7, step = 0.02;
    const ComplexMatrix h = build_diagonal({0.3, e1, -2.0});
    const Complex scalar = Complex(0.0, 1.0 / step) *
                               (std::exp(Complex(0.0, -e1 * step)) - Complex(1.0, 0.0)) -
                           Complex(e1, 0.0);
    CHECK(generator_residual(h, step, xi) == doctest::Approx(std::abs(scalar)).epsilon(1e-10));
    // leading term is |E|^2 step / 2
    CHECK(std::abs(scalar) == doctest::Approx(e1 * e1 * step / 2.0).epsilon(0.02));

    // halves as step halves
    const ComplexMatrix g = build_random_hermitian(4, 31);
    const StateVector v = basis_state(4, 0);
    const double r1 = generator_residual(g, 1e-2, v);
    const double r2 = generator_residual(g, 5e-3, v);
    CHECK(r2 < r1);
    CHECK(r1 / r2 == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("convergence_study commuting case reports NaN order") {
    const SplitHamiltonian h = diag_split(40, 16);
    const ConvergenceReport r =
        convergence_study(h, 1.0, {1, 2, 7, 64}, ErrorMetric::operator_2norm);
    for (double e : r.errors) CHECK(e <= 1e-10);
    CHECK_FALSE(r.order_valid);
    CHECK(std::isnan(r.fitted_order));
}

TEST_CASE("convergence_study first-order rate for X/Z") {
    const ConvergenceReport r = convergence_study(
        xz_split(), 1.0, {4, 8, 16, 32, 64, 128, 256, 512}, ErrorMetric::operator_2norm);
    CHECK(r.order_valid);
    CHECK(r.fitted_order == doctest::Approx(1.0).epsilon(0.15));
    // doubling n halves the error in the asymptotic regime
    for (std::size_t k = 4; k + 1 < r.errors.size(); ++k)
        CHECK(r.errors[k] / r.errors[k + 1] == doctest::Approx(2.0).epsilon(0.1));

    CHECK_THROWS_AS(convergence_study(xz_split(), 1.0, {}, ErrorMetric::operator_2norm),
                    std::invalid_argument);
    CHECK_THROWS_AS(convergence_study(xz_split(), 1.0, {8, 4}, ErrorMetric::operator_2norm),
                    std::invalid_argument);
    CHECK_THROWS_AS(convergence_study(xz_split(), 1.0, {4, 8}, ErrorMetric::state_vector_norm),
                    std::invalid_argument);
}

TEST_CASE("strong convergence in the state metric") {
    const StateVector xi = basis_state(2, 0);
    const ConvergenceReport r =
        convergence_study(xz_split(), 1.0, {4, 8, 16, 32, 64, 128, 256, 512},
                          ErrorMetric::state_vector_norm, xi);
    for (std::size_t k = 0; k + 1 < r.errors.size(); ++k)
        CHECK(r.errors[k + 1] <= r.errors[k] * 1.05);
    CHECK(r.errors.back() < 1e-2);
}

TEST_CASE("telescoping identity for random unitary pairs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t dim = 2 + seed % 7;
        const unsigned n = 1 + static_cast<unsigned>(seed % 6);
        const ComplexMatrix a = random_unitary(dim, 100 + seed);
        const ComplexMatrix b = random_unitary(dim, 200 + seed);

        ComplexMatrix an = ComplexMatrix::identity(dim);
        ComplexMatrix bn = ComplexMatrix::identity(dim);
        for (unsigned k = 0; k < n; ++k) {
            an = matmul(an, a);
            bn = matmul(bn, b);
        }
        // sum_j A^j (A-B) B^{n-1-j}
        ComplexMatrix sum = ComplexMatrix::zero(dim);
        ComplexMatrix aj = ComplexMatrix::identity(dim);
        for (unsigned j = 0; j < n; ++j) {
            ComplexMatrix bpow = ComplexMatrix::identity(dim);
            for (unsigned k = 0; k + j + 1 < n; ++k) bpow = matmul(bpow, b);
            sum += matmul(matmul(aj, a - b), bpow);
            aj = matmul(aj, a);
        }
        CHECK(frobenius_norm(an - bn - sum) <= 1e-12 * static_cast<double>(n));
    }
}

TEST_CASE("state error is bounded by |t| times the defect supremum") {
    const SplitHamiltonian h = xz_split();
    const StateVector xi = basis_state(2, 0);
    const double t = 1.0;
    const ConvergenceReport r = convergence_study(h, t, {4, 16, 64, 256},
                                                  ErrorMetric::state_vector_norm, xi);
    for (std::size_t k = 0; k < r.step_counts.size(); ++k) {
        const double step = t / static_cast<double>(r.step_counts[k]);
        const double bound = std::abs(t) * defect_supremum(h, step, xi, t) + 1e-9;
        CHECK(r.errors[k] <= bound);
    }
}
