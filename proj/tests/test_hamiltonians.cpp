#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "trotterkit/hamiltonians.hpp"
#include "trotterkit/matrix.hpp"

using namespace trotterkit;

TEST_CASE("parse_pauli") {
    const PauliString p = parse_pauli("0.5*XZY");
    CHECK(p.coefficient == 0.5);
    REQUIRE(p.qubit_count() == 3);
    CHECK(p.letters[0] == PauliLetter::X);
    CHECK(p.letters[1] == PauliLetter::Z);
    CHECK(p.letters[2] == PauliLetter::Y);

    CHECK(parse_pauli("XZ").coefficient == 1.0);
    CHECK(parse_pauli("-1.5*I").coefficient == -1.5);
    CHECK_THROWS_AS(parse_pauli("2*"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pauli("abc*X"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pauli("1*Q"), std::invalid_argument);
}

TEST_CASE("build_diagonal") {
    const ComplexMatrix m = build_diagonal({2.0, -1.0});
    CHECK(m(0, 0) == Complex(2.0, 0.0));
    CHECK(m(1, 1) == Complex(-1.0, 0.0));
    CHECK(m(0, 1) == Complex(0.0, 0.0));

    CHECK(build_diagonal({0.0}).dim() == 1);
    CHECK_THROWS_AS(build_diagonal({}), std::invalid_argument);

    // [1,1,1] is the identity
    CHECK(frobenius_norm(build_diagonal({1.0, 1.0, 1.0}) - ComplexMatrix::identity(3)) == 0.0);
}

TEST_CASE("build_pauli single letters") {
    const ComplexMatrix x = build_pauli(parse_pauli("X"));
    CHECK(x(0, 1) == Complex(1.0, 0.0));
    CHECK(x(1, 0) == Complex(1.0, 0.0));

    const ComplexMatrix y = build_pauli(parse_pauli("0.5*Y"));
    CHECK(y(0, 1) == Complex(0.0, -0.5));
    CHECK(y(1, 0) == Complex(0.0, 0.5));
}

TEST_CASE("build_pauli tensor products") {
    const ComplexMatrix xz = build_pauli(parse_pauli("XZ"));
    CHECK(xz.dim() == 4);
    CHECK(hermitian_check(xz, 1e-14));

    // strings anticommute iff an odd number of positions carry differing
    // non-identity letters: XZ vs ZZ anticommutes, XZ vs ZX commutes
    const ComplexMatrix zz = build_pauli(parse_pauli("ZZ"));
    CHECK(frobenius_norm(matmul(xz, zz) + matmul(zz, xz)) <= 1e-14);
    const ComplexMatrix zx = build_pauli(parse_pauli("ZX"));
    CHECK(frobenius_norm(commutator(xz, zx)) <= 1e-14);
}

TEST_CASE("single-qubit Pauli anticommutation") {
    const char letters[] = {'X', 'Y', 'Z'};
    for (char a : letters)
        for (char b : letters) {
            if (a == b) continue;
            const ComplexMatrix pa = build_pauli(parse_pauli(std::string(1, a)));
            const ComplexMatrix pb = build_pauli(parse_pauli(std::string(1, b)));
            CHECK(frobenius_norm(matmul(pa, pb) + matmul(pb, pa)) == 0.0);
        }
}

TEST_CASE("build_tight_binding") {
    const SplitHamiltonian two = build_tight_binding(2, 1.0, {0.0, 0.0});
    CHECK(frobenius_norm(two.s - build_pauli(parse_pauli("X"))) == 0.0);
    CHECK(frobenius_norm(two.t_op) == 0.0);

    const SplitHamiltonian three = build_tight_binding(3, 1.0, {1.0, 2.0, 3.0});
    CHECK(three.commutator_norm > 0.0);
    // split sums to the assembled matrix
    ComplexMatrix full(3);
    full(0, 1) = full(1, 0) = full(1, 2) = full(2, 1) = 1.0;
    full(0, 0) = 1.0;
    full(1, 1) = 2.0;
    full(2, 2) = 3.0;
    CHECK(frobenius_norm(three.sum() - full) == 0.0);

    CHECK(build_tight_binding(4, 0.0, {1.0, 2.0, 3.0, 4.0}).commutator_norm <= 1e-12);
    CHECK_THROWS_AS(build_tight_binding(3, 1.0, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(build_tight_binding(1, 1.0, {0.0}), std::invalid_argument);
}

TEST_CASE("build_random_hermitian determinism and spread") {
    const ComplexMatrix a1 = build_random_hermitian(6, 99);
    const ComplexMatrix a2 = build_random_hermitian(6, 99);
    CHECK(frobenius_norm(a1 - a2) == 0.0);
    CHECK(hermitian_check(a1, 1e-14));

    // entries bounded by 1 in modulus of each component before symmetrization
    for (const auto& e : a1.data()) {
        CHECK(std::abs(e.real()) <= 1.0);
        CHECK(std::abs(e.imag()) <= 1.0);
    }

    // no collisions across 100 seeds
    std::set<double> norms;
    for (std::uint64_t s = 0; s < 100; ++s) {
        const ComplexMatrix m = build_random_hermitian(4, s);
        CHECK(hermitian_check(m, 1e-14));
        norms.insert(frobenius_norm(m));
    }
    CHECK(norms.size() == 100);
}
