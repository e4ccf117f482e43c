#ifndef TROTTERKIT_HAMILTONIANS_HPP
#define TROTTERKIT_HAMILTONIANS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "trotterkit/matrix.hpp"
#include "trotterkit/trotter.hpp"

namespace trotterkit {

enum class PauliLetter { I, X, Y, Z };

// coefficient * tensor product of single-qubit Paulis. Real coefficient
// keeps the materialized matrix Hermitian.
struct PauliString {
    std::vector<PauliLetter> letters;
    double coefficient = 1.0;

    std::size_t qubit_count() const { return letters.size(); }
};

// Text syntax: coefficient "*" letters, e.g. "0.5*XZY". A bare letter string
// ("XZ") means coefficient 1.
PauliString parse_pauli(const std::string& text);

ComplexMatrix build_diagonal(const std::vector<double>& energies);

ComplexMatrix build_pauli(const PauliString& p);

// S = hopping * (nearest-neighbor symmetric hop matrix, open boundary),
// T = diag(onsite).
SplitHamiltonian build_tight_binding(unsigned sites, double hopping,
                                     const std::vector<double>& onsite);

// (G + G^dag)/2 with G entries i.i.d. uniform on [-1,1] (real and imaginary
// parts) from splitmix64 keyed by (dim, seed); deterministic and portable.
ComplexMatrix build_random_hermitian(std::size_t dim, std::uint64_t seed);

// splitmix64 stream, exposed so tests and the CLI draw from the same source.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    // uniform double in [0, 1) from the high 53 bits
    double next_unit();
    // uniform double in [-1, 1)
    double next_symmetric() { return 2.0 * next_unit() - 1.0; }
};

}  // namespace trotterkit

#endif
