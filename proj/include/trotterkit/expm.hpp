#ifndef TROTTERKIT_EXPM_HPP
#define TROTTERKIT_EXPM_HPP

#include <string>

#include "trotterkit/matrix.hpp"
#include "trotterkit/state.hpp"

namespace trotterkit {

// U(t) = e^{-iHt} together with its provenance. Natural units, hbar = 1.
struct UnitaryOperator {
    ComplexMatrix matrix;
    std::string generator_label;
    double time = 0.0;
};

// e^{-iHt} via spectral decomposition (U e^{-iDt} U^dag). A matrix that is
// diagonal to within 1e-14 off the diagonal is exponentiated entrywise
// without invoking the eigensolver.
UnitaryOperator exact_expm(const ComplexMatrix& h, double t,
                           const std::string& label = "");

// Truncated series sum_{k<terms} A^k/k! with scaling and squaring: A is
// scaled by 2^-m so ||A/2^m||_F <= 0.5, the series is applied at the scaled
// level, then the result is squared m times. Accepts general (non-Hermitian)
// input so it can serve as an independent cross-check for exact_expm.
ComplexMatrix taylor_expm(const ComplexMatrix& a, unsigned terms = 20);

// |psi(t)> = U |psi>.
StateVector evolve_state(const UnitaryOperator& u, const StateVector& psi);

}  // namespace trotterkit

#endif
