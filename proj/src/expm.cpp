#include "trotterkit/expm.hpp"

#include <cmath>
#include <stdexcept>

#include "trotterkit/eig.hpp"

namespace trotterkit {

namespace {

bool is_diagonal(const ComplexMatrix& a, double tol) {
    const std::size_t n = a.dim();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (r != c && std::abs(a(r, c)) > tol) return false;
    return true;
}

}  // namespace

UnitaryOperator exact_expm(const ComplexMatrix& h, double t, const std::string& label) {
    if (!std::isfinite(t)) throw std::invalid_argument("exact_expm: non-finite time");
    const std::size_t n = h.dim();
    const double scale = frobenius_norm(h);
    if (!hermitian_check(h, 1e-10 * std::max(scale, 1.0)))
        throw std::invalid_argument("exact_expm: generator is not Hermitian");

    UnitaryOperator out;
    out.generator_label = label;
    out.time = t;

    if (is_diagonal(h, 1e-14)) {
        // Diagonal fast path: exponentiate entries directly.
        out.matrix = ComplexMatrix(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double e = h(i, i).real();
            out.matrix(i, i) = std::exp(Complex(0.0, -e * t));
        }
        return out;
    }

    const SpectralDecomposition d = eig_hermitian(h);
    ComplexMatrix phases(n);
    for (std::size_t i = 0; i < n; ++i)
        phases(i, i) = std::exp(Complex(0.0, -d.eigenvalues[i] * t));
    out.matrix = matmul(matmul(d.eigenvectors, phases), d.eigenvectors.adjoint());
    return out;
}

ComplexMatrix taylor_expm(const ComplexMatrix& a, unsigned terms) {
    if (terms < 1) throw std::invalid_argument("taylor_expm: terms must be >= 1");
    const std::size_t n = a.dim();
    const double norm = frobenius_norm(a);

    // m squarings so the scaled norm is at most 0.5.
    unsigned m = 0;
    if (norm > 0.5) m = static_cast<unsigned>(std::ceil(std::log2(norm / 0.5)));

    const double factor = std::ldexp(1.0, -static_cast<int>(m));
    ComplexMatrix scaled = a;
    scaled *= factor;

    ComplexMatrix sum = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (unsigned k = 1; k < terms; ++k) {
        term = matmul(term, scaled);
        term *= Complex(1.0 / static_cast<double>(k), 0.0);
        sum += term;
    }
    for (unsigned k = 0; k < m; ++k) sum = matmul(sum, sum);
    if (!sum.all_finite()) throw std::runtime_error("taylor_expm: overflow in entries");
    return sum;
}

StateVector evolve_state(const UnitaryOperator& u, const StateVector& psi) {
    if (u.matrix.dim() != psi.dim())
        throw std::invalid_argument("evolve_state: dimension mismatch");
    StateVector out;
    out.amplitudes = mat_vec(u.matrix, psi.amplitudes);
    return out;
}

}  // namespace trotterkit
