#include "trotterkit/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace trotterkit {

namespace {

double offdiag_norm(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    double acc = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (r != c) acc += std::norm(a(r, c));
    return std::sqrt(acc);
}

}  // namespace

SpectralDecomposition eig_hermitian(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    const double scale = frobenius_norm(a);
    if (!hermitian_check(a, 1e-10 * std::max(scale, 1.0)))
        throw std::invalid_argument("eig_hermitian: input is not Hermitian");

    // Work on the Hermitian average so rounding asymmetry cannot accumulate.
    ComplexMatrix w(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            w(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double threshold = 1e-12 * scale;
    const int max_sweeps = 100;

    double off = offdiag_norm(w);
    int sweep = 0;
    while (off > threshold && sweep < max_sweeps) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = w(p, q);
                const double mag = std::abs(apq);
                if (mag <= threshold / static_cast<double>(n)) continue;

                // Unitary 2x2 rotation annihilating w(p,q). The phase of
                // w(p,q) is folded into s; c stays real.
                const double app = w(p, p).real();
                const double aqq = w(q, q).real();
                const Complex phase = apq / mag;
                const double tau = (aqq - app) / (2.0 * mag);
                const double tsign = tau >= 0.0 ? 1.0 : -1.0;
                const double t = tsign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const Complex s = phase * (t * c);

                // Columns: col_p <- c*col_p - conj(s)*col_q, col_q <- s*col_p + c*col_q
                for (std::size_t r = 0; r < n; ++r) {
                    const Complex wp = w(r, p), wq = w(r, q);
                    w(r, p) = c * wp - std::conj(s) * wq;
                    w(r, q) = s * wp + c * wq;
                }
                for (std::size_t col = 0; col < n; ++col) {
                    const Complex wp = w(p, col), wq = w(q, col);
                    w(p, col) = c * wp - s * wq;
                    w(q, col) = std::conj(s) * wp + c * wq;
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const Complex vp = v(r, p), vq = v(r, q);
                    v(r, p) = c * vp - std::conj(s) * vq;
                    v(r, q) = s * vp + c * vq;
                }
            }
        }
        off = offdiag_norm(w);
        ++sweep;
    }
    if (off > threshold)
        throw std::runtime_error(
            "eig_hermitian: Jacobi sweeps did not converge, off-diagonal residual " +
            std::to_string(off));

    std::vector<double> evals(n);
    for (std::size_t i = 0; i < n; ++i) evals[i] = w(i, i).real();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return evals[i] < evals[j]; });

    SpectralDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = evals[order[k]];
        for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
    }
    return out;
}

}  // namespace trotterkit
