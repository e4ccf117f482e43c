#ifndef TROTTERKIT_SCHRODINGER_HPP
#define TROTTERKIT_SCHRODINGER_HPP

#include <vector>

#include "trotterkit/matrix.hpp"

namespace trotterkit {

// Periodic 1D grid for H = p^2/2m + V(x). `points` must be a power of two
// (radix-2 transform).
struct GridSpec {
    std::size_t points = 0;
    double x_min = 0.0;
    double x_max = 0.0;
    double mass = 1.0;

    double spacing() const { return (x_max - x_min) / static_cast<double>(points); }
    double length() const { return x_max - x_min; }
    double x(std::size_t j) const { return x_min + static_cast<double>(j) * spacing(); }
    // Standard FFT wavenumber ordering: frequencies 0..N/2-1 then -N/2..-1,
    // k_j = 2*pi*f_j / L. Negative frequencies live in the upper half.
    double wavenumber(std::size_t j) const;
};

GridSpec make_grid(std::size_t points, double x_min, double x_max, double mass = 1.0);

// Grid wavefunction, normalized so sum |psi_j|^2 * spacing = 1.
struct WaveFunction {
    GridSpec grid;
    std::vector<Complex> values;
};

// In-place radix-2 decimation-in-time transform. Forward is unnormalized;
// the inverse divides by the length. Throws on non-power-of-two input.
void fft(std::vector<Complex>& values);
void ifft(std::vector<Complex>& values);

// psi(x) ~ exp(-(x-x0)^2/(4 sigma^2) + i p0 x), normalized on the grid.
WaveFunction gaussian_packet(const GridSpec& grid, double x0, double sigma, double p0);

// Samples V(x_j). The "linear" preset is V(x) = x.
std::vector<double> linear_potential(const GridSpec& grid);

// e^{-i dt p^2/2m} applied in momentum space.
WaveFunction kinetic_step(const WaveFunction& psi, double dt);

// Pointwise phase e^{-i dt V(x_j)}; |psi_j| unchanged exactly.
WaveFunction potential_step(const WaveFunction& psi, const std::vector<double>& v, double dt);

// n_steps repetitions of kinetic_step(dt) o potential_step(dt), dt = t/n_steps.
// Potential acts first within each step, matching the S-then-T operator
// product applied to a column vector with S = kinetic.
WaveFunction split_step_evolve(const WaveFunction& psi, const std::vector<double>& v,
                               double t, unsigned n_steps);

struct Observables {
    double norm = 0.0;
    double mean_x = 0.0;
    double mean_p = 0.0;
    double energy_kinetic = 0.0;
};

Observables observables(const WaveFunction& psi);

// Dense matrix of the spectral kinetic operator U_dft^dag diag(k^2/2m) U_dft,
// for cross-checking the grid solver against the matrix formulas.
ComplexMatrix kinetic_matrix(const GridSpec& grid);

}  // namespace trotterkit

#endif
