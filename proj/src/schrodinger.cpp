#include "trotterkit/schrodinger.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace trotterkit {

namespace {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

double GridSpec::wavenumber(std::size_t j) const {
    const auto n = static_cast<std::ptrdiff_t>(points);
    auto f = static_cast<std::ptrdiff_t>(j);
    if (f >= n / 2) f -= n;
    return 2.0 * std::numbers::pi * static_cast<double>(f) / length();
}

GridSpec make_grid(std::size_t points, double x_min, double x_max, double mass) {
    if (!is_power_of_two(points))
        throw std::invalid_argument("make_grid: points must be a power of two");
    if (!(x_max > x_min)) throw std::invalid_argument("make_grid: x_max must exceed x_min");
    if (!(mass > 0.0)) throw std::invalid_argument("make_grid: mass must be positive");
    return GridSpec{points, x_min, x_max, mass};
}

void fft(std::vector<Complex>& values) {
    const std::size_t n = values.size();
    if (!is_power_of_two(n)) throw std::invalid_argument("fft: length must be a power of two");

    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(values[i], values[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        const Complex wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            Complex w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Complex u = values[i + k];
                const Complex v = values[i + k + len / 2] * w;
                values[i + k] = u + v;
                values[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

void ifft(std::vector<Complex>& values) {
    for (auto& v : values) v = std::conj(v);
    fft(values);
    const double inv = 1.0 / static_cast<double>(values.size());
    for (auto& v : values) v = std::conj(v) * inv;
}

WaveFunction gaussian_packet(const GridSpec& grid, double x0, double sigma, double p0) {
    if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_packet: sigma must be positive");
    WaveFunction psi{grid, std::vector<Complex>(grid.points)};
    for (std::size_t j = 0; j < grid.points; ++j) {
        const double x = grid.x(j);
        const double env = std::exp(-(x - x0) * (x - x0) / (4.0 * sigma * sigma));
        psi.values[j] = env * std::exp(Complex(0.0, p0 * x));
    }
    double nrm2 = 0.0;
    for (const auto& v : psi.values) nrm2 += std::norm(v);
    nrm2 *= grid.spacing();
    const double inv = 1.0 / std::sqrt(nrm2);
    for (auto& v : psi.values) v *= inv;
    return psi;
}

std::vector<double> linear_potential(const GridSpec& grid) {
    std::vector<double> v(grid.points);
    for (std::size_t j = 0; j < grid.points; ++j) v[j] = grid.x(j);
    return v;
}

WaveFunction kinetic_step(const WaveFunction& psi, double dt) {
    WaveFunction out = psi;
    fft(out.values);
    const double half_inv_mass = 0.5 / psi.grid.mass;
    for (std::size_t j = 0; j < out.values.size(); ++j) {
        const double k = psi.grid.wavenumber(j);
        out.values[j] *= std::exp(Complex(0.0, -dt * k * k * half_inv_mass));
    }
    ifft(out.values);
    return out;
}

WaveFunction potential_step(const WaveFunction& psi, const std::vector<double>& v, double dt) {
    if (v.size() != psi.values.size())
        throw std::invalid_argument("potential_step: potential length mismatch");
    WaveFunction out = psi;
    for (std::size_t j = 0; j < out.values.size(); ++j)
        out.values[j] *= std::exp(Complex(0.0, -dt * v[j]));
    return out;
}

WaveFunction split_step_evolve(const WaveFunction& psi, const std::vector<double>& v,
                               double t, unsigned n_steps) {
    if (n_steps < 1) throw std::invalid_argument("split_step_evolve: n_steps must be >= 1");
    const double dt = t / static_cast<double>(n_steps);
    WaveFunction out = psi;
    for (unsigned s = 0; s < n_steps; ++s) {
        out = potential_step(out, v, dt);
        out = kinetic_step(out, dt);
    }
    return out;
}

Observables observables(const WaveFunction& psi) {
    const GridSpec& g = psi.grid;
    const double dx = g.spacing();
    Observables obs;
    for (std::size_t j = 0; j < g.points; ++j) {
        const double density = std::norm(psi.values[j]);
        obs.norm += density;
        obs.mean_x += g.x(j) * density;
    }
    obs.norm *= dx;
    obs.mean_x *= dx;

    // <p> and <p^2/2m> via the spectral derivative.
    std::vector<Complex> hat = psi.values;
    fft(hat);
    std::vector<Complex> p_psi(g.points), k_psi(g.points);
    const double half_inv_mass = 0.5 / g.mass;
    for (std::size_t j = 0; j < g.points; ++j) {
        const double k = g.wavenumber(j);
        p_psi[j] = k * hat[j];
        k_psi[j] = k * k * half_inv_mass * hat[j];
    }
    ifft(p_psi);
    ifft(k_psi);
    for (std::size_t j = 0; j < g.points; ++j) {
        obs.mean_p += (std::conj(psi.values[j]) * p_psi[j]).real();
        obs.energy_kinetic += (std::conj(psi.values[j]) * k_psi[j]).real();
    }
    obs.mean_p *= dx;
    obs.energy_kinetic *= dx;
    return obs;
}

ComplexMatrix kinetic_matrix(const GridSpec& grid) {
    // F^dag diag(k^2/2m) F / N with F the unnormalized forward DFT.
    const std::size_t n = grid.points;
    ComplexMatrix out(n);
    const double half_inv_mass = 0.5 / grid.mass;
    const double ang0 = -2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Complex acc(0.0, 0.0);
            for (std::size_t m = 0; m < n; ++m) {
                const double k = grid.wavenumber(m);
                // conj(F_{mr}) * k^2/2m * F_{mc}
                const double phase = ang0 * static_cast<double>(m) *
                                     (static_cast<double>(c) - static_cast<double>(r));
                acc += k * k * half_inv_mass * Complex(std::cos(phase), std::sin(phase));
            }
            out(r, c) = acc / static_cast<double>(n);
        }
    }
    // Symmetrize away the last bits of rounding asymmetry.
    ComplexMatrix herm(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            herm(r, c) = 0.5 * (out(r, c) + std::conj(out(c, r)));
    return herm;
}

}  // namespace trotterkit
