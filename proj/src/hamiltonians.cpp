#include "trotterkit/hamiltonians.hpp"

#include <cmath>
#include <stdexcept>

namespace trotterkit {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

PauliString parse_pauli(const std::string& text) {
    PauliString out;
    std::string letters = text;
    const auto star = text.find('*');
    if (star != std::string::npos) {
        const std::string coeff = text.substr(0, star);
        letters = text.substr(star + 1);
        try {
            std::size_t used = 0;
            out.coefficient = std::stod(coeff, &used);
            if (used != coeff.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_pauli: bad coefficient in '" + text + "'");
        }
    }
    if (letters.empty())
        throw std::invalid_argument("parse_pauli: empty letter string in '" + text + "'");
    for (char ch : letters) {
        switch (ch) {
            case 'I': out.letters.push_back(PauliLetter::I); break;
            case 'X': out.letters.push_back(PauliLetter::X); break;
            case 'Y': out.letters.push_back(PauliLetter::Y); break;
            case 'Z': out.letters.push_back(PauliLetter::Z); break;
            default:
                throw std::invalid_argument(std::string("parse_pauli: bad letter '") + ch + "'");
        }
    }
    return out;
}

ComplexMatrix build_diagonal(const std::vector<double>& energies) {
    if (energies.empty()) throw std::invalid_argument("build_diagonal: empty energy list");
    ComplexMatrix m(energies.size());
    for (std::size_t i = 0; i < energies.size(); ++i) {
        if (!std::isfinite(energies[i]))
            throw std::invalid_argument("build_diagonal: non-finite energy");
        m(i, i) = energies[i];
    }
    return m;
}

namespace {

ComplexMatrix single_pauli(PauliLetter l) {
    ComplexMatrix m(2);
    switch (l) {
        case PauliLetter::I: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
        case PauliLetter::X: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
        case PauliLetter::Y: m(0, 1) = Complex(0.0, -1.0); m(1, 0) = Complex(0.0, 1.0); break;
        case PauliLetter::Z: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    }
    return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t ra = 0; ra < na; ++ra)
        for (std::size_t ca = 0; ca < na; ++ca)
            for (std::size_t rb = 0; rb < nb; ++rb)
                for (std::size_t cb = 0; cb < nb; ++cb)
                    out(ra * nb + rb, ca * nb + cb) = a(ra, ca) * b(rb, cb);
    return out;
}

}  // namespace

ComplexMatrix build_pauli(const PauliString& p) {
    if (p.letters.empty()) throw std::invalid_argument("build_pauli: empty string");
    ComplexMatrix m = single_pauli(p.letters[0]);
    for (std::size_t q = 1; q < p.letters.size(); ++q)
        m = kron(m, single_pauli(p.letters[q]));
    m *= Complex(p.coefficient, 0.0);
    return m;
}

SplitHamiltonian build_tight_binding(unsigned sites, double hopping,
                                     const std::vector<double>& onsite) {
    if (sites < 2) throw std::invalid_argument("build_tight_binding: need at least 2 sites");
    if (onsite.size() != sites)
        throw std::invalid_argument("build_tight_binding: onsite length must equal sites");
    ComplexMatrix s(sites);
    for (unsigned j = 0; j + 1 < sites; ++j) {
        s(j, j + 1) = hopping;
        s(j + 1, j) = hopping;
    }
    return make_split(s, build_diagonal(onsite));
}

ComplexMatrix build_random_hermitian(std::size_t dim, std::uint64_t seed) {
    if (dim < 1) throw std::invalid_argument("build_random_hermitian: dim must be >= 1");
    // Key the stream on (dim, seed) so different sizes decorrelate.
    SplitMix64 rng(seed ^ (0x51ed2701a2b9d4e5ULL * static_cast<std::uint64_t>(dim)));
    ComplexMatrix g(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            const double re = rng.next_symmetric();
            const double im = rng.next_symmetric();
            g(r, c) = Complex(re, im);
        }
    ComplexMatrix h(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            h(r, c) = 0.5 * (g(r, c) + std::conj(g(c, r)));
    return h;
}

}  // namespace trotterkit
