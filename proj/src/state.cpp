#include "trotterkit/state.hpp"

#include <stdexcept>

namespace trotterkit {

StateVector normalize(const std::vector<Complex>& v) {
    const double n = vector_norm(v);
    if (n == 0.0) throw std::invalid_argument("normalize: zero vector");
    StateVector out;
    out.amplitudes.reserve(v.size());
    for (const auto& e : v) out.amplitudes.push_back(e / n);
    return out;
}

StateVector basis_state(std::size_t dim, std::size_t index) {
    if (index >= dim) throw std::invalid_argument("basis_state: index out of range");
    StateVector out;
    out.amplitudes.assign(dim, Complex(0.0, 0.0));
    out.amplitudes[index] = 1.0;
    return out;
}

}  // namespace trotterkit
