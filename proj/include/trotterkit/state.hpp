#ifndef TROTTERKIT_STATE_HPP
#define TROTTERKIT_STATE_HPP

#include <vector>

#include "trotterkit/matrix.hpp"

namespace trotterkit {

// Normalized complex vector |psi>.
struct StateVector {
    std::vector<Complex> amplitudes;

    std::size_t dim() const { return amplitudes.size(); }
};

// Returns v / ||v||_2. Throws std::invalid_argument on the zero vector.
StateVector normalize(const std::vector<Complex>& v);

// Standard basis vector e_index in the given dimension.
StateVector basis_state(std::size_t dim, std::size_t index);

}  // namespace trotterkit

#endif
