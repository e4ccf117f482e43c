#ifndef TROTTERKIT_TROTTER_HPP
#define TROTTERKIT_TROTTER_HPP

#include <optional>
#include <string>
#include <vector>

#include "trotterkit/expm.hpp"
#include "trotterkit/matrix.hpp"
#include "trotterkit/state.hpp"

namespace trotterkit {

// Ordered Hermitian pair (S, T) whose sum is the full Hamiltonian.
struct SplitHamiltonian {
    ComplexMatrix s;
    ComplexMatrix t_op;
    double commutator_norm = 0.0;  // cached ||[S,T]|| (operator 2-norm)

    std::size_t dim() const { return s.dim(); }
    ComplexMatrix sum() const { return s + t_op; }
};

// Validates Hermiticity of both parts (tolerance 1e-10 * scale), equal dims,
// and caches the commutator norm.
SplitHamiltonian make_split(const ComplexMatrix& s, const ComplexMatrix& t_op);

enum class ErrorMetric { operator_2norm, state_vector_norm };

struct ConvergenceReport {
    double t = 0.0;
    std::vector<unsigned> step_counts;  // strictly increasing
    std::vector<double> errors;
    double fitted_order = 0.0;  // NaN when order_valid is false
    bool order_valid = false;
    ErrorMetric metric = ErrorMetric::operator_2norm;

    std::string to_csv() const;   // columns: n,error
    std::string to_json() const;  // full object
};

// One product factor e^{-i dt S} e^{-i dt T}.
UnitaryOperator trotter_step(const SplitHamiltonian& h, double dt);

// (e^{-i(t/n)S} e^{-i(t/n)T})^n by binary exponentiation.
UnitaryOperator trotter_evolve(const SplitHamiltonian& h, double t, unsigned n);

// ((I + A/N)(I + B/N))^N with A = -iSt, B = -iTt and N = 2^log2_n, computed
// by repeated squaring of the single factor. First-order in 1/N and not
// exactly unitary; unitarity_defect reports ||M^dag M - I||_F.
struct LinearizedResult {
    ComplexMatrix matrix;
    double unitarity_defect = 0.0;
};
LinearizedResult linearized_trotter(const SplitHamiltonian& h, double t,
                                    unsigned log2_n);

// ||u_h(xi)||_2 = (1/|h|) ||(e^{-ihS}e^{-ihT} - e^{-ih(S+T)}) xi||_2.
// Throws std::invalid_argument when step == 0.
double defect(const SplitHamiltonian& h, double step, const StateVector& xi);

// max over s on a uniform grid of `samples` points on [-|t|, |t|] (both
// endpoints included; samples == 1 degenerates to s = -|t|) of
// defect(h, step, e^{-is(S+T)} xi).
double defect_supremum(const SplitHamiltonian& h, double step,
                       const StateVector& xi, double t, unsigned samples = 41);

// || i (e^{-iH step} xi - xi)/step - H xi ||_2; tends to 0 linearly in step.
double generator_residual(const ComplexMatrix& hmat, double step,
                          const StateVector& xi);

// Measures the distance between trotter_evolve(h, t, n) and exact_expm(S+T, t)
// for each n, and fits the decay order by least squares on log-log points
// (errors below 1e-12 excluded from the fit).
ConvergenceReport convergence_study(const SplitHamiltonian& h, double t,
                                    const std::vector<unsigned>& step_counts,
                                    ErrorMetric metric,
                                    const std::optional<StateVector>& xi = std::nullopt);

}  // namespace trotterkit

#endif
