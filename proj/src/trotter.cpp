#include "trotterkit/trotter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace trotterkit {

namespace {

ComplexMatrix matrix_power(ComplexMatrix base, unsigned n) {
    ComplexMatrix result = ComplexMatrix::identity(base.dim());
    while (n > 0) {
        if (n & 1u) result = matmul(result, base);
        n >>= 1u;
        if (n > 0) base = matmul(base, base);
    }
    return result;
}

void format_double(std::ostream& os, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}

}  // namespace

SplitHamiltonian make_split(const ComplexMatrix& s, const ComplexMatrix& t_op) {
    if (s.dim() != t_op.dim())
        throw std::invalid_argument("make_split: dimension mismatch");
    const double scale = std::max({frobenius_norm(s), frobenius_norm(t_op), 1.0});
    if (!hermitian_check(s, 1e-10 * scale))
        throw std::invalid_argument("make_split: S part is not Hermitian");
    if (!hermitian_check(t_op, 1e-10 * scale))
        throw std::invalid_argument("make_split: T part is not Hermitian");
    SplitHamiltonian h;
    h.s = s;
    h.t_op = t_op;
    h.commutator_norm = operator_2norm(commutator(s, t_op));
    return h;
}

UnitaryOperator trotter_step(const SplitHamiltonian& h, double dt) {
    const UnitaryOperator us = exact_expm(h.s, dt, "S");
    const UnitaryOperator ut = exact_expm(h.t_op, dt, "T");
    UnitaryOperator out;
    out.matrix = matmul(us.matrix, ut.matrix);
    out.generator_label = "trotter_step";
    out.time = dt;
    return out;
}

UnitaryOperator trotter_evolve(const SplitHamiltonian& h, double t, unsigned n) {
    if (n < 1) throw std::invalid_argument("trotter_evolve: n must be >= 1");
    const UnitaryOperator step = trotter_step(h, t / static_cast<double>(n));
    UnitaryOperator out;
    out.matrix = matrix_power(step.matrix, n);
    out.generator_label = "trotter_evolve";
    out.time = t;
    return out;
}

LinearizedResult linearized_trotter(const SplitHamiltonian& h, double t, unsigned log2_n) {
    const std::size_t dim = h.dim();
    const double n_inv = std::ldexp(1.0, -static_cast<int>(log2_n));

    // Factor (I + A/N)(I + B/N) with A = -iSt, B = -iTt.
    ComplexMatrix fa = ComplexMatrix::identity(dim);
    ComplexMatrix fb = ComplexMatrix::identity(dim);
    ComplexMatrix sa = h.s;
    sa *= Complex(0.0, -t * n_inv);
    ComplexMatrix sb = h.t_op;
    sb *= Complex(0.0, -t * n_inv);
    fa += sa;
    fb += sb;

    ComplexMatrix m = matmul(fa, fb);
    for (unsigned k = 0; k < log2_n; ++k) m = matmul(m, m);
    if (!m.all_finite()) throw std::runtime_error("linearized_trotter: overflow in entries");

    LinearizedResult out;
    out.unitarity_defect =
        frobenius_norm(matmul(m.adjoint(), m) - ComplexMatrix::identity(dim));
    out.matrix = std::move(m);
    return out;
}

double defect(const SplitHamiltonian& h, double step, const StateVector& xi) {
    if (step == 0.0) throw std::invalid_argument("defect: step must be nonzero");
    const ComplexMatrix prod =
        matmul(exact_expm(h.s, step).matrix, exact_expm(h.t_op, step).matrix);
    const ComplexMatrix exact = exact_expm(h.sum(), step).matrix;
    const std::vector<Complex> diff =
        mat_vec(prod - exact, xi.amplitudes);
    return vector_norm(diff) / std::abs(step);
}

double defect_supremum(const SplitHamiltonian& h, double step, const StateVector& xi,
                       double t, unsigned samples) {
    if (samples < 1) throw std::invalid_argument("defect_supremum: samples must be >= 1");
    const double tt = std::abs(t);
    double best = 0.0;
    for (unsigned k = 0; k < samples; ++k) {
        const double s = samples == 1
                             ? -tt
                             : -tt + 2.0 * tt * static_cast<double>(k) /
                                       static_cast<double>(samples - 1);
        const StateVector xi_s = evolve_state(exact_expm(h.sum(), s), xi);
        best = std::max(best, defect(h, step, xi_s));
    }
    return best;
}

double generator_residual(const ComplexMatrix& hmat, double step, const StateVector& xi) {
    if (step == 0.0) throw std::invalid_argument("generator_residual: step must be nonzero");
    const StateVector moved = evolve_state(exact_expm(hmat, step), xi);
    const std::vector<Complex> hxi = mat_vec(hmat, xi.amplitudes);
    std::vector<Complex> resid(xi.dim());
    const Complex i_over_h(0.0, 1.0 / step);
    for (std::size_t k = 0; k < xi.dim(); ++k)
        resid[k] = i_over_h * (moved.amplitudes[k] - xi.amplitudes[k]) - hxi[k];
    return vector_norm(resid);
}

ConvergenceReport convergence_study(const SplitHamiltonian& h, double t,
                                    const std::vector<unsigned>& step_counts,
                                    ErrorMetric metric,
                                    const std::optional<StateVector>& xi) {
    if (step_counts.empty())
        throw std::invalid_argument("convergence_study: empty step counts");
    for (std::size_t k = 0; k + 1 < step_counts.size(); ++k)
        if (step_counts[k] >= step_counts[k + 1])
            throw std::invalid_argument("convergence_study: step counts must be strictly increasing");
    if (metric == ErrorMetric::state_vector_norm && !xi)
        throw std::invalid_argument("convergence_study: state metric requires a state vector");

    const UnitaryOperator exact = exact_expm(h.sum(), t, "exact");

    ConvergenceReport report;
    report.t = t;
    report.step_counts = step_counts;
    report.metric = metric;
    report.errors.reserve(step_counts.size());

    // Each n is computed from scratch; results are independent of order.
    for (unsigned n : step_counts) {
        const UnitaryOperator approx = trotter_evolve(h, t, n);
        const ComplexMatrix diff = approx.matrix - exact.matrix;
        double err;
        if (metric == ErrorMetric::operator_2norm) {
            err = operator_2norm(diff);
        } else {
            err = vector_norm(mat_vec(diff, xi->amplitudes));
        }
        report.errors.push_back(err);
    }

    // Least-squares slope of log(error) vs log(n), negated; points at the
    // double-precision floor are excluded.
    std::vector<double> lx, ly;
    for (std::size_t k = 0; k < step_counts.size(); ++k) {
        if (report.errors[k] < 1e-12) continue;
        lx.push_back(std::log(static_cast<double>(step_counts[k])));
        ly.push_back(std::log(report.errors[k]));
    }
    if (lx.size() >= 2) {
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        for (std::size_t k = 0; k < lx.size(); ++k) {
            sx += lx[k];
            sy += ly[k];
            sxx += lx[k] * lx[k];
            sxy += lx[k] * ly[k];
        }
        const double m = static_cast<double>(lx.size());
        const double denom = m * sxx - sx * sx;
        if (denom > 0.0) {
            report.fitted_order = -(m * sxy - sx * sy) / denom;
            report.order_valid = true;
        }
    }
    if (!report.order_valid)
        report.fitted_order = std::numeric_limits<double>::quiet_NaN();
    return report;
}

std::string ConvergenceReport::to_csv() const {
    std::ostringstream os;
    os << "n,error\n";
    for (std::size_t k = 0; k < step_counts.size(); ++k) {
        os << step_counts[k] << ",";
        format_double(os, errors[k]);
        os << "\n";
    }
    return os.str();
}

std::string ConvergenceReport::to_json() const {
    nlohmann::json j;
    j["t"] = t;
    j["n"] = step_counts;
    j["errors"] = errors;
    j["metric"] = metric == ErrorMetric::operator_2norm ? "operator_2norm"
                                                        : "state_vector_norm";
    j["order_valid"] = order_valid;
    if (order_valid)
        j["fitted_order"] = fitted_order;
    else
        j["fitted_order"] = nullptr;
    return j.dump(2);
}

}  // namespace trotterkit
