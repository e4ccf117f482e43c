#include "trotterkit/matrix.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "trotterkit/eig.hpp"

namespace trotterkit {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rhs.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rhs.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& e : data_) e *= s;
    return *this;
}

bool ComplexMatrix::all_finite() const {
    for (const auto& e : data_)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    return true;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matmul: dimension mismatch");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

std::vector<Complex> mat_vec(const ComplexMatrix& a, const std::vector<Complex>& v) {
    if (a.dim() != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    const std::size_t n = a.dim();
    std::vector<Complex> out(n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i] += a(i, j) * v[j];
    return out;
}

bool hermitian_check(const ComplexMatrix& a, double tol) {
    double acc = 0.0;
    const std::size_t n = a.dim();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const Complex d = a(r, c) - std::conj(a(c, r));
            acc += std::norm(d);
        }
    return std::sqrt(acc) <= tol;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("commutator: dimension mismatch");
    return matmul(a, b) - matmul(b, a);
}

double frobenius_norm(const ComplexMatrix& a) {
    double acc = 0.0;
    for (const auto& e : a.data()) acc += std::norm(e);
    return std::sqrt(acc);
}

double operator_2norm(const ComplexMatrix& a) {
    if (a.dim() == 0) return 0.0;
    if (frobenius_norm(a) == 0.0) return 0.0;
    const ComplexMatrix gram = matmul(a.adjoint(), a);
    const SpectralDecomposition d = eig_hermitian(gram);
    const double top = d.eigenvalues.back();
    return top > 0.0 ? std::sqrt(top) : 0.0;
}

double vector_norm(const std::vector<Complex>& v) {
    double acc = 0.0;
    for (const auto& e : v) acc += std::norm(e);
    return std::sqrt(acc);
}

ComplexMatrix matrix_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("dim") || !j.contains("re") || !j.contains("im"))
        throw std::invalid_argument("matrix JSON: missing dim/re/im");
    const std::size_t n = j["dim"].get<std::size_t>();
    const auto& re = j["re"];
    const auto& im = j["im"];
    if (re.size() != n || im.size() != n)
        throw std::invalid_argument("matrix JSON: row count does not match dim");
    ComplexMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (re[r].size() != n || im[r].size() != n)
            throw std::invalid_argument("matrix JSON: payload is not square");
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = Complex(re[r][c].get<double>(), im[r][c].get<double>());
    }
    if (!m.all_finite()) throw std::invalid_argument("matrix JSON: non-finite entry");
    return m;
}

std::string matrix_to_json(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (std::size_t r = 0; r < n; ++r) {
        nlohmann::json rr = nlohmann::json::array();
        nlohmann::json ri = nlohmann::json::array();
        for (std::size_t c = 0; c < n; ++c) {
            rr.push_back(a(r, c).real());
            ri.push_back(a(r, c).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ri));
    }
    nlohmann::json j{{"dim", n}, {"re", std::move(re)}, {"im", std::move(im)}};
    return j.dump();
}

ComplexMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return matrix_from_json(ss.str());
}

void save_matrix(const ComplexMatrix& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write matrix file: " + path);
    out << matrix_to_json(a) << "\n";
}

}  // namespace trotterkit
