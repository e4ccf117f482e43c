#ifndef TROTTERKIT_MATRIX_HPP
#define TROTTERKIT_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace trotterkit {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major storage.
class ComplexMatrix {
public:
    ComplexMatrix() : dim_(0) {}
    explicit ComplexMatrix(std::size_t dim)
        : dim_(dim), data_(dim * dim, Complex(0.0, 0.0)) {}

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    const std::vector<Complex>& data() const { return data_; }

    ComplexMatrix adjoint() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

    // True iff every entry is finite (no NaN/Inf in either component).
    bool all_finite() const;

private:
    std::size_t dim_;
    std::vector<Complex> data_;
};

// Standard matrix product. Throws std::invalid_argument on dimension mismatch.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// Matrix-vector product a * v.
std::vector<Complex> mat_vec(const ComplexMatrix& a, const std::vector<Complex>& v);

// True iff ||A - A^dag||_F <= tol.
bool hermitian_check(const ComplexMatrix& a, double tol);

// AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& a);

// Largest singular value, computed through the Hermitian eigensolver on A^dag A.
double operator_2norm(const ComplexMatrix& a);

double vector_norm(const std::vector<Complex>& v);

// Shared matrix file format: {"dim": n, "re": [[...]], "im": [[...]]}.
// Rejects non-square and non-finite payloads.
ComplexMatrix matrix_from_json(const std::string& text);
std::string matrix_to_json(const ComplexMatrix& a);
ComplexMatrix load_matrix(const std::string& path);
void save_matrix(const ComplexMatrix& a, const std::string& path);

}  // namespace trotterkit

#endif
