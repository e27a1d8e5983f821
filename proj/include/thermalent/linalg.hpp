#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "thermalent/errors.hpp"

namespace thermalent {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Everything handled here is at most 6x6.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    const std::vector<Complex>& entries() const { return entries_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double max_abs() const;  // largest |entry|
    double frobenius_norm() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// max |(A - A^dagger)_ij|
double hermiticity_defect(const ComplexMatrix& a);

struct HermitianEigensystem {
    std::vector<double> eigenvalues;                 // ascending
    std::vector<std::vector<Complex>> eigenvectors;  // eigenvectors[j] pairs with eigenvalues[j]
};

// Qubit x (qubit or qutrit) factorization of the composite space. The first
// factor is always the qubit; composite basis index n = i*d2 + k.
struct BipartiteShape {
    std::size_t d1 = 2;
    std::size_t d2 = 2;

    std::size_t dim() const { return d1 * d2; }

    static BipartiteShape qubit_qubit() { return {2, 2}; }
    static BipartiteShape qubit_qutrit() { return {2, 3}; }

    friend bool operator==(const BipartiteShape&, const BipartiteShape&) = default;
};

// Throws UnsupportedDimensionError unless d1 == 2 and d2 in {2, 3}.
void validate_shape(const BipartiteShape& shape);

enum class Factor { first, second };

/// Cyclic Jacobi diagonalization. Adequate and bit-stable at these sizes;
/// eigenvalues ascending, ties kept in rotation order.
HermitianEigensystem eig_hermitian(const ComplexMatrix& a, double hermiticity_tol = 1e-10);

// Smallest eigenvalue only (skips eigenvector accumulation).
double min_eigenvalue(const ComplexMatrix& a, double hermiticity_tol = 1e-10);

// Transposition of the qubit factor: block (i,j) of the output is block (j,i)
// of the input, inner d2 x d2 entries untouched. Involution; preserves
// Hermiticity and trace.
ComplexMatrix partial_transpose(const ComplexMatrix& omega, const BipartiteShape& shape);

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<Complex> tensor_product(const std::vector<Complex>& a,
                                    const std::vector<Complex>& b);

// Operator on the factor complementary to `side` with matrix elements
// <psi|A|psi'> = <psi (x) phi|H|psi' (x) phi> (factor order as appropriate).
// `phi` lives on `side` and must be a unit vector.
ComplexMatrix condition_on_factor(const ComplexMatrix& h, const BipartiteShape& shape,
                                  Factor side, const std::vector<Complex>& phi);

// <a, b> with the first argument conjugated.
Complex inner_product(const std::vector<Complex>& a, const std::vector<Complex>& b);
double norm(const std::vector<Complex>& v);
void normalize(std::vector<Complex>& v);

}  // namespace thermalent
