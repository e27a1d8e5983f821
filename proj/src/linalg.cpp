#include "thermalent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace thermalent {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& e : entries_) m = std::max(m, std::abs(e));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& e : entries_) s += std::norm(e);
    return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (Complex& e : entries_) e *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

double hermiticity_defect(const ComplexMatrix& a) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    return worst;
}

void validate_shape(const BipartiteShape& shape) {
    if (shape.d1 != 2 || (shape.d2 != 2 && shape.d2 != 3))
        throw UnsupportedDimensionError("unsupported bipartite shape " +
                                        std::to_string(shape.d1) + "x" +
                                        std::to_string(shape.d2) +
                                        " (supported: 2x2 and 2x3)");
}

namespace {

double offdiag_frobenius(const ComplexMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

// One cyclic sweep over all (p, q) pairs, annihilating M(p, q) with the
// unitary that diagonalizes the 2x2 pivot block. Columns of V accumulate
// the eigenvectors when V is non-null.
void jacobi_sweep(ComplexMatrix& m, ComplexMatrix* v) {
    const std::size_t n = m.rows();
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const Complex alpha = m(p, q);
            const double r = std::abs(alpha);
            if (r == 0.0) continue;

            // Phase-reduce the pivot to a real symmetric 2x2, then rotate.
            const Complex u = alpha / r;  // e^{i phi}
            const double app = m(p, p).real();
            const double aqq = m(q, q).real();
            const double tau = (aqq - app) / (2.0 * r);
            const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                          : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;
            const Complex s_uc = s * std::conj(u);
            const Complex c_uc = c * std::conj(u);

            m(p, p) = app - t * r;
            m(q, q) = aqq + t * r;
            m(p, q) = 0.0;
            m(q, p) = 0.0;

            for (std::size_t k = 0; k < n; ++k) {
                if (k == p || k == q) continue;
                const Complex mkp = m(k, p);
                const Complex mkq = m(k, q);
                m(k, p) = c * mkp - s_uc * mkq;
                m(k, q) = s * mkp + c_uc * mkq;
                m(p, k) = std::conj(m(k, p));
                m(q, k) = std::conj(m(k, q));
            }
            if (v != nullptr) {
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = (*v)(k, p);
                    const Complex vkq = (*v)(k, q);
                    (*v)(k, p) = c * vkp - s_uc * vkq;
                    (*v)(k, q) = s * vkp + c_uc * vkq;
                }
            }
        }
    }
}

constexpr int kMaxSweeps = 100;
constexpr double kOffdiagTol = 1e-14;

// Diagonalizes in place; returns the permutation sorting eigenvalues ascending.
std::vector<std::size_t> jacobi_diagonalize(ComplexMatrix& m, ComplexMatrix* v,
                                            double hermiticity_tol) {
    if (!m.is_square()) throw NotSquareError("matrix is not square");
    const double defect = hermiticity_defect(m);
    if (defect > hermiticity_tol)
        throw NotHermitianError("matrix is not Hermitian: defect " + std::to_string(defect) +
                                " exceeds tolerance");

    const std::size_t n = m.rows();
    // Symmetrize away the sub-tolerance defect so the iteration sees an
    // exactly Hermitian matrix.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = avg;
            m(j, i) = std::conj(avg);
        }
        m(i, i) = Complex(m(i, i).real(), 0.0);
    }

    const double scale = std::max(1.0, m.frobenius_norm());
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_frobenius(m) <= kOffdiagTol * scale) {
            converged = true;
            break;
        }
        jacobi_sweep(m, v);
    }
    if (!converged && offdiag_frobenius(m) > kOffdiagTol * scale)
        throw NoConvergenceError("Jacobi iteration did not converge in 100 sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&m](std::size_t a, std::size_t b) {
        return m(a, a).real() < m(b, b).real();
    });
    return order;
}

}  // namespace

HermitianEigensystem eig_hermitian(const ComplexMatrix& a, double hermiticity_tol) {
    ComplexMatrix m = a;
    ComplexMatrix v = ComplexMatrix::identity(a.rows());
    const std::vector<std::size_t> order = jacobi_diagonalize(m, &v, hermiticity_tol);

    const std::size_t n = m.rows();
    HermitianEigensystem out;
    out.eigenvalues.reserve(n);
    out.eigenvectors.reserve(n);
    for (std::size_t j : order) {
        out.eigenvalues.push_back(m(j, j).real());
        std::vector<Complex> vec(n);
        for (std::size_t k = 0; k < n; ++k) vec[k] = v(k, j);
        normalize(vec);
        out.eigenvectors.push_back(std::move(vec));
    }
    return out;
}

double min_eigenvalue(const ComplexMatrix& a, double hermiticity_tol) {
    ComplexMatrix m = a;
    const std::vector<std::size_t> order = jacobi_diagonalize(m, nullptr, hermiticity_tol);
    return m(order.front(), order.front()).real();
}

ComplexMatrix partial_transpose(const ComplexMatrix& omega, const BipartiteShape& shape) {
    validate_shape(shape);
    const std::size_t d = shape.dim();
    if (omega.rows() != d || omega.cols() != d)
        throw ShapeMismatchError("partial_transpose: matrix is " + std::to_string(omega.rows()) +
                                 "x" + std::to_string(omega.cols()) + ", shape requires " +
                                 std::to_string(d) + "x" + std::to_string(d));

    const std::size_t d2 = shape.d2;
    ComplexMatrix out(d, d);
    for (std::size_t i = 0; i < shape.d1; ++i)
        for (std::size_t j = 0; j < shape.d1; ++j)
            for (std::size_t k = 0; k < d2; ++k)
                for (std::size_t l = 0; l < d2; ++l)
                    out(i * d2 + k, j * d2 + l) = omega(j * d2 + k, i * d2 + l);
    return out;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == 0.0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

std::vector<Complex> tensor_product(const std::vector<Complex>& a,
                                    const std::vector<Complex>& b) {
    std::vector<Complex> out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) out[i * b.size() + k] = a[i] * b[k];
    return out;
}

ComplexMatrix condition_on_factor(const ComplexMatrix& h, const BipartiteShape& shape,
                                  Factor side, const std::vector<Complex>& phi) {
    validate_shape(shape);
    const std::size_t d = shape.dim();
    if (h.rows() != d || h.cols() != d)
        throw ShapeMismatchError("condition_on_factor: operator dimension mismatch");
    const std::size_t own = (side == Factor::first) ? shape.d1 : shape.d2;
    const std::size_t other = (side == Factor::first) ? shape.d2 : shape.d1;
    if (phi.size() != own)
        throw ShapeMismatchError("condition_on_factor: vector length " +
                                 std::to_string(phi.size()) + " does not match factor dimension " +
                                 std::to_string(own));
    if (std::abs(norm(phi) - 1.0) > 1e-12)
        throw NotUnitVectorError("condition_on_factor: vector norm deviates from 1 by more than 1e-12");

    const std::size_t d2 = shape.d2;
    ComplexMatrix out(other, other);
    if (side == Factor::second) {
        for (std::size_t i = 0; i < other; ++i)
            for (std::size_t j = 0; j < other; ++j) {
                Complex acc = 0.0;
                for (std::size_t k = 0; k < own; ++k)
                    for (std::size_t l = 0; l < own; ++l)
                        acc += std::conj(phi[k]) * h(i * d2 + k, j * d2 + l) * phi[l];
                out(i, j) = acc;
            }
    } else {
        for (std::size_t k = 0; k < other; ++k)
            for (std::size_t l = 0; l < other; ++l) {
                Complex acc = 0.0;
                for (std::size_t i = 0; i < own; ++i)
                    for (std::size_t j = 0; j < own; ++j)
                        acc += std::conj(phi[i]) * h(i * d2 + k, j * d2 + l) * phi[j];
                out(k, l) = acc;
            }
    }
    return out;
}

Complex inner_product(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

double norm(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const Complex& e : v) s += std::norm(e);
    return std::sqrt(s);
}

void normalize(std::vector<Complex>& v) {
    const double n = norm(v);
    if (n == 0.0) throw NotUnitVectorError("cannot normalize the zero vector");
    for (Complex& e : v) e /= n;
}

}  // namespace thermalent
