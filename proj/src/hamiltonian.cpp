#include "thermalent/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace thermalent {

Temperature::Temperature(double value) : value_(value) {
    if (std::isnan(value) || value < 0.0)
        throw NegativeTemperatureError("temperature must be a non-negative real (got " +
                                       std::to_string(value) + ")");
}

Temperature Temperature::infinite() {
    return Temperature(std::numeric_limits<double>::infinity());
}

bool Temperature::is_infinite() const { return std::isinf(value_); }

HamiltonianSpec normalize_spec(HamiltonianSpec raw) {
    validate_shape(raw.shape);
    const std::size_t d = raw.shape.dim();
    if (raw.eigenvalues.size() != d)
        throw DimensionMismatchError("expected " + std::to_string(d) + " eigenvalues, got " +
                                     std::to_string(raw.eigenvalues.size()));
    if (raw.eigenvectors.size() != d)
        throw DimensionMismatchError("expected " + std::to_string(d) + " eigenvectors, got " +
                                     std::to_string(raw.eigenvectors.size()));
    for (std::size_t j = 0; j < d; ++j)
        if (raw.eigenvectors[j].size() != d)
            throw DimensionMismatchError("eigenvector " + std::to_string(j + 1) + " has length " +
                                         std::to_string(raw.eigenvectors[j].size()) +
                                         ", expected " + std::to_string(d));
    for (double h : raw.eigenvalues)
        if (!std::isfinite(h)) throw Error("eigenvalues must be finite");

    // Report the worst-offending pair, not just the first one over tolerance.
    double worst = 0.0;
    std::size_t worst_i = 0, worst_j = 0;
    Complex worst_ip = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            const Complex ip = inner_product(raw.eigenvectors[i], raw.eigenvectors[j]);
            const double defect = std::abs(ip - (i == j ? Complex(1.0) : Complex(0.0)));
            if (defect > worst) {
                worst = defect;
                worst_i = i;
                worst_j = j;
                worst_ip = ip;
            }
        }
    if (worst > 1e-8)
        throw NotOrthonormalError(
            "eigenvectors " + std::to_string(worst_i + 1) + " and " + std::to_string(worst_j + 1) +
            ": inner product (" + std::to_string(worst_ip.real()) + ", " +
            std::to_string(worst_ip.imag()) + ") deviates from expected by " +
            std::to_string(worst));

    const double h_min = *std::min_element(raw.eigenvalues.begin(), raw.eigenvalues.end());
    for (double& h : raw.eigenvalues) h -= h_min;
    return raw;
}

void require_normalized(const HamiltonianSpec& spec) {
    const double h_min = *std::min_element(spec.eigenvalues.begin(), spec.eigenvalues.end());
    if (h_min != 0.0)
        throw Error("HamiltonianSpec is not normalized (min eigenvalue " +
                    std::to_string(h_min) + "); pass it through normalize_spec first");
}

std::vector<double> gibbs_weights(const HamiltonianSpec& spec, Temperature t) {
    require_normalized(spec);
    const std::size_t d = spec.shape.dim();
    std::vector<double> w(d);
    if (t.is_infinite()) {
        std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(d));
        return w;
    }

    const auto& h = spec.eigenvalues;
    const double h_min = *std::min_element(h.begin(), h.end());
    const double h_max = *std::max_element(h.begin(), h.end());

    // Below this every Boltzmann factor underflows; use the ground projector.
    if (t.is_zero() || t.value() < 1e-12 * h_max) {
        std::size_t m = 0;
        for (double hj : h)
            if (hj - h_min <= kDegeneracyTol) ++m;
        for (std::size_t j = 0; j < d; ++j)
            w[j] = (h[j] - h_min <= kDegeneracyTol) ? 1.0 / static_cast<double>(m) : 0.0;
        return w;
    }

    double z = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        w[j] = std::exp(-(h[j] - h_min) / t.value());
        z += w[j];
    }
    for (double& wj : w) wj /= z;
    return w;
}

DensityMatrix gibbs_state(const HamiltonianSpec& spec, Temperature t) {
    const std::vector<double> w = gibbs_weights(spec, t);
    const std::size_t d = spec.shape.dim();
    ComplexMatrix rho(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        if (w[j] == 0.0) continue;
        const auto& v = spec.eigenvectors[j];
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) rho(a, b) += w[j] * v[a] * std::conj(v[b]);
    }
    return DensityMatrix{std::move(rho), spec.shape};
}

double energy(const HamiltonianSpec& spec, Temperature t) {
    const std::vector<double> w = gibbs_weights(spec, t);
    double u = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) u += w[j] * spec.eigenvalues[j];
    return u;
}

double mean_energy(const HamiltonianSpec& spec) {
    double s = 0.0;
    for (double h : spec.eigenvalues) s += h;
    return s / static_cast<double>(spec.eigenvalues.size());
}

double purity(const DensityMatrix& rho) {
    // tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
    double s = 0.0;
    for (const Complex& e : rho.matrix.entries()) s += std::norm(e);
    return s;
}

double thermal_purity(const HamiltonianSpec& spec, Temperature t) {
    const std::vector<double> w = gibbs_weights(spec, t);
    double s = 0.0;
    for (double wj : w) s += wj * wj;
    return s;
}

ComplexMatrix materialize(const HamiltonianSpec& spec) {
    const std::size_t d = spec.shape.dim();
    ComplexMatrix h(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const double hj = spec.eigenvalues[j];
        if (hj == 0.0) continue;
        const auto& v = spec.eigenvectors[j];
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) h(a, b) += hj * v[a] * std::conj(v[b]);
    }
    return h;
}

void validate_density_matrix(const DensityMatrix& rho) {
    validate_shape(rho.shape);
    const std::size_t d = rho.shape.dim();
    if (rho.matrix.rows() != d || rho.matrix.cols() != d)
        throw ShapeMismatchError("density matrix dimension does not match its shape");
    const double defect = hermiticity_defect(rho.matrix);
    if (defect > 1e-10)
        throw NotHermitianError("density matrix Hermiticity defect " + std::to_string(defect));
    const Complex tr = rho.matrix.trace();
    if (std::abs(tr - 1.0) > 1e-12)
        throw Error("density matrix trace deviates from 1 by " +
                    std::to_string(std::abs(tr - 1.0)));
    const double lambda = min_eigenvalue(rho.matrix);
    if (lambda < -1e-12)
        throw Error("density matrix has negative eigenvalue " + std::to_string(lambda));
}

DensityMatrix make_density_matrix(ComplexMatrix matrix, const BipartiteShape& shape) {
    DensityMatrix rho{std::move(matrix), shape};
    validate_density_matrix(rho);
    return rho;
}

}  // namespace thermalent
