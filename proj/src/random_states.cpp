#include "thermalent/random_states.hpp"

namespace thermalent {

DensityMatrix random_density_matrix(SplitMix64& rng, const BipartiteShape& shape) {
    validate_shape(shape);
    const std::size_t d = shape.dim();
    const ComplexMatrix g = complex_normal_matrix(rng, d);
    ComplexMatrix rho = g * g.adjoint();
    rho *= 1.0 / rho.trace();
    // Scrub rounding off the diagonal so the result is exactly Hermitian.
    for (std::size_t i = 0; i < d; ++i) rho(i, i) = Complex(rho(i, i).real(), 0.0);
    return DensityMatrix{std::move(rho), shape};
}

HamiltonianSpec random_hamiltonian_spec(SplitMix64& rng, const BipartiteShape& shape) {
    validate_shape(shape);
    const std::size_t d = shape.dim();
    HamiltonianSpec raw;
    raw.shape = shape;
    raw.label = "random";
    raw.eigenvalues.reserve(d);
    for (std::size_t j = 0; j < d; ++j) raw.eigenvalues.push_back(5.0 * rng.next_uniform());

    // Modified Gram-Schmidt on complex-normal columns, run twice.
    const ComplexMatrix g = complex_normal_matrix(rng, d);
    std::vector<std::vector<Complex>> basis(d, std::vector<Complex>(d));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) basis[j][i] = g(i, j);
    for (int pass = 0; pass < 2; ++pass)
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < j; ++k) {
                const Complex overlap = inner_product(basis[k], basis[j]);
                for (std::size_t i = 0; i < d; ++i) basis[j][i] -= overlap * basis[k][i];
            }
            normalize(basis[j]);
        }
    raw.eigenvectors = std::move(basis);
    return normalize_spec(std::move(raw));
}

}  // namespace thermalent
