#pragma once

#include <string>
#include <vector>

#include "thermalent/linalg.hpp"

namespace thermalent {

// Non-negative temperature in the same units as the Hamiltonian eigenvalues
// (Boltzmann's constant absorbed). Infinity is a legitimate value and
// describes the maximally mixed state, not a large float stand-in.
class Temperature {
public:
    Temperature() = default;
    explicit Temperature(double value);

    static Temperature infinite();

    double value() const { return value_; }
    bool is_infinite() const;
    bool is_zero() const { return value_ == 0.0; }

    friend auto operator<=>(const Temperature&, const Temperature&) = default;

private:
    double value_ = 0.0;
};

// Hamiltonian in spectral form. Eigenvalues carry temperature units; after
// normalize_spec the smallest one is exactly zero.
struct HamiltonianSpec {
    BipartiteShape shape;
    std::vector<double> eigenvalues;
    std::vector<std::vector<Complex>> eigenvectors;
    std::string label;
};

struct DensityMatrix {
    ComplexMatrix matrix;
    BipartiteShape shape;
};

// Eigenvalue differences below this are one degenerate level for the T=0
// projector.
inline constexpr double kDegeneracyTol = 1e-9;

// Validates counts and orthonormality (1e-8), then shifts the spectrum so the
// minimum is exactly zero. Eigenvectors and label pass through unchanged.
HamiltonianSpec normalize_spec(HamiltonianSpec raw);

// Gibbs occupation of each eigenvector: exp(-(h_j - h_min)/T) normalized.
// T = 0 spreads 1/m over the degenerate ground level; T = infinity gives 1/D.
std::vector<double> gibbs_weights(const HamiltonianSpec& spec, Temperature t);

DensityMatrix gibbs_state(const HamiltonianSpec& spec, Temperature t);

// U(T); equals 0 at T = 0 and mean_energy at T = infinity.
double energy(const HamiltonianSpec& spec, Temperature t);
double mean_energy(const HamiltonianSpec& spec);  // tr(H)/D

double purity(const DensityMatrix& rho);                            // tr(rho^2)
double thermal_purity(const HamiltonianSpec& spec, Temperature t);  // sum of w_j^2

// sum_j h_j |e_j><e_j|
ComplexMatrix materialize(const HamiltonianSpec& spec);

// Hermitian within 1e-10, unit trace within 1e-12, eigenvalues >= -1e-12.
void validate_density_matrix(const DensityMatrix& rho);
DensityMatrix make_density_matrix(ComplexMatrix matrix, const BipartiteShape& shape);

// Throws unless min eigenvalue is 0 (i.e. the spec went through normalize_spec).
void require_normalized(const HamiltonianSpec& spec);

}  // namespace thermalent
