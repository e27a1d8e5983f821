#pragma once

#include <cstdint>
#include <optional>

#include "thermalent/hamiltonian.hpp"

namespace thermalent {

// Pure product state psi (x) phi with its energy expectation.
struct ProductAnsatz {
    std::vector<Complex> psi;  // qubit factor
    std::vector<Complex> phi;  // second factor
    double value = 0.0;        // <psi (x) phi | H | psi (x) phi>
};

struct EtaResult {
    double eta = 0.0;
    ProductAnsatz best;
    int restarts_used = 0;
    std::optional<double> oracle_value;
};

double product_energy(const ComplexMatrix& h, const BipartiteShape& shape,
                      const std::vector<Complex>& psi, const std::vector<Complex>& phi);

// Alternating descent: each half-sweep replaces one factor by the ground
// eigenvector of the Hamiltonian conditioned on the other. The energy is
// nonincreasing every half-sweep; stops once a full sweep gains < energy_tol.
ProductAnsatz seesaw_descend(const ComplexMatrix& h, const BipartiteShape& shape,
                             ProductAnsatz start, int max_sweeps = 500,
                             double energy_tol = 1e-12);

// eta = min over pure product states of the energy, estimated by seeded
// see-saw restarts from Haar-random product states. Reproducible across
// platforms for a fixed (restarts, seed).
EtaResult eta_seesaw(const HamiltonianSpec& spec, int restarts = 64, std::uint64_t seed = 0);

// 32 for qubit/qubit; 16 for qubit/qutrit (the six-angle grid grows too fast).
int default_oracle_resolution(const BipartiteShape& shape);

/// Brute-force product-energy minimum over a deterministic angular grid
/// (Bloch angles for the qubit, two amplitude angles plus two phases for the
/// qutrit), polished by one see-saw descent from the best grid point.
/// Independent of eta_seesaw's stochastic path; overestimates the true
/// minimum by O(resolution^-2) before polish.
double eta_grid_oracle(const HamiltonianSpec& spec, int resolution);

// The unique temperature with U(T) = eta, located by bisection to 1e-9;
// zero when eta is at the ground energy.
Temperature t_h(const HamiltonianSpec& spec, double eta);

}  // namespace thermalent
