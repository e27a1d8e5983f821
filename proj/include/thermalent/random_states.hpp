#pragma once

#include "thermalent/hamiltonian.hpp"
#include "thermalent/rng.hpp"

namespace thermalent {

// Full-rank state G G^dagger / tr(G G^dagger) with complex-normal G.
DensityMatrix random_density_matrix(SplitMix64& rng, const BipartiteShape& shape);

// Orthonormalized complex-normal eigenbasis, eigenvalues uniform on [0, 5];
// returned normalized.
HamiltonianSpec random_hamiltonian_spec(SplitMix64& rng, const BipartiteShape& shape);

}  // namespace thermalent
