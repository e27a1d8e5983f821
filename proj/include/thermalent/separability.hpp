#pragma once

#include "thermalent/hamiltonian.hpp"

namespace thermalent {

struct AnalyzeOptions {
    // Entangled iff lambda_min < -zero_tol. Gibbs families can carry PT
    // negativity that decays double-exponentially toward T = 0; 1e-9 is the
    // band below which it is treated as an exact zero. The reference
    // critical temperatures bundled with this library were extracted at this
    // precision.
    double zero_tol = 1e-9;
    double marginal_tol = 1e-10;  // |lambda_min| <= marginal_tol flags a near-touch
};

// Exact entanglement decision for D in {4, 6}: the partial transpose has a
// negative eigenvalue exactly when the state is entangled, and the
// separability modulus and random robustness follow in closed form.
struct EntanglementVerdict {
    double lambda_min = 0.0;  // minimal eigenvalue of the partial transpose
    double modulus = 1.0;     // l(omega) = 1/(1 + D |min(lambda_min, 0)|)
    double robustness = 0.0;  // 1/l - 1
    bool entangled = false;
    bool marginal = false;
};

EntanglementVerdict analyze(const DensityMatrix& omega, const AnalyzeOptions& opts = {});

double separability_modulus(double lambda_min, std::size_t dim);

// Critical purity: tr(omega^2) at or below it certifies separability.
// 1/3 for two qubits; the safe bound 1/5 for qubit/qutrit.
double purity_critical_value(const BipartiteShape& shape);

// True certifies separability; false is inconclusive.
bool purity_detector(const DensityMatrix& omega);

}  // namespace thermalent
