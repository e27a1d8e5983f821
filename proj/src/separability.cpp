#include "thermalent/separability.hpp"

#include <cmath>

namespace thermalent {

double separability_modulus(double lambda_min, std::size_t dim) {
    const double negative_part = std::min(lambda_min, 0.0);
    return 1.0 / (1.0 + static_cast<double>(dim) * std::abs(negative_part));
}

EntanglementVerdict analyze(const DensityMatrix& omega, const AnalyzeOptions& opts) {
    validate_shape(omega.shape);

    EntanglementVerdict v;
    v.lambda_min = min_eigenvalue(partial_transpose(omega.matrix, omega.shape));
    v.modulus = separability_modulus(v.lambda_min, omega.shape.dim());
    v.robustness = 1.0 / v.modulus - 1.0;
    v.entangled = v.lambda_min < -opts.zero_tol;
    v.marginal = std::abs(v.lambda_min) <= opts.marginal_tol;
    return v;
}

double purity_critical_value(const BipartiteShape& shape) {
    validate_shape(shape);
    return shape.dim() == 4 ? 1.0 / 3.0 : 1.0 / 5.0;
}

bool purity_detector(const DensityMatrix& omega) {
    return purity(omega) <= purity_critical_value(omega.shape);
}

}  // namespace thermalent
