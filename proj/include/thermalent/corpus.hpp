#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thermalent/critical.hpp"
#include "thermalent/hamiltonian.hpp"

namespace thermalent::corpus {

// Bundled example Hamiltonians with published critical temperatures.
std::vector<std::string> example_names();
bool has_example(const std::string& name);
HamiltonianSpec example(const std::string& name);  // normalized

struct ReferenceBoundary {
    double value;
    double tol_scale = 1.0;  // multiplies the comparison tolerance
};

// Published values for one example. `boundaries` is the full expected zero
// set of lambda_min on (0, t_star]; absent entries were never published and
// are reported without comparison.
struct ReferenceRecord {
    std::string example;
    std::optional<double> t_h;  // compared at twice the tolerance
    std::optional<std::vector<ReferenceBoundary>> boundaries;
    std::optional<double> t_star;
    Scenario scenario;
};

const std::vector<ReferenceRecord>& reference_values();

}  // namespace thermalent::corpus
