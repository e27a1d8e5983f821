#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "thermalent/critical.hpp"
#include "thermalent/hamiltonian.hpp"

namespace thermalent {

// Line-oriented Hamiltonian format. '#' starts a comment; keys are
//   label <free text>                (optional)
//   dims <d1> <d2>
//   eigenvalues <h_1> ... <h_D>
//   eigenvector <entry_1> ... <entry_D>   (one line per eigenvector, in order)
// where an entry is a bare real or a complex pair [re, im].
HamiltonianSpec parse_hamiltonian(std::istream& in);
HamiltonianSpec parse_hamiltonian_text(const std::string& text);
HamiltonianSpec load_hamiltonian_file(const std::string& path);

// 17 significant digits; parsing the output reproduces the spec exactly.
std::string serialize_hamiltonian(const HamiltonianSpec& spec);

// Header T,energy,purity,lambda_min,modulus; 9 significant digits.
std::string to_csv(const std::vector<ThermalPoint>& points);

struct CriticalReport {
    std::string tool_version;
    std::string label;
    BipartiteShape shape;
    SegmentOptions options;
    std::optional<double> eta;
    std::optional<int> restarts;
    std::optional<std::uint64_t> seed;
    SegmentReport segments;
};

// Key-value text with a stable field order; temperatures carry 6 significant
// digits. parse_report(serialize_report(r)) -> serialize_report is a fixed
// point.
std::string serialize_report(const CriticalReport& report);
CriticalReport parse_report(const std::string& text);

}  // namespace thermalent
