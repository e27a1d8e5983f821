#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "thermalent/separability.hpp"

namespace thermalent {

struct ThermalPoint {
    double temperature;
    double energy;
    double purity;
    double lambda_min;  // of the partial transpose of rho_T
    double modulus;
};

// trivial: T_E = T_S = 0; normal: 0 < T_E = T_S;
// separable_then_entangled: T_E = 0 < T_S; abnormal: 0 < T_E < T_S.
enum class Scenario { trivial, normal, separable_then_entangled, abnormal };
const char* to_string(Scenario s);

enum class SegmentKind { separable, entangled, marginal };
const char* to_string(SegmentKind k);

struct Segment {
    double lower;
    double upper;
    SegmentKind kind;
};

struct SegmentReport {
    std::optional<double> t_h;       // set by callers that computed eta
    double t_e = 0.0;
    std::vector<double> boundaries;  // zeros of lambda_min in (0, t_star]
    double t_s = 0.0;
    double t_star = 0.0;
    std::vector<Segment> segments;   // tiles [0, t_star]; marginal touches are zero-width
    Scenario scenario = Scenario::trivial;
    // Midpoints of the first separable segment that precedes an entangled one
    // and of that entangled segment; the pair witnesses that no concave
    // unitarily invariant detector can certify every separable state.
    std::optional<std::pair<double, double>> wehrl_pair;
};

std::vector<ThermalPoint> scan(const HamiltonianSpec& spec, double t_max, std::size_t points);
std::vector<ThermalPoint> scan_range(const HamiltonianSpec& spec, double t_min, double t_max,
                                     std::size_t points);

// Temperature where the purity drops to its critical value; every T at or
// above it is certified separable. Zero when already certified at T = 0.
Temperature t_star(const HamiltonianSpec& spec);

struct SegmentOptions {
    std::size_t grid_points = 4096;
    double refine_tol = 1e-6;
    double zero_tol = 1e-9;  // shared with AnalyzeOptions; see that definition
    double marginal_tol = 1e-10;
};

/// Scans lambda_min over [0, t_star], brackets and bisects every sign change,
/// golden-section refines shallow positive local minima to hunt sub-grid
/// dips, and assembles the segment structure with scenario label and
/// counterexample pair.
SegmentReport find_segments(const HamiltonianSpec& spec, const SegmentOptions& opts = {});

// Same analysis for an arbitrary curve on [0, t_star]; find_segments feeds it
// the Gibbs-state curve. Kept separate so the bracketing logic is testable
// against synthetic curves with known structure.
SegmentReport analyze_lambda_curve(const std::function<double(double)>& lambda, double t_star,
                                   const SegmentOptions& opts = {});

double lambda_min_at(const HamiltonianSpec& spec, Temperature t);

}  // namespace thermalent
