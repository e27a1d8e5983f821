#include "thermalent/critical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace thermalent {

const char* to_string(Scenario s) {
    switch (s) {
        case Scenario::trivial: return "trivial";
        case Scenario::normal: return "normal";
        case Scenario::separable_then_entangled: return "separable-then-entangled";
        case Scenario::abnormal: return "abnormal";
    }
    return "?";
}

const char* to_string(SegmentKind k) {
    switch (k) {
        case SegmentKind::separable: return "separable";
        case SegmentKind::entangled: return "entangled";
        case SegmentKind::marginal: return "marginal";
    }
    return "?";
}

double lambda_min_at(const HamiltonianSpec& spec, Temperature t) {
    const DensityMatrix rho = gibbs_state(spec, t);
    return min_eigenvalue(partial_transpose(rho.matrix, rho.shape));
}

std::vector<ThermalPoint> scan_range(const HamiltonianSpec& spec, double t_min, double t_max,
                                     std::size_t points) {
    require_normalized(spec);
    if (points < 2) throw Error("scan: at least 2 grid points required");
    if (!(t_max >= t_min) || t_min < 0.0)
        throw Error("scan: temperature range must satisfy 0 <= t_min <= t_max");

    std::vector<ThermalPoint> out;
    out.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double t_val =
            t_min + (t_max - t_min) * static_cast<double>(i) / static_cast<double>(points - 1);
        const Temperature t(t_val);
        ThermalPoint p;
        p.temperature = t_val;
        p.energy = energy(spec, t);
        p.purity = thermal_purity(spec, t);
        p.lambda_min = lambda_min_at(spec, t);
        p.modulus = separability_modulus(p.lambda_min, spec.shape.dim());
        out.push_back(p);
    }
    return out;
}

std::vector<ThermalPoint> scan(const HamiltonianSpec& spec, double t_max, std::size_t points) {
    if (!(t_max > 0.0)) throw Error("scan: t_max must be positive");
    return scan_range(spec, 0.0, t_max, points);
}

Temperature t_star(const HamiltonianSpec& spec) {
    require_normalized(spec);
    const double critical = purity_critical_value(spec.shape);
    if (thermal_purity(spec, Temperature(0.0)) <= critical) return Temperature(0.0);

    // Purity is nonincreasing in T and tends to 1/D < critical.
    double hi = 1.0;
    int doublings = 0;
    while (thermal_purity(spec, Temperature(hi)) > critical) {
        hi *= 2.0;
        if (++doublings > 200) throw Error("t_star: failed to bracket the purity crossing");
    }
    double lo = 0.0;
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        if (thermal_purity(spec, Temperature(mid)) > critical)
            lo = mid;
        else
            hi = mid;
    }
    return Temperature(0.5 * (lo + hi));
}

namespace {

// Entanglement predicate on the curve value; exact zeros sit on the
// separable side, matching the closedness of the separable temperature set.
bool is_entangled_value(double lambda, double zero_tol) { return lambda < -zero_tol; }

// Bisects a bracket with differing predicate values down to refine_tol, then
// keeps halving until the curve value at the midpoint is within 1e-9 of zero
// (or the bracket hits floating-point resolution). The extra polish keeps
// boundary residuals well under the 1e-8 reporting guarantee even for steep
// crossings.
double bisect_boundary(const std::function<double(double)>& lambda, double lo, double hi,
                       bool lo_entangled, const SegmentOptions& opts) {
    double mid = 0.5 * (lo + hi);
    while (true) {
        mid = 0.5 * (lo + hi);
        const double width = hi - lo;
        if (width <= 1e-13 * (1.0 + std::abs(mid))) break;
        const double value = lambda(mid);
        if (width <= opts.refine_tol && std::abs(value) <= 1e-9) break;
        if (is_entangled_value(value, opts.zero_tol) == lo_entangled)
            lo = mid;
        else
            hi = mid;
    }
    return mid;
}

struct GoldenResult {
    double x;
    double value;
};

GoldenResult golden_minimize(const std::function<double(double)>& f, double lo, double hi,
                             double x_tol) {
    static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > x_tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc < fd ? GoldenResult{c, fc} : GoldenResult{d, fd};
}

}  // namespace

SegmentReport analyze_lambda_curve(const std::function<double(double)>& lambda, double t_star_value,
                                   const SegmentOptions& opts) {
    SegmentReport report;
    report.t_star = t_star_value;
    if (t_star_value <= 0.0) {
        // Certified separable from T = 0 on (constant Hamiltonians included).
        report.segments = {Segment{0.0, 0.0, SegmentKind::separable}};
        return report;
    }

    const std::size_t n = std::max<std::size_t>(opts.grid_points, 16);
    std::vector<double> ts(n), values(n);
    for (std::size_t i = 0; i < n; ++i) {
        ts[i] = t_star_value * static_cast<double>(i) / static_cast<double>(n - 1);
        values[i] = lambda(ts[i]);
    }

    std::vector<double> boundaries;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const bool ent_lo = is_entangled_value(values[i], opts.zero_tol);
        const bool ent_hi = is_entangled_value(values[i + 1], opts.zero_tol);
        if (ent_lo != ent_hi)
            boundaries.push_back(bisect_boundary(lambda, ts[i], ts[i + 1], ent_lo, opts));
    }

    // Shallow positive local minima can hide a dip narrower than the grid
    // step; refine them before trusting the grid's sign pattern.
    std::vector<double> touches;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!(values[i] > 0.0 && values[i] <= 1e-4)) continue;
        if (!(values[i] < values[i - 1] && values[i] <= values[i + 1])) continue;
        const GoldenResult bottom =
            golden_minimize(lambda, ts[i - 1], ts[i + 1], opts.refine_tol);
        if (is_entangled_value(bottom.value, opts.zero_tol)) {
            boundaries.push_back(bisect_boundary(lambda, ts[i - 1], bottom.x, false, opts));
            boundaries.push_back(bisect_boundary(lambda, bottom.x, ts[i + 1], true, opts));
        } else if (std::abs(bottom.value) <= opts.marginal_tol) {
            touches.push_back(bottom.x);
        }
    }

    std::sort(boundaries.begin(), boundaries.end());
    const double dedupe = 2.0 * opts.refine_tol;
    std::vector<double> unique;
    for (double b : boundaries)
        if (unique.empty() || b - unique.back() > dedupe) unique.push_back(b);
    report.boundaries = unique;

    report.t_e = is_entangled_value(values.front(), opts.zero_tol) && !unique.empty()
                     ? unique.front()
                     : 0.0;
    report.t_s = unique.empty() ? 0.0 : unique.back();

    // Tile [0, t_star]; classify each cell by the curve at its midpoint.
    std::vector<double> cuts;
    cuts.push_back(0.0);
    for (double b : unique) cuts.push_back(b);
    if (cuts.back() < t_star_value) cuts.push_back(t_star_value);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        if (!(hi > lo)) continue;
        const bool ent = is_entangled_value(lambda(0.5 * (lo + hi)), opts.zero_tol);
        report.segments.push_back(
            Segment{lo, hi, ent ? SegmentKind::entangled : SegmentKind::separable});
    }
    if (report.segments.empty())
        report.segments = {Segment{0.0, t_star_value, SegmentKind::separable}};

    // Surface marginal touches as zero-width segments inside their host cell.
    for (double t : touches) {
        bool near_boundary = false;
        for (double b : unique)
            if (std::abs(t - b) <= dedupe) near_boundary = true;
        if (near_boundary) continue;
        for (std::size_t i = 0; i < report.segments.size(); ++i) {
            Segment host = report.segments[i];
            if (t <= host.lower || t >= host.upper) continue;
            report.segments[i] = Segment{host.lower, t, host.kind};
            report.segments.insert(report.segments.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                   {Segment{t, t, SegmentKind::marginal},
                                    Segment{t, host.upper, host.kind}});
            break;
        }
    }

    if (report.t_s == 0.0)
        report.scenario = Scenario::trivial;
    else if (report.t_e == 0.0)
        report.scenario = Scenario::separable_then_entangled;
    else if (report.t_e == report.t_s)
        report.scenario = Scenario::normal;
    else
        report.scenario = Scenario::abnormal;

    // First separable segment followed by an entangled one, if any.
    for (std::size_t i = 0; i + 1 < report.segments.size() && !report.wehrl_pair; ++i) {
        if (report.segments[i].kind != SegmentKind::separable) continue;
        for (std::size_t j = i + 1; j < report.segments.size(); ++j) {
            if (report.segments[j].kind == SegmentKind::marginal) continue;
            if (report.segments[j].kind == SegmentKind::entangled) {
                report.wehrl_pair = std::make_pair(
                    0.5 * (report.segments[i].lower + report.segments[i].upper),
                    0.5 * (report.segments[j].lower + report.segments[j].upper));
            }
            break;
        }
    }
    return report;
}

SegmentReport find_segments(const HamiltonianSpec& spec, const SegmentOptions& opts) {
    require_normalized(spec);
    const Temperature ts = t_star(spec);
    const auto curve = [&spec](double t) { return lambda_min_at(spec, Temperature(t)); };
    return analyze_lambda_curve(curve, ts.value(), opts);
}

}  // namespace thermalent
