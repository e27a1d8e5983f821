// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances in code.

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "thermalent/corpus.hpp"
#include "thermalent/critical.hpp"
#include "thermalent/random_states.hpp"
#include "thermalent/witness.hpp"

using namespace thermalent;

namespace {

struct Criterion {
    int failures = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        ++failures;
        notes.push_back(what);
    }
};

struct ExampleResults {
    HamiltonianSpec spec;
    SegmentReport report;
    EtaResult eta;
    double t_h_value = 0.0;
};

std::vector<Complex> rv(std::vector<double> entries) {
    std::vector<Complex> v;
    for (double e : entries) v.emplace_back(e, 0.0);
    return v;
}

HamiltonianSpec noninteracting_spec() {
    HamiltonianSpec raw;
    raw.shape = BipartiteShape::qubit_qubit();
    raw.eigenvalues = {0.0, 0.5, 1.0, 1.5};
    raw.eigenvectors = {rv({1, 0, 0, 0}), rv({0, 1, 0, 0}), rv({0, 0, 1, 0}), rv({0, 0, 0, 1})};
    raw.label = "noninteracting";
    return normalize_spec(std::move(raw));
}

HamiltonianSpec degenerate_ground_spec() {
    const double s = std::sqrt(0.5);
    HamiltonianSpec raw;
    raw.shape = BipartiteShape::qubit_qubit();
    raw.eigenvalues = {0.0, 0.0, 1.0, 2.0};
    raw.eigenvectors = {rv({1, 0, 0, 0}), rv({0, s, s, 0}), rv({0, s, -s, 0}), rv({0, 0, 0, 1})};
    raw.label = "degenerate-ground";
    return normalize_spec(std::move(raw));
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

// ---------------------------------------------------------------------------

void criterion_1(const std::map<std::string, ExampleResults>& results, Criterion& c) {
    constexpr double kTol = 0.01;
    constexpr double kTolTH = 0.02;  // eta is numerical, possibly inexact

    for (const corpus::ReferenceRecord& record : corpus::reference_values()) {
        const ExampleResults& r = results.at(record.example);
        const std::string& name = record.example;

        if (record.boundaries) {
            if (record.boundaries->size() != r.report.boundaries.size()) {
                c.expect(false, name + ": expected " + std::to_string(record.boundaries->size()) +
                                    " boundaries, found " +
                                    std::to_string(r.report.boundaries.size()));
            } else {
                for (std::size_t i = 0; i < record.boundaries->size(); ++i) {
                    const double published = (*record.boundaries)[i].value;
                    const double computed = r.report.boundaries[i];
                    const double tol = kTol * (*record.boundaries)[i].tol_scale;
                    c.expect(std::abs(computed - published) <= tol,
                             name + " boundary " + std::to_string(i + 1) + ": published " +
                                 fmt(published) + ", computed " + fmt(computed) + " (tol " +
                                 fmt(tol) + ")");
                }
            }
        }
        if (record.t_star)
            c.expect(std::abs(r.report.t_star - *record.t_star) <= kTol,
                     name + " T_*: published " + fmt(*record.t_star) + ", computed " +
                         fmt(r.report.t_star));
        if (record.t_h)
            c.expect(std::abs(r.t_h_value - *record.t_h) <= kTolTH,
                     name + " T_H: published " + fmt(*record.t_h) + ", computed " +
                         fmt(r.t_h_value));
    }

    // fig1: T_H = T_E = 0 exactly.
    {
        const ExampleResults& r = results.at("fig1");
        c.expect(r.report.t_e == 0.0, "fig1 t_e must be exactly 0");
        c.expect(r.t_h_value == 0.0, "fig1 t_h must be exactly 0");
        c.expect(lambda_min_at(r.spec, Temperature(0.0)) >= -1e-12,
                 "fig1 lambda_min(rho_0) must be >= -1e-12");
        c.expect(r.eta.eta <= 1e-9, "fig1 eta must be <= 1e-9, got " + fmt(r.eta.eta));
    }
    // fig1-variant: no entangled temperature on [0, T_*].
    {
        const ExampleResults& r = results.at("fig1-variant");
        c.expect(r.report.boundaries.empty() && r.report.t_s == 0.0,
                 "fig1-variant must have no entangled temperatures");
    }
}

void criterion_2(const std::map<std::string, ExampleResults>& results, Criterion& c) {
    const std::vector<std::pair<std::string, Scenario>> expected = {
        {"fig1", Scenario::separable_then_entangled},
        {"fig4", Scenario::separable_then_entangled},
        {"fig2-solid", Scenario::normal},
        {"fig2-dashed", Scenario::normal},
        {"fig3", Scenario::abnormal},
        {"fig1-variant", Scenario::trivial},
        {"fig3-inset-1", Scenario::abnormal},
        {"fig3-inset-1.5", Scenario::abnormal},
    };
    for (const auto& [name, scenario] : expected)
        c.expect(results.at(name).report.scenario == scenario,
                 name + ": expected scenario " + std::string(to_string(scenario)) + ", got " +
                     to_string(results.at(name).report.scenario));
}

void criterion_3(const std::map<std::string, ExampleResults>& results, Criterion& c) {
    const auto check_ordering = [&c](const std::string& name, double th, const SegmentReport& rep) {
        c.expect(th <= rep.t_e + 1e-9,
                 name + ": t_h " + fmt(th) + " > t_e " + fmt(rep.t_e));
        c.expect(rep.t_e <= rep.t_s + 1e-12,
                 name + ": t_e " + fmt(rep.t_e) + " > t_s " + fmt(rep.t_s));
        c.expect(rep.t_s <= rep.t_star + 1e-12,
                 name + ": t_s " + fmt(rep.t_s) + " > t_star " + fmt(rep.t_star));
    };

    for (const auto& [name, r] : results) check_ordering(name, r.t_h_value, r.report);

    for (const BipartiteShape shape :
         {BipartiteShape::qubit_qubit(), BipartiteShape::qubit_qutrit()}) {
        SplitMix64 rng(shape.d2 == 2 ? 1111 : 2222);
        for (int trial = 0; trial < 200; ++trial) {
            const HamiltonianSpec spec = random_hamiltonian_spec(rng, shape);
            const SegmentReport rep = find_segments(spec);
            const double th = t_h(spec, eta_seesaw(spec, 64, 0).eta).value();
            check_ordering("random-" + std::to_string(shape.d2) + "-" + std::to_string(trial), th,
                           rep);
        }
    }
}

void criterion_4(Criterion& c) {
    for (const BipartiteShape shape :
         {BipartiteShape::qubit_qubit(), BipartiteShape::qubit_qutrit()}) {
        const double lower = shape.dim() == 4 ? 1.0 / 3.0 : 1.0 / 4.0;
        SplitMix64 rng(shape.d2 == 2 ? 333 : 444);
        for (int trial = 0; trial < 1000; ++trial) {
            const EntanglementVerdict v = analyze(random_density_matrix(rng, shape));
            c.expect(v.modulus >= lower - 1e-12 && v.modulus <= 1.0,
                     "modulus out of bounds: " + fmt(v.modulus));
            c.expect((v.modulus == 1.0) == (v.lambda_min >= 0.0),
                     "modulus/lambda equivalence violated at lambda " + fmt(v.lambda_min));
        }
    }
}

void criterion_5(const std::map<std::string, ExampleResults>& results, Criterion& c) {
    for (const auto& [name, r] : results) {
        const double oracle = eta_grid_oracle(r.spec, default_oracle_resolution(r.spec.shape));
        c.expect(r.eta.eta <= oracle + 1e-9,
                 name + ": eta " + fmt(r.eta.eta) + " above oracle " + fmt(oracle));
    }
    for (const HamiltonianSpec& spec : {noninteracting_spec(), degenerate_ground_spec()}) {
        const double eta = eta_seesaw(spec, 64, 0).eta;
        const double oracle = eta_grid_oracle(spec, default_oracle_resolution(spec.shape));
        c.expect(std::abs(eta) <= 1e-9, spec.label + ": eta " + fmt(eta) + " not ~0");
        c.expect(std::abs(oracle) <= 1e-9, spec.label + ": oracle " + fmt(oracle) + " not ~0");
    }
}

void criterion_6(const std::map<std::string, ExampleResults>& results, Criterion& c) {
    for (const auto& [name, r] : results) {
        const ComplexMatrix h = materialize(r.spec);
        double prev_energy = -1.0;
        double prev_purity = 2.0;
        bool first = true;
        for (const ThermalPoint& p : scan(r.spec, r.report.t_star, 1001)) {
            if (!first) {
                c.expect(p.energy >= prev_energy, name + ": energy decreased at T " +
                                                      fmt(p.temperature));
                c.expect(p.purity <= prev_purity, name + ": purity increased at T " +
                                                      fmt(p.temperature));
            }
            first = false;
            prev_energy = p.energy;
            prev_purity = p.purity;

            const DensityMatrix rho = gibbs_state(r.spec, Temperature(p.temperature));
            c.expect(std::abs(rho.matrix.trace() - 1.0) <= 1e-12,
                     name + ": trace defect at T " + fmt(p.temperature));
            c.expect(min_eigenvalue(rho.matrix) >= -1e-12,
                     name + ": negative eigenvalue at T " + fmt(p.temperature));
            ComplexMatrix comm = rho.matrix * h;
            comm -= h * rho.matrix;
            c.expect(comm.max_abs() <= 1e-10,
                     name + ": [rho, H] too large at T " + fmt(p.temperature));
        }
    }
}

void criterion_7(const std::map<std::string, ExampleResults>& results, Criterion& c) {
    for (const auto& [name, r] : results) {
        for (const ThermalPoint& p : scan(r.spec, 1.5 * r.report.t_star, 301)) {
            const DensityMatrix rho = gibbs_state(r.spec, Temperature(p.temperature));
            if (purity_detector(rho))
                c.expect(!analyze(rho).entangled,
                         name + ": purity certificate contradicts PPT at T " +
                             fmt(p.temperature));
        }
        c.expect(r.report.t_star > 0.0, name + ": t_star unexpectedly 0");
        for (const double factor : {1.01, 2.0, 10.0})
            c.expect(
                purity_detector(gibbs_state(r.spec, Temperature(factor * r.report.t_star))),
                name + ": not purity-certified at " + fmt(factor) + " * t_star");
    }
    for (const BipartiteShape shape :
         {BipartiteShape::qubit_qubit(), BipartiteShape::qubit_qutrit()}) {
        SplitMix64 rng(shape.d2 == 2 ? 555 : 666);
        for (int trial = 0; trial < 1000; ++trial) {
            const DensityMatrix rho = random_density_matrix(rng, shape);
            if (purity_detector(rho))
                c.expect(!analyze(rho).entangled, "random state: certificate contradicts PPT");
        }
    }
}

void criterion_8(const std::map<std::string, ExampleResults>& results, Criterion& c) {
    for (const std::string name : {"fig1", "fig3", "fig4"}) {
        const ExampleResults& r = results.at(name);
        if (!r.report.wehrl_pair) {
            c.expect(false, name + ": wehrl_pair missing");
            continue;
        }
        const auto [t1, t2] = *r.report.wehrl_pair;
        c.expect(t1 < t2, name + ": wehrl pair not ordered");
        c.expect(!analyze(gibbs_state(r.spec, Temperature(t1))).entangled,
                 name + ": rho(T1) not separable at T1 " + fmt(t1));
        c.expect(analyze(gibbs_state(r.spec, Temperature(t2))).entangled,
                 name + ": rho(T2) not entangled at T2 " + fmt(t2));
    }
}

}  // namespace

int main() {
    std::map<std::string, ExampleResults> results;
    for (const std::string& name : corpus::example_names()) {
        ExampleResults r;
        r.spec = corpus::example(name);
        r.report = find_segments(r.spec);
        r.eta = eta_seesaw(r.spec, 64, 0);
        r.t_h_value = t_h(r.spec, r.eta.eta).value();
        results.emplace(name, std::move(r));
    }

    int total_failures = 0;
    const auto report = [&total_failures](int index, const char* description,
                                          const Criterion& c) {
        std::printf("criterion %d [%s] %s\n", index, c.failures == 0 ? "PASS" : "FAIL",
                    description);
        for (const std::string& note : c.notes) std::printf("    %s\n", note.c_str());
        total_failures += c.failures;
    };

    {
        Criterion c;
        criterion_1(results, c);
        report(1, "figure-caption regression (temperatures within 0.01, T_H within 0.02)", c);
    }
    {
        Criterion c;
        criterion_2(results, c);
        report(2, "scenario classification of the bundled corpus", c);
    }
    {
        Criterion c;
        criterion_3(results, c);
        report(3, "ordering t_h <= t_e <= t_s <= t_star (bundled + 200 random specs per shape)",
               c);
    }
    {
        Criterion c;
        criterion_4(c);
        report(4, "separability modulus bounds on 1000 random states per shape", c);
    }
    {
        Criterion c;
        criterion_5(results, c);
        report(5, "see-saw eta never exceeds the polished grid oracle", c);
    }
    {
        Criterion c;
        criterion_6(results, c);
        report(6, "thermodynamic monotonicity and Gibbs-state invariants on 1001-point grids", c);
    }
    {
        Criterion c;
        criterion_7(results, c);
        report(7, "purity certificates are consistent and cover t_star multiples", c);
    }
    {
        Criterion c;
        criterion_8(results, c);
        report(8, "separable-then-entangled counterexample pairs for fig1, fig3, fig4", c);
    }

    if (total_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d check(s) failed\n", total_failures);
    return 1;
}
