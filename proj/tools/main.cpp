// thermalent: Gibbs-state entanglement analysis across temperature for
// qubit/qubit and qubit/qutrit Hamiltonians given in spectral form.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thermalent/corpus.hpp"
#include "thermalent/critical.hpp"
#include "thermalent/io.hpp"
#include "thermalent/version.hpp"
#include "thermalent/witness.hpp"

namespace {

using namespace thermalent;

constexpr int kExitComparisonFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitComputeError = 3;

struct InputArgs {
    std::string hamiltonian_path;
    std::string example;
};

void add_input_options(CLI::App* cmd, InputArgs* args) {
    cmd->add_option("--hamiltonian", args->hamiltonian_path, "Path to a Hamiltonian file");
    cmd->add_option("--paper-example", args->example,
                    "Bundled example name (fig1, fig1-variant, fig2-solid, fig2-dashed, fig3, "
                    "fig3-variant, fig3-inset-1, fig3-inset-1.5, fig4)");
}

HamiltonianSpec resolve_input(const InputArgs& args) {
    const bool have_path = !args.hamiltonian_path.empty();
    const bool have_example = !args.example.empty();
    if (have_path == have_example)
        throw Error("exactly one of --hamiltonian and --paper-example is required");
    if (have_example) return corpus::example(args.example);
    return load_hamiltonian_file(args.hamiltonian_path);
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot open output file '" + out_path + "'");
    out << text;
}

std::string fmt6(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

// Published-value comparison for one bundled example; one row per quantity.
struct ComparisonRow {
    std::string example;
    std::string quantity;
    std::string published;
    std::string computed;
    std::string diff;
    std::string status;  // "ok", "FAIL", "info"
};

std::vector<std::string> boundary_names(const corpus::ReferenceRecord& record, std::size_t n) {
    std::vector<std::string> names(n);
    if (n == 0) return names;
    const bool starts_entangled =
        record.scenario == Scenario::normal || record.scenario == Scenario::abnormal;
    if (record.scenario == Scenario::normal && n == 1) {
        names[0] = "T_E=T_S";
        return names;
    }
    std::size_t interior = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (starts_entangled && i == 0)
            names[i] = "T_E";
        else if (i + 1 == n)
            names[i] = "T_S";
        else
            names[i] = "T_" + std::to_string(interior++);
    }
    return names;
}

int cmd_paper_figures(double tolerance) {
    std::vector<ComparisonRow> rows;
    int failures = 0;

    auto add_value_row = [&](const std::string& example, const std::string& quantity,
                             double published, double computed, double tol) {
        const double diff = std::abs(computed - published);
        const bool ok = diff <= tol;
        if (!ok) ++failures;
        rows.push_back({example, quantity, fmt6(published), fmt6(computed), fmt6(diff),
                        ok ? "ok" : "FAIL"});
    };

    for (const corpus::ReferenceRecord& record : corpus::reference_values()) {
        const HamiltonianSpec spec = corpus::example(record.example);
        const SegmentReport report = find_segments(spec);

        if (record.boundaries) {
            if (record.boundaries->size() != report.boundaries.size()) {
                ++failures;
                rows.push_back({record.example, "boundaries",
                                std::to_string(record.boundaries->size()) + " values",
                                std::to_string(report.boundaries.size()) + " values", "-",
                                "FAIL"});
            } else {
                const std::vector<std::string> names =
                    boundary_names(record, record.boundaries->size());
                for (std::size_t i = 0; i < record.boundaries->size(); ++i)
                    add_value_row(record.example, names[i], (*record.boundaries)[i].value,
                                  report.boundaries[i],
                                  tolerance * (*record.boundaries)[i].tol_scale);
            }
        } else {
            // Values were never published for this example; report them.
            rows.push_back({record.example, "T_E", "-", fmt6(report.t_e), "-", "info"});
            rows.push_back({record.example, "T_S", "-", fmt6(report.t_s), "-", "info"});
        }

        if (record.t_star)
            add_value_row(record.example, "T_*", *record.t_star, report.t_star, tolerance);

        if (record.t_h) {
            const EtaResult eta = eta_seesaw(spec, 64, 0);
            const Temperature th = t_h(spec, eta.eta);
            add_value_row(record.example, "T_H", *record.t_h, th.value(), 2.0 * tolerance);
        }

        const bool scenario_ok = report.scenario == record.scenario;
        if (!scenario_ok) ++failures;
        rows.push_back({record.example, "scenario", to_string(record.scenario),
                        to_string(report.scenario), "-", scenario_ok ? "ok" : "FAIL"});
    }

    std::printf("%-16s %-10s %-26s %-26s %-10s %s\n", "example", "quantity", "published",
                "computed", "|diff|", "status");
    for (const ComparisonRow& row : rows)
        std::printf("%-16s %-10s %-26s %-26s %-10s %s\n", row.example.c_str(),
                    row.quantity.c_str(), row.published.c_str(), row.computed.c_str(),
                    row.diff.c_str(), row.status.c_str());
    std::printf("%d comparison(s) failed (tolerance %.3g, T_H at twice that)\n", failures,
                tolerance);
    return failures == 0 ? 0 : kExitComparisonFailure;
}

std::string format_complex_entry(const Complex& e) {
    char buf[80];
    if (e.imag() == 0.0)
        std::snprintf(buf, sizeof(buf), "%.9g", e.real());
    else
        std::snprintf(buf, sizeof(buf), "[%.9g, %.9g]", e.real(), e.imag());
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Thermal-state entanglement analysis for qubit/qubit and qubit/qutrit Hamiltonians"};
    app.set_version_flag("--version", std::string("thermalent ") + kVersion);
    app.require_subcommand(1);

    // scan
    auto* scan_cmd = app.add_subcommand(
        "scan", "Sample T, energy, purity, lambda_min and modulus on a temperature grid (CSV)");
    InputArgs scan_input;
    add_input_options(scan_cmd, &scan_input);
    double tmin = 0.0;
    std::optional<double> tmax;
    std::size_t points = 1001;
    std::string scan_out;
    scan_cmd->add_option("--tmin", tmin, "Lower end of the grid (default 0)");
    scan_cmd->add_option("--tmax", tmax, "Upper end of the grid (default: T_*)");
    scan_cmd->add_option("--points", points, "Number of grid points (default 1001)");
    scan_cmd->add_option("--out", scan_out, "Output file (default: stdout)");

    // critical
    auto* critical_cmd = app.add_subcommand(
        "critical", "Extract all critical temperatures and the segment structure");
    InputArgs critical_input;
    add_input_options(critical_cmd, &critical_input);
    int restarts = 64;
    std::uint64_t seed = 0;
    std::size_t grid = 4096;
    bool skip_eta = false;
    std::string critical_out;
    critical_cmd->add_option("--restarts", restarts, "See-saw restarts for eta (default 64)");
    critical_cmd->add_option("--seed", seed, "Seed for the see-saw restarts (default 0)");
    critical_cmd->add_option("--grid", grid, "Scan grid points (default 4096)");
    critical_cmd->add_flag("--skip-eta", skip_eta, "Skip the eta computation (omits T_H)");
    critical_cmd->add_option("--out", critical_out, "Output file (default: stdout)");

    // eta
    auto* eta_cmd = app.add_subcommand(
        "eta", "Minimal product-state energy via see-saw, optionally cross-checked by the grid "
               "oracle");
    InputArgs eta_input;
    add_input_options(eta_cmd, &eta_input);
    int eta_restarts = 64;
    std::uint64_t eta_seed = 0;
    bool run_oracle = false;
    int resolution = 0;
    eta_cmd->add_option("--restarts", eta_restarts, "See-saw restarts (default 64)");
    eta_cmd->add_option("--seed", eta_seed, "Seed (default 0)");
    eta_cmd->add_flag("--oracle", run_oracle, "Also run the deterministic grid oracle");
    eta_cmd->add_option("--resolution", resolution,
                        "Oracle grid resolution per angle (default: 32 for 2x2, 16 for 2x3)");

    // paper-figures
    auto* figures_cmd = app.add_subcommand(
        "paper-figures", "Compare all bundled examples against their published critical values");
    double tolerance = 0.01;
    figures_cmd->add_option("--tolerance", tolerance,
                            "Absolute tolerance on temperatures (default 0.01)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (scan_cmd->parsed()) {
            HamiltonianSpec spec;
            try {
                spec = resolve_input(scan_input);
                if (points < 2) throw Error("--points must be at least 2");
                if (tmin < 0.0) throw Error("--tmin must be non-negative");
                if (tmax && *tmax < tmin) throw Error("--tmax must be at least --tmin");
            } catch (const std::exception& e) {
                std::cerr << "input error: " << e.what() << "\n";
                return kExitInputError;
            }
            const double hi = tmax ? *tmax : t_star(spec).value();
            const std::vector<ThermalPoint> profile = scan_range(spec, tmin, hi, points);
            write_output(scan_out, to_csv(profile));
            return 0;
        }

        if (critical_cmd->parsed()) {
            HamiltonianSpec spec;
            try {
                spec = resolve_input(critical_input);
                if (restarts < 1) throw Error("--restarts must be at least 1");
                if (grid < 16) throw Error("--grid must be at least 16");
            } catch (const std::exception& e) {
                std::cerr << "input error: " << e.what() << "\n";
                return kExitInputError;
            }
            SegmentOptions opts;
            opts.grid_points = grid;
            CriticalReport report;
            report.tool_version = kVersion;
            report.label = spec.label;
            report.shape = spec.shape;
            report.options = opts;
            report.segments = find_segments(spec, opts);
            if (!skip_eta) {
                const EtaResult eta = eta_seesaw(spec, restarts, seed);
                report.eta = eta.eta;
                report.restarts = restarts;
                report.seed = seed;
                report.segments.t_h = t_h(spec, eta.eta).value();
            }
            write_output(critical_out, serialize_report(report));
            return 0;
        }

        if (eta_cmd->parsed()) {
            HamiltonianSpec spec;
            try {
                spec = resolve_input(eta_input);
                if (eta_restarts < 1) throw Error("--restarts must be at least 1");
                if (resolution != 0 && resolution < 8)
                    throw Error("--resolution must be at least 8");
            } catch (const std::exception& e) {
                std::cerr << "input error: " << e.what() << "\n";
                return kExitInputError;
            }
            EtaResult result = eta_seesaw(spec, eta_restarts, eta_seed);
            const int res =
                resolution != 0 ? resolution : default_oracle_resolution(spec.shape);
            if (run_oracle) result.oracle_value = eta_grid_oracle(spec, res);
            std::printf("label %s\n", spec.label.c_str());
            std::printf("eta %.12g\n", result.eta);
            std::printf("restarts %d\n", result.restarts_used);
            std::printf("seed %llu\n", static_cast<unsigned long long>(eta_seed));
            std::printf("t_h %.6g\n", t_h(spec, result.eta).value());
            std::printf("psi");
            for (const Complex& e : result.best.psi)
                std::printf(" %s", format_complex_entry(e).c_str());
            std::printf("\nphi");
            for (const Complex& e : result.best.phi)
                std::printf(" %s", format_complex_entry(e).c_str());
            std::printf("\n");
            if (result.oracle_value) {
                std::printf("oracle_eta %.12g\n", *result.oracle_value);
                std::printf("oracle_resolution %d\n", res);
            }
            return 0;
        }

        if (figures_cmd->parsed()) {
            if (tolerance <= 0.0) {
                std::cerr << "input error: --tolerance must be positive\n";
                return kExitInputError;
            }
            return cmd_paper_figures(tolerance);
        }
    } catch (const std::exception& e) {
        std::cerr << "compute error: " << e.what() << "\n";
        return kExitComputeError;
    }
    return 0;
}
