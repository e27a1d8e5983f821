#include "thermalent/witness.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "thermalent/rng.hpp"

namespace thermalent {

namespace {

constexpr double kEtaZeroTol = 1e-12;   // below this eta counts as the ground energy
constexpr double kMonotoneSlack = 1e-10;

double clamp_product_energy(double value) {
    if (value < -1e-9)
        throw Error("product-state energy " + std::to_string(value) +
                    " below the normalized ground energy; solver bug");
    return std::max(value, 0.0);
}

}  // namespace

double product_energy(const ComplexMatrix& h, const BipartiteShape& shape,
                      const std::vector<Complex>& psi, const std::vector<Complex>& phi) {
    if (psi.size() != shape.d1 || phi.size() != shape.d2 || h.rows() != shape.dim() ||
        h.cols() != shape.dim())
        throw ShapeMismatchError("product_energy: dimension mismatch");
    const std::vector<Complex> state = tensor_product(psi, phi);
    Complex acc = 0.0;
    for (std::size_t a = 0; a < state.size(); ++a)
        for (std::size_t b = 0; b < state.size(); ++b)
            acc += std::conj(state[a]) * h(a, b) * state[b];
    return acc.real();
}

ProductAnsatz seesaw_descend(const ComplexMatrix& h, const BipartiteShape& shape,
                             ProductAnsatz start, int max_sweeps, double energy_tol) {
    std::vector<Complex> psi = std::move(start.psi);
    std::vector<Complex> phi = std::move(start.phi);
    normalize(psi);
    normalize(phi);

    double prev = product_energy(h, shape, psi, phi);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        const HermitianEigensystem on_qubit =
            eig_hermitian(condition_on_factor(h, shape, Factor::second, phi));
        psi = on_qubit.eigenvectors.front();
        const double mid = on_qubit.eigenvalues.front();
        if (mid > prev + kMonotoneSlack)
            throw Error("see-saw energy increased within a sweep; solver bug");

        const HermitianEigensystem on_second =
            eig_hermitian(condition_on_factor(h, shape, Factor::first, psi));
        phi = on_second.eigenvectors.front();
        const double next = on_second.eigenvalues.front();
        if (next > mid + kMonotoneSlack)
            throw Error("see-saw energy increased within a sweep; solver bug");

        const bool converged = prev - next < energy_tol;
        prev = next;
        if (converged) break;
    }
    return ProductAnsatz{std::move(psi), std::move(phi), prev};
}

EtaResult eta_seesaw(const HamiltonianSpec& spec, int restarts, std::uint64_t seed) {
    require_normalized(spec);
    if (restarts < 1) throw Error("eta_seesaw: restarts must be >= 1");

    const ComplexMatrix h = materialize(spec);
    EtaResult result;
    result.restarts_used = restarts;
    bool first = true;
    const auto consider = [&](ProductAnsatz start) {
        ProductAnsatz candidate = seesaw_descend(h, spec.shape, std::move(start));
        if (first || candidate.value < result.best.value) {
            result.best = std::move(candidate);
            first = false;
        }
    };

    // Descents from the canonical product basis come first: when the
    // minimizer is a basis state the descent terminates there exactly,
    // whereas random starts can crawl along quartically flat valleys. This
    // also guarantees eta never exceeds the best product-basis energy.
    for (std::size_t i = 0; i < spec.shape.d1; ++i)
        for (std::size_t k = 0; k < spec.shape.d2; ++k) {
            ProductAnsatz start;
            start.psi.assign(spec.shape.d1, Complex(0.0));
            start.phi.assign(spec.shape.d2, Complex(0.0));
            start.psi[i] = 1.0;
            start.phi[k] = 1.0;
            consider(std::move(start));
        }

    for (int r = 0; r < restarts; ++r) {
        SplitMix64 rng(SplitMix64::mix(seed, static_cast<std::uint64_t>(r)));
        ProductAnsatz start;
        start.psi = haar_unit_vector(rng, spec.shape.d1);
        start.phi = haar_unit_vector(rng, spec.shape.d2);
        consider(std::move(start));
    }
    result.best.value = clamp_product_energy(result.best.value);
    result.eta = result.best.value;
    return result;
}

int default_oracle_resolution(const BipartiteShape& shape) {
    return shape.d2 == 2 ? 32 : 16;
}

namespace {

// Bloch grid for a 2-level factor: theta closed on [0, pi], phase half-open.
std::vector<std::vector<Complex>> qubit_grid(int resolution) {
    std::vector<std::vector<Complex>> grid;
    grid.reserve(static_cast<std::size_t>(resolution) * resolution);
    for (int i = 0; i < resolution; ++i) {
        const double theta = std::numbers::pi * i / (resolution - 1);
        const double c = std::cos(0.5 * theta);
        const double s = std::sin(0.5 * theta);
        for (int j = 0; j < resolution; ++j) {
            const double alpha = 2.0 * std::numbers::pi * j / resolution;
            std::vector<Complex> v{Complex(c, 0.0), Complex(s * std::cos(alpha), s * std::sin(alpha))};
            normalize(v);
            grid.push_back(std::move(v));
        }
    }
    return grid;
}

// Two amplitude angles on the octant plus two relative phases.
std::vector<std::vector<Complex>> qutrit_grid(int resolution) {
    std::vector<std::vector<Complex>> grid;
    grid.reserve(static_cast<std::size_t>(resolution) * resolution * resolution * resolution);
    for (int i1 = 0; i1 < resolution; ++i1) {
        const double t1 = 0.5 * std::numbers::pi * i1 / (resolution - 1);
        const double a0 = std::cos(t1);
        const double rest = std::sin(t1);
        for (int i2 = 0; i2 < resolution; ++i2) {
            const double t2 = 0.5 * std::numbers::pi * i2 / (resolution - 1);
            const double a1 = rest * std::cos(t2);
            const double a2 = rest * std::sin(t2);
            for (int j1 = 0; j1 < resolution; ++j1) {
                const double b1 = 2.0 * std::numbers::pi * j1 / resolution;
                const Complex e1(std::cos(b1), std::sin(b1));
                for (int j2 = 0; j2 < resolution; ++j2) {
                    const double b2 = 2.0 * std::numbers::pi * j2 / resolution;
                    const Complex e2(std::cos(b2), std::sin(b2));
                    std::vector<Complex> v{Complex(a0, 0.0), a1 * e1, a2 * e2};
                    normalize(v);
                    grid.push_back(std::move(v));
                }
            }
        }
    }
    return grid;
}

}  // namespace

double eta_grid_oracle(const HamiltonianSpec& spec, int resolution) {
    require_normalized(spec);
    if (resolution < 8)
        throw ResolutionTooSmallError("eta_grid_oracle: resolution " +
                                      std::to_string(resolution) + " is below the minimum of 8");

    const ComplexMatrix h = materialize(spec);
    const std::vector<std::vector<Complex>> psi_grid = qubit_grid(resolution);
    const std::vector<std::vector<Complex>> phi_grid =
        spec.shape.d2 == 2 ? qubit_grid(resolution) : qutrit_grid(resolution);

    // Per qubit point: |psi0|^2, |psi1|^2, conj(psi0) psi1. The conditioned
    // 2x2 operator then gives the energy in a handful of flops.
    struct QubitPoint {
        double p0, p1;
        Complex cross;
    };
    std::vector<QubitPoint> psi_cache;
    psi_cache.reserve(psi_grid.size());
    for (const auto& psi : psi_grid)
        psi_cache.push_back(
            {std::norm(psi[0]), std::norm(psi[1]), std::conj(psi[0]) * psi[1]});

    double best = 0.0;
    std::size_t best_psi = 0, best_phi = 0;
    bool first = true;
    for (std::size_t f = 0; f < phi_grid.size(); ++f) {
        const ComplexMatrix a = condition_on_factor(h, spec.shape, Factor::second, phi_grid[f]);
        const double a00 = a(0, 0).real();
        const double a11 = a(1, 1).real();
        const Complex a01 = a(0, 1);
        for (std::size_t p = 0; p < psi_cache.size(); ++p) {
            const QubitPoint& q = psi_cache[p];
            const double e = a00 * q.p0 + a11 * q.p1 + 2.0 * (a01 * q.cross).real();
            if (first || e < best) {
                best = e;
                best_psi = p;
                best_phi = f;
                first = false;
            }
        }
    }

    ProductAnsatz polished = seesaw_descend(
        h, spec.shape, ProductAnsatz{psi_grid[best_psi], phi_grid[best_phi], best});
    return clamp_product_energy(polished.value);
}

Temperature t_h(const HamiltonianSpec& spec, double eta) {
    require_normalized(spec);
    if (eta < -1e-9) throw Error("t_h: eta must be non-negative");
    if (eta <= kEtaZeroTol) return Temperature(0.0);

    const double mean = mean_energy(spec);
    if (eta >= mean)
        throw EtaAboveMeanEnergyError(
            "eta " + std::to_string(eta) + " is not below the T=infinity energy " +
            std::to_string(mean) + "; no finite temperature satisfies U(T) = eta");

    double hi = 1.0;
    int doublings = 0;
    while (energy(spec, Temperature(hi)) <= eta) {
        hi *= 2.0;
        if (++doublings > 200)
            throw EtaAboveMeanEnergyError("t_h: failed to bracket U(T) = eta");
    }
    double lo = 0.0;
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        if (energy(spec, Temperature(mid)) < eta)
            lo = mid;
        else
            hi = mid;
    }
    return Temperature(0.5 * (lo + hi));
}

}  // namespace thermalent
