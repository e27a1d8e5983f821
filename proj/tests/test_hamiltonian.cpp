#include <doctest.h>

#include <cmath>

#include "thermalent/corpus.hpp"
#include "thermalent/critical.hpp"
#include "thermalent/random_states.hpp"

using namespace thermalent;

namespace {

std::vector<Complex> rv(std::vector<double> entries) {
    std::vector<Complex> v;
    for (double e : entries) v.emplace_back(e, 0.0);
    return v;
}

// Two qubits with a doubly degenerate ground level spanned by a product
// vector and an entangled one.
HamiltonianSpec degenerate_ground_spec() {
    const double s = std::sqrt(0.5);
    HamiltonianSpec raw;
    raw.shape = BipartiteShape::qubit_qubit();
    raw.eigenvalues = {0.0, 0.0, 1.0, 2.0};
    raw.eigenvectors = {rv({1, 0, 0, 0}), rv({0, s, s, 0}), rv({0, s, -s, 0}), rv({0, 0, 0, 1})};
    raw.label = "degenerate-ground";
    return normalize_spec(std::move(raw));
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out = a * b;
    out -= b * a;
    return out;
}

}  // namespace

TEST_SUITE("hamiltonian") {

TEST_CASE("Temperature rejects negative and NaN values") {
    CHECK_THROWS_AS(Temperature(-0.1), NegativeTemperatureError);
    CHECK_THROWS_AS(Temperature(std::nan("")), NegativeTemperatureError);
    CHECK(Temperature::infinite().is_infinite());
    CHECK(Temperature(0.0).is_zero());
}

TEST_CASE("normalize_spec shifts the spectrum to ground energy zero") {
    HamiltonianSpec raw = corpus::example("fig1");
    for (double& h : raw.eigenvalues) h += 5.0;  // (5, 6.5, 12, 13)
    const HamiltonianSpec spec = normalize_spec(std::move(raw));
    CHECK(spec.eigenvalues == std::vector<double>{0.0, 1.5, 7.0, 8.0});
}

TEST_CASE("normalize_spec keeps an already normalized spectrum") {
    const HamiltonianSpec spec = corpus::example("fig4");
    CHECK(spec.eigenvalues == std::vector<double>{0.0, 0.7, 7.0, 0.9, 1.0, 1.5});
}

TEST_CASE("a constant Hamiltonian normalizes to zero and gives tau at every T") {
    HamiltonianSpec raw = corpus::example("fig1");
    raw.eigenvalues = {3.25, 3.25, 3.25, 3.25};
    const HamiltonianSpec spec = normalize_spec(std::move(raw));
    CHECK(spec.eigenvalues == std::vector<double>{0.0, 0.0, 0.0, 0.0});
    for (const Temperature t : {Temperature(0.0), Temperature(0.7), Temperature::infinite()}) {
        ComplexMatrix rho = gibbs_state(spec, t).matrix;
        ComplexMatrix tau = ComplexMatrix::identity(4);
        tau *= 0.25;
        rho -= tau;
        CHECK(rho.max_abs() <= 1e-14);
    }
}

TEST_CASE("normalize_spec validation errors") {
    HamiltonianSpec raw = corpus::example("fig1");
    raw.eigenvalues.pop_back();
    CHECK_THROWS_AS(normalize_spec(std::move(raw)), DimensionMismatchError);

    HamiltonianSpec skewed = corpus::example("fig1");
    skewed.eigenvectors[1] = rv({0.0, 0.7, 0.7, 0.0});  // not unit
    CHECK_THROWS_AS(normalize_spec(std::move(skewed)), NotOrthonormalError);

    HamiltonianSpec bad_shape = corpus::example("fig1");
    bad_shape.shape = BipartiteShape{3, 3};
    CHECK_THROWS_AS(normalize_spec(std::move(bad_shape)), UnsupportedDimensionError);
}

TEST_CASE("gibbs state at infinite temperature is tau") {
    const HamiltonianSpec spec = corpus::example("fig1");
    ComplexMatrix rho = gibbs_state(spec, Temperature::infinite()).matrix;
    ComplexMatrix tau = ComplexMatrix::identity(4);
    tau *= 0.25;
    rho -= tau;
    CHECK(rho.max_abs() <= 1e-12);
}

TEST_CASE("gibbs state at T = 0 is the ground projector") {
    const HamiltonianSpec spec = corpus::example("fig2-solid");
    ComplexMatrix rho = gibbs_state(spec, Temperature(0.0)).matrix;
    ComplexMatrix expected(4, 4);
    const auto& ground = spec.eigenvectors[1];  // eigenvalue 0
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) expected(i, j) = ground[i] * std::conj(ground[j]);
    rho -= expected;
    CHECK(rho.max_abs() <= 1e-14);
}

TEST_CASE("gibbs state spreads a degenerate ground level uniformly") {
    const HamiltonianSpec spec = degenerate_ground_spec();
    ComplexMatrix rho = gibbs_state(spec, Temperature(0.0)).matrix;
    ComplexMatrix expected(4, 4);
    for (int g = 0; g < 2; ++g) {
        const auto& v = spec.eigenvectors[g];
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) expected(i, j) += 0.5 * v[i] * std::conj(v[j]);
    }
    rho -= expected;
    CHECK(rho.max_abs() <= 1e-14);
}

TEST_CASE("gibbs states satisfy the density-matrix invariants and commute with H") {
    for (const std::string& name : corpus::example_names()) {
        const HamiltonianSpec spec = corpus::example(name);
        const ComplexMatrix h = materialize(spec);
        for (const double t : {0.0, 0.05, 0.31, 1.0, 4.0, 50.0}) {
            const DensityMatrix rho = gibbs_state(spec, Temperature(t));
            CHECK_NOTHROW(validate_density_matrix(rho));
            CHECK(commutator(rho.matrix, h).max_abs() <= 1e-10);
        }
    }
}

TEST_CASE("energy endpoints") {
    const HamiltonianSpec spec = corpus::example("fig1");
    CHECK(energy(spec, Temperature(0.0)) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(energy(spec, Temperature::infinite()) == doctest::Approx(4.125).epsilon(1e-14));
    CHECK(mean_energy(spec) == doctest::Approx(4.125).epsilon(1e-14));
}

TEST_CASE("purity basics") {
    const HamiltonianSpec spec = corpus::example("fig1");
    const DensityMatrix tau = gibbs_state(spec, Temperature::infinite());
    CHECK(purity(tau) == doctest::Approx(0.25).epsilon(1e-12));
    const DensityMatrix pure = gibbs_state(spec, Temperature(0.0));
    CHECK(purity(pure) == doctest::Approx(1.0).epsilon(1e-12));
    // The purity detector threshold is crossed at T_* = 5.40.
    CHECK(std::abs(thermal_purity(spec, Temperature(5.40)) - 1.0 / 3.0) <= 2e-3);
}

TEST_CASE("matrix purity agrees with the weight formula") {
    for (const std::string name : {"fig2-dashed", "fig3"}) {
        const HamiltonianSpec spec = corpus::example(name);
        for (const double t : {0.0, 0.4, 1.7, 12.0}) {
            const double from_weights = thermal_purity(spec, Temperature(t));
            const double from_matrix = purity(gibbs_state(spec, Temperature(t)));
            CHECK(std::abs(from_weights - from_matrix) <= 1e-12);
        }
    }
}

TEST_CASE("energy increases and purity decreases with temperature") {
    for (const std::string& name : corpus::example_names()) {
        const HamiltonianSpec spec = corpus::example(name);
        const double upper = 2.0 * t_star(spec).value() + 1.0;
        double prev_energy = energy(spec, Temperature(0.0));
        double prev_purity = thermal_purity(spec, Temperature(0.0));
        for (int i = 1; i <= 101; ++i) {
            const Temperature t(upper * i / 101.0);
            const double u = energy(spec, t);
            const double p = thermal_purity(spec, t);
            CHECK(u >= prev_energy);
            CHECK(p <= prev_purity);
            prev_energy = u;
            prev_purity = p;
        }
        CHECK(energy(spec, Temperature::infinite()) >= prev_energy);
        CHECK(thermal_purity(spec, Temperature::infinite()) <= prev_purity);
    }
}

TEST_CASE("energy is continuous: increments halve with the step") {
    const HamiltonianSpec spec = corpus::example("fig3");
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        const double t = 0.05 + 3.0 * rng.next_uniform();
        const double delta = 0.01;
        const double big = std::abs(energy(spec, Temperature(t + delta)) -
                                    energy(spec, Temperature(t)));
        const double small = std::abs(energy(spec, Temperature(t + delta / 2)) -
                                      energy(spec, Temperature(t)));
        CHECK(small <= 0.75 * big + 1e-12);
    }
}

TEST_CASE("low-temperature limit reproduces the ground projector") {
    for (const std::string& name : corpus::example_names()) {
        const HamiltonianSpec spec = corpus::example(name);
        double gap = 0.0;
        for (double h : spec.eigenvalues)
            if (h > kDegeneracyTol && (gap == 0.0 || h < gap)) gap = h;
        REQUIRE(gap > 0.0);
        ComplexMatrix cold = gibbs_state(spec, Temperature(1e-6 * gap)).matrix;
        cold -= gibbs_state(spec, Temperature(0.0)).matrix;
        CHECK(cold.max_abs() <= 1e-6);
    }
}

TEST_CASE("make_density_matrix validates") {
    SplitMix64 rng(77);
    const DensityMatrix rho = random_density_matrix(rng, BipartiteShape::qubit_qutrit());
    CHECK_NOTHROW(make_density_matrix(rho.matrix, rho.shape));

    ComplexMatrix not_unit_trace = rho.matrix;
    not_unit_trace *= 2.0;
    CHECK_THROWS_AS(make_density_matrix(std::move(not_unit_trace), rho.shape), Error);
}

TEST_CASE("operations demand a normalized spec") {
    HamiltonianSpec raw = corpus::example("fig1");
    raw.eigenvalues = {1.0, 2.5, 8.0, 9.0};  // min is not zero
    CHECK_THROWS_AS(energy(raw, Temperature(1.0)), Error);
}

}  // TEST_SUITE
