#include <doctest.h>

#include <cmath>

#include "thermalent/corpus.hpp"
#include "thermalent/critical.hpp"
#include "thermalent/random_states.hpp"

using namespace thermalent;

namespace {

DensityMatrix bell_state() {
    const double s = std::sqrt(0.5);
    const std::vector<Complex> v{Complex(s), Complex(0.0), Complex(0.0), Complex(s)};
    ComplexMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = v[i] * std::conj(v[j]);
    return DensityMatrix{std::move(m), BipartiteShape::qubit_qubit()};
}

DensityMatrix tau(const BipartiteShape& shape) {
    ComplexMatrix m = ComplexMatrix::identity(shape.dim());
    m *= 1.0 / static_cast<double>(shape.dim());
    return DensityMatrix{std::move(m), shape};
}

}  // namespace

TEST_SUITE("separability") {

TEST_CASE("Bell state verdict") {
    const EntanglementVerdict v = analyze(bell_state());
    CHECK(v.lambda_min == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(v.modulus == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(v.robustness == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(v.entangled);
    CHECK_FALSE(v.marginal);
}

TEST_CASE("maximally mixed state verdict in D = 6") {
    const EntanglementVerdict v = analyze(tau(BipartiteShape::qubit_qutrit()));
    CHECK(v.lambda_min == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(v.modulus == 1.0);
    CHECK(v.robustness == 0.0);
    CHECK_FALSE(v.entangled);
}

TEST_CASE("fig3 is entangled inside its second entanglement segment") {
    const HamiltonianSpec spec = corpus::example("fig3");
    const EntanglementVerdict v = analyze(gibbs_state(spec, Temperature(0.45)));
    CHECK(v.entangled);
    CHECK(v.lambda_min < -1e-4);
}

TEST_CASE("analyze refuses unsupported dimensions") {
    ComplexMatrix m = ComplexMatrix::identity(9);
    m *= 1.0 / 9.0;
    const DensityMatrix rho{std::move(m), BipartiteShape{3, 3}};
    CHECK_THROWS_AS(analyze(rho), UnsupportedDimensionError);
    CHECK_THROWS_AS(purity_detector(rho), UnsupportedDimensionError);
}

TEST_CASE("purity detector certificates") {
    CHECK(purity_detector(tau(BipartiteShape::qubit_qubit())));  // 1/4 <= 1/3
    CHECK_FALSE(purity_detector(bell_state()));                  // pure, inconclusive

    const HamiltonianSpec fig4 = corpus::example("fig4");
    CHECK(purity_detector(gibbs_state(fig4, Temperature(3.0))));  // beyond T_* = 2.645
}

TEST_CASE("purity critical values") {
    CHECK(purity_critical_value(BipartiteShape::qubit_qubit()) == doctest::Approx(1.0 / 3.0));
    CHECK(purity_critical_value(BipartiteShape::qubit_qutrit()) == doctest::Approx(1.0 / 5.0));
}

TEST_CASE("the purity certificate never contradicts the PPT verdict") {
    // Thermal grids for every bundled spec.
    for (const std::string& name : corpus::example_names()) {
        const HamiltonianSpec spec = corpus::example(name);
        const double upper = 1.5 * t_star(spec).value() + 0.5;
        for (int i = 0; i <= 100; ++i) {
            const DensityMatrix rho = gibbs_state(spec, Temperature(upper * i / 100.0));
            if (purity_detector(rho)) CHECK_FALSE(analyze(rho).entangled);
        }
    }
    // Random states.
    SplitMix64 rng(1001);
    for (const BipartiteShape shape :
         {BipartiteShape::qubit_qubit(), BipartiteShape::qubit_qutrit()}) {
        for (int trial = 0; trial < 200; ++trial) {
            const DensityMatrix rho = random_density_matrix(rng, shape);
            if (purity_detector(rho)) CHECK_FALSE(analyze(rho).entangled);
        }
    }
}

TEST_CASE("modulus bounds and the modulus/verdict equivalence") {
    SplitMix64 rng(515);
    for (const BipartiteShape shape :
         {BipartiteShape::qubit_qubit(), BipartiteShape::qubit_qutrit()}) {
        const double lower = shape.dim() == 4 ? 1.0 / 3.0 : 1.0 / 4.0;
        for (int trial = 0; trial < 200; ++trial) {
            const EntanglementVerdict v = analyze(random_density_matrix(rng, shape));
            CHECK(v.modulus >= lower - 1e-12);
            CHECK(v.modulus <= 1.0);
            CHECK(v.robustness == doctest::Approx(1.0 / v.modulus - 1.0).epsilon(1e-12));
            // Both directions of l = 1 <=> separable on full-rank samples.
            CHECK((v.modulus == 1.0) == (v.lambda_min >= 0.0));
            CHECK((v.modulus == 1.0) == !v.entangled);
        }
    }
}

TEST_CASE("the modulus curve flattens under grid refinement") {
    for (const std::string& name : corpus::example_names()) {
        const HamiltonianSpec spec = corpus::example(name);
        const double upper = t_star(spec).value();
        const auto max_jump = [&](std::size_t points) {
            const std::vector<ThermalPoint> grid = scan(spec, upper, points);
            double worst = 0.0;
            for (std::size_t i = 0; i + 1 < grid.size(); ++i)
                worst = std::max(worst, std::abs(grid[i + 1].modulus - grid[i].modulus));
            return worst;
        };
        const double coarse = max_jump(257);
        const double fine = max_jump(513);
        CHECK(fine <= 0.75 * coarse + 1e-9);
    }
}

}  // TEST_SUITE
