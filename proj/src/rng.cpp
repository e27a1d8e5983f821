#include "thermalent/rng.hpp"

#include <cmath>
#include <numbers>

namespace thermalent {

double SplitMix64::next_normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

std::vector<Complex> haar_unit_vector(SplitMix64& rng, std::size_t dim) {
    std::vector<Complex> v(dim);
    for (Complex& e : v) {
        const double re = rng.next_normal();
        const double im = rng.next_normal();
        e = Complex(re, im);
    }
    normalize(v);
    return v;
}

ComplexMatrix complex_normal_matrix(SplitMix64& rng, std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double re = rng.next_normal();
            const double im = rng.next_normal();
            m(i, j) = Complex(re, im);
        }
    return m;
}

}  // namespace thermalent
