#pragma once

#include <cstdint>
#include <vector>

#include "thermalent/linalg.hpp"

namespace thermalent {

// splitmix64 counter stream. Fully specified arithmetic, so sequences are
// identical on every platform; normals come from Box-Muller on top of it.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform on (0, 1]; never returns 0, safe under log().
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    double next_normal();

    // Independent child stream; used to decouple restarts from each other.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 g(seed ^ (0xd1342543de82ef95ull * (stream + 1)));
        return g.next_u64();
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Normalized vector of independent complex-normal entries (Haar on the sphere).
std::vector<Complex> haar_unit_vector(SplitMix64& rng, std::size_t dim);

// Square matrix with independent standard-normal real and imaginary parts.
ComplexMatrix complex_normal_matrix(SplitMix64& rng, std::size_t n);

}  // namespace thermalent
