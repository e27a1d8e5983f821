#include "thermalent/corpus.hpp"

#include <cmath>
#include <functional>
#include <map>

namespace thermalent::corpus {

namespace {

using VecList = std::vector<std::vector<Complex>>;

std::vector<Complex> real_vec(std::vector<double> entries) {
    std::vector<Complex> v;
    v.reserve(entries.size());
    for (double e : entries) v.emplace_back(e, 0.0);
    return v;
}

HamiltonianSpec make(BipartiteShape shape, std::vector<double> eigenvalues, VecList vectors,
                     std::string label) {
    HamiltonianSpec raw;
    raw.shape = shape;
    raw.eigenvalues = std::move(eigenvalues);
    raw.eigenvectors = std::move(vectors);
    raw.label = std::move(label);
    return normalize_spec(std::move(raw));
}

// fig1 family: x = 0.5, y = sqrt(1 - x^2), z = sqrt(1 - 2 x^2).
VecList fig1_vectors() {
    const double x = 0.5;
    const double y = std::sqrt(1.0 - x * x);
    const double z = std::sqrt(1.0 - 2.0 * x * x);
    return {
        real_vec({1.0, 0.0, 0.0, 0.0}),
        real_vec({0.0, x, y, 0.0}),
        real_vec({0.0, x, -x * x / y, z / y}),
        real_vec({0.0, z, -x * z / y, -x / y}),
    };
}

// fig2 solid: the four Bell vectors.
VecList fig2_solid_vectors() {
    const double s = std::sqrt(0.5);
    return {
        real_vec({s, 0.0, 0.0, s}),
        real_vec({s, 0.0, 0.0, -s}),
        real_vec({0.0, s, s, 0.0}),
        real_vec({0.0, s, -s, 0.0}),
    };
}

VecList fig2_dashed_vectors() {
    const double s = std::sqrt(0.5);
    return {
        real_vec({1.0, 0.0, 0.0, 0.0}),
        real_vec({0.0, s, s, 0.0}),
        real_vec({0.0, s, -s, 0.0}),
        real_vec({0.0, 0.0, 0.0, 1.0}),
    };
}

// fig3 family: x = 0.2, y = sqrt(1 - 2 x^2).
VecList fig3_vectors() {
    const double x = 0.2;
    const double y = std::sqrt(1.0 - 2.0 * x * x);
    const double s = std::sqrt(0.5);
    return {
        real_vec({1.0, 0.0, 0.0, 0.0, 0.0, 0.0}),
        real_vec({0.0, 0.0, x, 0.0, x, y}),
        real_vec({0.0, 0.0, s, 0.0, -s, 0.0}),
        real_vec({0.0, s, 0.0, s, 0.0, 0.0}),
        real_vec({0.0, s, 0.0, -s, 0.0, 0.0}),
        real_vec({0.0, 0.0, y * s, 0.0, y * s, -x * std::sqrt(2.0)}),
    };
}

VecList fig4_vectors() {
    return {
        real_vec({1.0, 0.0, 0.0, 0.0, 0.0, 0.0}),
        real_vec({0.0, 0.5, 0.0, 0.5, 0.5, 0.5}),
        real_vec({0.0, 0.0, 1.0, 0.0, 0.0, 0.0}),
        real_vec({0.0, 0.5, 0.0, 0.5, -0.5, -0.5}),
        real_vec({0.0, 0.5, 0.0, -0.5, 0.5, -0.5}),
        real_vec({0.0, -0.5, 0.0, 0.5, 0.5, -0.5}),
    };
}

const std::map<std::string, std::function<HamiltonianSpec()>>& factories() {
    static const std::map<std::string, std::function<HamiltonianSpec()>> table = {
        {"fig1",
         [] {
             return make(BipartiteShape::qubit_qubit(), {0.0, 1.5, 7.0, 8.0}, fig1_vectors(),
                         "fig1");
         }},
        {"fig1-variant",
         [] {
             return make(BipartiteShape::qubit_qubit(), {0.0, 1.5, 2.0, 3.0}, fig1_vectors(),
                         "fig1-variant");
         }},
        {"fig2-solid",
         [] {
             return make(BipartiteShape::qubit_qubit(), {0.75, 0.0, 0.75, 2.0},
                         fig2_solid_vectors(), "fig2-solid");
         }},
        {"fig2-dashed",
         [] {
             return make(BipartiteShape::qubit_qubit(), {0.01, 2.0, 0.0, 4.0},
                         fig2_dashed_vectors(), "fig2-dashed");
         }},
        {"fig3",
         [] {
             return make(BipartiteShape::qubit_qutrit(), {0.75, 0.0, 0.75, 2.0, 3.0, 4.0},
                         fig3_vectors(), "fig3");
         }},
        {"fig3-variant",
         [] {
             return make(BipartiteShape::qubit_qutrit(), {1.7, 0.0, 1.75, 2.0, 3.0, 4.0},
                         fig3_vectors(), "fig3-variant");
         }},
        {"fig3-inset-1",
         [] {
             return make(BipartiteShape::qubit_qutrit(), {1.0, 0.0, 0.75, 2.0, 3.0, 4.0},
                         fig3_vectors(), "fig3-inset-1");
         }},
        {"fig3-inset-1.5",
         [] {
             return make(BipartiteShape::qubit_qutrit(), {1.5, 0.0, 0.75, 2.0, 3.0, 4.0},
                         fig3_vectors(), "fig3-inset-1.5");
         }},
        {"fig4",
         [] {
             return make(BipartiteShape::qubit_qutrit(), {0.0, 0.7, 7.0, 0.9, 1.0, 1.5},
                         fig4_vectors(), "fig4");
         }},
    };
    return table;
}

}  // namespace

std::vector<std::string> example_names() {
    return {"fig1",         "fig1-variant", "fig2-solid",     "fig2-dashed", "fig3",
            "fig3-variant", "fig3-inset-1", "fig3-inset-1.5", "fig4"};
}

bool has_example(const std::string& name) { return factories().count(name) != 0; }

HamiltonianSpec example(const std::string& name) {
    const auto it = factories().find(name);
    if (it == factories().end()) throw Error("unknown bundled example '" + name + "'");
    return it->second();
}

const std::vector<ReferenceRecord>& reference_values() {
    static const std::vector<ReferenceRecord> table = {
        {"fig1", 0.0, std::vector<ReferenceBoundary>{{0.159}, {2.356}}, 5.40,
         Scenario::separable_then_entangled},
        {"fig1-variant", std::nullopt, std::vector<ReferenceBoundary>{}, std::nullopt,
         Scenario::trivial},
        {"fig2-solid", 0.73, std::vector<ReferenceBoundary>{{0.97}}, 1.04, Scenario::normal},
        {"fig2-dashed", 0.377, std::vector<ReferenceBoundary>{{1.823}}, 2.181, Scenario::normal},
        {"fig3", 0.13, std::vector<ReferenceBoundary>{{0.296}, {0.334}, {0.571}}, 2.76,
         Scenario::abnormal},
        {"fig3-variant", std::nullopt, std::vector<ReferenceBoundary>{{0.699}}, std::nullopt,
         Scenario::normal},
        {"fig3-inset-1", std::nullopt, std::nullopt, std::nullopt, Scenario::abnormal},
        {"fig3-inset-1.5", std::nullopt, std::nullopt, std::nullopt, Scenario::abnormal},
        {"fig4", 0.0,
         std::vector<ReferenceBoundary>{{0.0355, 0.2}, {0.467}, {0.476}, {0.923}}, 2.645,
         Scenario::separable_then_entangled},
    };
    return table;
}

}  // namespace thermalent::corpus
