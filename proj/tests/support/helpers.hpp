#pragma once

#include <initializer_list>
#include <vector>

#include "kozmo/monomial.hpp"

namespace kozmo::test {

inline Multidegree md(std::initializer_list<Exponent> e) {
    return Multidegree(std::span<const Exponent>(e.begin(), e.size()));
}

inline MonomialIdeal ideal(std::initializer_list<std::initializer_list<Exponent>> gens, std::size_t n) {
    std::vector<Multidegree> raw;
    for (const auto& g : gens) raw.push_back(md(g));
    return minimalize(std::move(raw), n);
}

inline std::vector<Multidegree> mds(std::initializer_list<std::initializer_list<Exponent>> list) {
    std::vector<Multidegree> out;
    for (const auto& g : list) out.push_back(md(g));
    return out;
}

// <x^3, x^2 y, x z, y^3, z^3>
inline MonomialIdeal staircase() { return ideal({{3, 0, 0}, {2, 1, 0}, {1, 0, 1}, {0, 3, 0}, {0, 0, 3}}, 3); }

inline MonomialIdeal eight_generator_ideal() {
    return ideal({{3, 5, 1}, {0, 5, 4}, {0, 3, 5}, {1, 1, 5}, {2, 0, 5}, {4, 0, 3}, {4, 2, 2}, {4, 4, 1}}, 3);
}

// <x^2 y^3, y^3 z t, y t^2, z^3 t^2>
inline MonomialIdeal four_variable_ideal() { return ideal({{2, 3, 0, 0}, {0, 3, 1, 1}, {0, 1, 0, 2}, {0, 0, 3, 2}}, 4); }

}  // namespace kozmo::test
