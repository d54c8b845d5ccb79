#pragma once

// Seeded families of small ideals for the property and acceptance suites.

#include <cstdint>
#include <random>
#include <vector>

#include <boost/random/uniform_int_distribution.hpp>

#include "kozmo/monomial.hpp"

namespace kozmo::test {

struct CorpusShape {
    std::size_t min_vars = 1;
    std::size_t max_vars = 4;
    std::size_t max_gens = 8;
    Exponent max_exp = 4;
};

// Aims for r minimal generators: each candidate has independent exponents in
// 0..max_exp (zero with probability about one half) and is kept only if it is
// incomparable with the ones so far. Never the zero or unit ideal.
inline MonomialIdeal corpus_ideal(std::uint64_t seed, const CorpusShape& shape) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (seed * 0x100000001b3ULL));
    auto draw = [&](std::uint64_t lo, std::uint64_t hi) {
        return boost::random::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
    };
    const auto n = static_cast<std::size_t>(draw(shape.min_vars, shape.max_vars));
    const auto r = static_cast<std::size_t>(draw(1, shape.max_gens));
    std::vector<Multidegree> gens;
    for (int attempt = 0; attempt < 200 && gens.size() < r; ++attempt) {
        Multidegree g(n);
        for (std::size_t i = 0; i < n; ++i) {
            g[i] = draw(0, 1) == 0 ? 0 : static_cast<Exponent>(draw(1, shape.max_exp));
        }
        if (g.is_zero()) continue;
        bool comparable = false;
        for (const auto& h : gens) comparable = comparable || divides(g, h) || divides(h, g);
        if (!comparable) gens.push_back(std::move(g));
    }
    return minimalize(std::move(gens), n);
}

inline std::vector<MonomialIdeal> corpus(std::size_t count, const CorpusShape& shape = {}, std::uint64_t first_seed = 1) {
    std::vector<MonomialIdeal> out;
    out.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) out.push_back(corpus_ideal(first_seed + k, shape));
    return out;
}

// The main corpus: n <= 4, at most 8 generators, exponents at most 4. Mostly
// two to four variables; one-variable ideals are all alike.
inline std::vector<MonomialIdeal> small_corpus() {
    auto out = corpus(225, CorpusShape{2, 4, 8, 4});
    for (auto& i : corpus(15, CorpusShape{1, 1, 8, 4}, 5'001)) out.push_back(std::move(i));
    return out;
}

// Fifty ideals in five variables.
inline std::vector<MonomialIdeal> five_variable_corpus() {
    return corpus(50, CorpusShape{5, 5, 8, 4}, 10'001);
}

}  // namespace kozmo::test
