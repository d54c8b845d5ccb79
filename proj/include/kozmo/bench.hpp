#ifndef KOZMO_BENCH_HPP
#define KOZMO_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kozmo/monomial.hpp"
#include "kozmo/mvt.hpp"

namespace kozmo {

struct BenchSpec {
    std::size_t vars = 10;
    std::size_t gens = 40;
    Exponent max_exp = 30;
    std::uint64_t seed = 1;
    bool generic = false;
    std::size_t repetitions = 1;
};

/// Parses "vars=10,gens=40,max-exp=30,seed=1,generic,reps=3". Missing keys keep their defaults.
BenchSpec parse_bench_spec(std::string_view text);

std::string to_string(const BenchSpec& spec);

/**
 * Random ideal with exactly spec.gens minimal generators. Each generator
 * gets a uniformly drawn non-empty support with exponents in 1..max_exp; in
 * generic mode no two generators share a non-zero exponent of the same
 * variable. Deterministic in the seed. Throws FeasibilityError when the
 * shape cannot be reached.
 */
MonomialIdeal random_ideal(const BenchSpec& spec);

struct BenchRun {
    std::uint64_t seed = 0;
    std::size_t generators = 0;
    std::size_t components = 0;
    double seconds = 0.0;
};

struct BenchReport {
    BenchSpec spec;
    std::vector<BenchRun> runs;

    double mean_seconds() const;
};

/// Repetition k decomposes random_ideal with seed spec.seed + k.
BenchReport run_bench(const BenchSpec& spec, const MvtOptions& options = {});

}  // namespace kozmo

#endif  // KOZMO_BENCH_HPP
