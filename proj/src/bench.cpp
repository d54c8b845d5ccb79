#include "kozmo/bench.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <random>

#include <boost/random/uniform_int_distribution.hpp>

#include "kozmo/decompositions.hpp"
#include "kozmo/errors.hpp"

namespace kozmo {

namespace {

std::uint64_t parse_number(std::string_view key, std::string_view value) {
    std::uint64_t out = 0;
    const auto* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        throw InvalidInputError("bench spec: '" + std::string(value) + "' is not a valid value for " +
                                std::string(key));
    }
    return out;
}

void validate(const BenchSpec& spec) {
    if (spec.vars < 1 || spec.vars > kMaxVariables) throw InvalidInputError("bench spec: vars must be in 1..64");
    if (spec.gens < 1) throw InvalidInputError("bench spec: gens must be at least 1");
    if (spec.max_exp < 1) throw InvalidInputError("bench spec: max-exp must be at least 1");
}

// boost's distribution gives the same stream on every standard library.
template <typename T>
T draw(std::mt19937_64& rng, T lo, T hi) {
    return boost::random::uniform_int_distribution<T>(lo, hi)(rng);
}

}  // namespace

BenchSpec parse_bench_spec(std::string_view text) {
    BenchSpec spec;
    while (!text.empty()) {
        const auto comma = text.find(',');
        auto item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        const auto key = item.substr(0, eq);
        const auto value = eq == std::string_view::npos ? std::string_view{} : item.substr(eq + 1);
        if (key == "generic" && eq == std::string_view::npos) {
            spec.generic = true;
        } else if (eq == std::string_view::npos) {
            throw InvalidInputError("bench spec: expected key=value, got '" + std::string(item) + "'");
        } else if (key == "vars" || key == "n") {
            spec.vars = parse_number(key, value);
        } else if (key == "gens" || key == "r") {
            spec.gens = parse_number(key, value);
        } else if (key == "max-exp" || key == "e") {
            const auto e = parse_number(key, value);
            if (e > 1'000'000) throw InvalidInputError("bench spec: max-exp is too large");
            spec.max_exp = static_cast<Exponent>(e);
        } else if (key == "seed") {
            spec.seed = parse_number(key, value);
        } else if (key == "reps" || key == "repetitions") {
            spec.repetitions = parse_number(key, value);
        } else if (key == "generic") {
            spec.generic = parse_number(key, value) != 0;
        } else {
            throw InvalidInputError("bench spec: unknown key '" + std::string(key) + "'");
        }
    }
    validate(spec);
    return spec;
}

std::string to_string(const BenchSpec& spec) {
    return "vars=" + std::to_string(spec.vars) + ",gens=" + std::to_string(spec.gens) +
           ",max-exp=" + std::to_string(spec.max_exp) + ",seed=" + std::to_string(spec.seed) +
           (spec.generic ? ",generic" : "") + ",reps=" + std::to_string(spec.repetitions);
}

MonomialIdeal random_ideal(const BenchSpec& spec) {
    validate(spec);
    const auto n = spec.vars;
    const auto e = spec.max_exp;
    if (spec.generic && spec.gens > n * e) {
        throw FeasibilityError("a generic ideal with " + std::to_string(spec.gens) + " generators needs more than " +
                               std::to_string(n) + " variables with exponents up to " + std::to_string(e));
    }
    std::mt19937_64 rng(spec.seed);
    const std::uint64_t patterns = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    const std::uint64_t max_attempts = 1000 * spec.gens + 100'000;
    // Early small generators can make every later candidate comparable; start over.
    constexpr std::uint64_t kStallLimit = 5'000;

    std::vector<Multidegree> gens;
    gens.reserve(spec.gens);
    // used[i][v]: exponent v of variable i is taken (generic mode).
    std::vector<std::vector<bool>> used(n, std::vector<bool>(std::size_t{e} + 1, false));
    std::vector<Exponent> free_count(n, e);
    // Variables with unused values left; drawn supports are cut down to these.
    std::uint64_t open = patterns;
    std::uint64_t attempts = 0;
    std::uint64_t stalled = 0;
    while (gens.size() < spec.gens) {
        if (stalled == kStallLimit) {
            gens.clear();
            for (auto& row : used) std::fill(row.begin(), row.end(), false);
            std::fill(free_count.begin(), free_count.end(), e);
            open = patterns;
            stalled = 0;
        }
        if (++attempts > max_attempts) {
            throw FeasibilityError("could not reach " + std::to_string(spec.gens) + " minimal generators after " +
                                   std::to_string(max_attempts) + " attempts");
        }
        const VarSet support(draw<std::uint64_t>(rng, 1, patterns) & open);
        ++stalled;
        if (support.empty()) continue;
        Multidegree mu(n);
        for (auto i : support.indices()) {
            if (!spec.generic) {
                mu[i] = draw<Exponent>(rng, 1, e);
                continue;
            }
            // k-th unused value of variable i
            auto k = draw<Exponent>(rng, 1, free_count[i]);
            Exponent v = 0;
            while (k > 0) k -= used[i][++v] ? 0 : 1;
            mu[i] = v;
        }
        const bool comparable = std::any_of(gens.begin(), gens.end(), [&](const Multidegree& g) {
            return divides(g, mu) || divides(mu, g);
        });
        if (comparable) continue;
        if (spec.generic) {
            for (auto i : support.indices()) {
                used[i][mu[i]] = true;
                if (--free_count[i] == 0) open &= ~(std::uint64_t{1} << i);
            }
        }
        gens.push_back(std::move(mu));
        stalled = 0;
    }
    return minimalize(std::move(gens), n);
}

double BenchReport::mean_seconds() const {
    if (runs.empty()) return 0.0;
    double total = 0.0;
    for (const auto& run : runs) total += run.seconds;
    return total / static_cast<double>(runs.size());
}

BenchReport run_bench(const BenchSpec& spec, const MvtOptions& options) {
    BenchReport report;
    report.spec = spec;
    for (std::size_t k = 0; k < spec.repetitions; ++k) {
        auto rep = spec;
        rep.seed = spec.seed + k;
        const auto ideal = random_ideal(rep);
        const auto start = std::chrono::steady_clock::now();
        const auto components = irreducible_decomposition(ideal, options);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        report.runs.push_back({rep.seed, ideal.size(), components.size(), elapsed.count()});
    }
    return report;
}

}  // namespace kozmo
