#include "kozmo/decompositions.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "kozmo/errors.hpp"

namespace kozmo {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* what) {
    if (ideal.is_zero()) throw DomainError(std::string(what) + ": the zero ideal is not accepted");
    if (ideal.is_unit()) throw DomainError(std::string(what) + ": the unit ideal is not accepted");
}

// Calls fn on every rho with 0 <= rho <= top.
template <typename Fn>
void for_each_divisor(const Multidegree& top, Fn&& fn) {
    Multidegree rho(top.size());
    while (true) {
        fn(rho);
        std::size_t i = 0;
        while (i < rho.size() && rho[i] == top[i]) {
            rho[i] = 0;
            ++i;
        }
        if (i == rho.size()) return;
        ++rho[i];
    }
}

bool cone_order(const StanleyCone& a, const StanleyCone& b) {
    if (a.base != b.base) return a.base > b.base;
    return a.free < b.free;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("Hilbert coefficient exceeds 64 bits");
    return r;
}

// Binomial coefficient C(m, r) with exact checked arithmetic.
std::uint64_t binomial(std::uint64_t m, std::uint64_t r) {
    if (r > m) return 0;
    r = std::min(r, m - r);
    boost::multiprecision::uint128_t c = 1;
    for (std::uint64_t j = 0; j < r; ++j) {
        c = c * (m - j) / (j + 1);
        if (c > std::numeric_limits<std::uint64_t>::max()) throw OverflowError("Hilbert coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(c);
}

std::string power_of_t(std::uint64_t s) {
    if (s == 0) return "1";
    if (s == 1) return "t";
    return "t^" + std::to_string(s);
}

std::string scaled_power(std::uint64_t coefficient, std::uint64_t s) {
    if (coefficient == 1) return power_of_t(s);
    if (s == 0) return std::to_string(coefficient);
    return std::to_string(coefficient) + "*" + power_of_t(s);
}

}  // namespace

// --- components -----------------------------------------------------------

bool IrreducibleComponent::contains(const Multidegree& nu) const {
    require_same_dimension(exponents.size(), nu.size(), "component membership");
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (exponents[i] > 0 && nu[i] >= exponents[i]) return true;
    }
    return false;
}

bool IrreducibleComponent::includes(const IrreducibleComponent& other) const {
    require_same_dimension(exponents.size(), other.exponents.size(), "component inclusion");
    // Every generator x_i^b_i of the other component must be a multiple of x_i^a_i.
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        const auto b = other.exponents[i];
        if (b == 0) continue;
        const auto a = exponents[i];
        if (a == 0 || a > b) return false;
    }
    return true;
}

namespace {

// Visits pairs (c, d), c != d, that may satisfy c.includes(d): the support of
// d must be contained in the support of c. Stops when fn returns true.
template <typename Fn>
void for_each_inclusion_candidate(std::span<const IrreducibleComponent> components, Fn&& fn) {
    std::map<std::uint64_t, std::vector<std::size_t>> buckets;
    for (std::size_t k = 0; k < components.size(); ++k) {
        buckets[support_of(components[k].exponents).bits()].push_back(k);
    }
    for (const auto& [outer_bits, outer] : buckets) {
        for (const auto& [inner_bits, inner] : buckets) {
            if ((inner_bits & ~outer_bits) != 0) continue;
            for (auto c : outer) {
                for (auto d : inner) {
                    if (c != d && fn(c, d)) return;
                }
            }
        }
    }
}

}  // namespace

std::vector<IrreducibleComponent> remove_redundant(std::vector<IrreducibleComponent> components) {
    std::sort(components.begin(), components.end(), std::greater<>{});
    components.erase(std::unique(components.begin(), components.end()), components.end());
    std::vector<bool> redundant(components.size(), false);
    for_each_inclusion_candidate(components, [&](std::size_t c, std::size_t d) {
        if (!redundant[c] && components[c].includes(components[d])) redundant[c] = true;
        return false;
    });
    std::vector<IrreducibleComponent> out;
    out.reserve(components.size());
    for (std::size_t k = 0; k < components.size(); ++k) {
        if (!redundant[k]) out.push_back(std::move(components[k]));
    }
    return out;
}

bool pairwise_incomparable(std::span<const IrreducibleComponent> components) {
    bool ok = true;
    for_each_inclusion_candidate(components, [&](std::size_t c, std::size_t d) {
        if (components[c].includes(components[d])) ok = false;
        return !ok;
    });
    return ok;
}

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal, const MvtOptions& options) {
    require_proper_nonzero(ideal, "irreducible_decomposition");
    const auto lambda = lcm_lambda(ideal);
    const bool artinian = ideal.is_artinian();
    const auto corners = compute_b_n_minus_1(artinian ? ideal : artinian_closure(ideal), options);

    std::vector<IrreducibleComponent> components;
    components.reserve(corners.size());
    bool truncated = false;
    for (const auto& mu : corners) {
        IrreducibleComponent c{mu};
        if (!artinian) {
            for (std::size_t i = 0; i < mu.size(); ++i) {
                if (mu[i] > lambda[i]) {
                    c.exponents[i] = 0;
                    truncated = true;
                }
            }
        }
        if (c.exponents.is_zero()) throw DomainError("truncation produced the zero component");
        components.push_back(std::move(c));
    }
    // Distinct maximal corners are pairwise incomparable; only truncation can
    // introduce redundancy.
    if (truncated) return remove_redundant(std::move(components));
    std::sort(components.begin(), components.end(), std::greater<>{});
    return components;
}

// --- Stanley decompositions -----------------------------------------------

bool StanleyCone::contains(const Multidegree& nu) const {
    require_same_dimension(base.size(), nu.size(), "cone membership");
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (free.contains(i) ? nu[i] < base[i] : nu[i] != base[i]) return false;
    }
    return true;
}

StanleyDecomposition stanley_artinian(const MonomialIdeal& ideal, const MvtOptions& options) {
    require_proper_nonzero(ideal, "stanley_artinian");
    if (!ideal.is_artinian()) {
        throw DomainError("stanley_artinian needs an artinian ideal; use stanley_general");
    }
    const auto corners = compute_b_n_minus_1(ideal, options);
    // Standard monomials are the divisors of the lowered corners; shared
    // divisors are emitted once so the sum stays direct.
    std::vector<Multidegree> standard;
    for (const auto& mu : corners) {
        for_each_divisor(lowered(mu), [&](const Multidegree& rho) { standard.push_back(rho); });
    }
    std::sort(standard.begin(), standard.end(), LexDescending{});
    standard.erase(std::unique(standard.begin(), standard.end()), standard.end());

    StanleyDecomposition sd;
    sd.ring_dimension = ideal.ring_dimension();
    sd.cones.reserve(standard.size());
    for (auto& nu : standard) sd.cones.push_back({std::move(nu), VarSet{}});
    return sd;
}

StanleyDecomposition stanley_general(const MonomialIdeal& ideal, const MvtOptions& options) {
    require_proper_nonzero(ideal, "stanley_general");
    const auto n = ideal.ring_dimension();
    const auto lambda = lcm_lambda(ideal);
    // Inner part: standard monomials of the artinian closure, all below lambda.
    const auto inner = stanley_artinian(artinian_closure(ideal), options);

    // A coordinate sitting at lambda_i can be pushed to lambda_i + 1 without
    // entering I, and from there on every exponent of x_i is free. Each such
    // push yields one skeleton cone.
    StanleyDecomposition sd;
    sd.ring_dimension = n;
    for (const auto& cone : inner.cones) {
        std::uint64_t at_lambda = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (cone.base[i] == lambda[i]) at_lambda |= std::uint64_t{1} << i;
        }
        std::uint64_t sub = at_lambda;
        while (true) {
            const VarSet free(sub);
            sd.cones.push_back({raised(cone.base, free), free});
            if (sub == 0) break;
            sub = (sub - 1) & at_lambda;
        }
    }
    std::sort(sd.cones.begin(), sd.cones.end(), cone_order);
    return sd;
}

// --- Hilbert series -------------------------------------------------------

HilbertSeries hilbert_series(const StanleyDecomposition& decomposition) {
    HilbertSeries series;
    series.terms.reserve(decomposition.cones.size());
    for (const auto& cone : decomposition.cones) {
        series.terms.push_back({cone.base.total_degree(), cone.free.size()});
    }
    return series;
}

std::vector<std::uint64_t> HilbertSeries::coefficients(std::size_t max_degree) const {
    std::vector<std::uint64_t> out(max_degree + 1, 0);
    for (const auto& term : terms) {
        for (std::uint64_t d = term.shift; d <= max_degree; ++d) {
            std::uint64_t c = 0;
            if (term.denominator_power == 0) {
                c = d == term.shift ? 1 : 0;
            } else {
                // [t^m] 1/(1-t)^k = C(m + k - 1, k - 1)
                const auto k = term.denominator_power;
                c = binomial(d - term.shift + k - 1, k - 1);
            }
            out[d] = checked_add(out[d], c);
        }
    }
    return out;
}

std::string HilbertSeries::to_string() const {
    // numerators[k][s] = number of terms t^s / (1-t)^k
    std::map<std::size_t, std::map<std::uint64_t, std::uint64_t>> numerators;
    for (const auto& term : terms) ++numerators[term.denominator_power][term.shift];
    if (numerators.empty()) return "0";

    std::ostringstream out;
    bool first_group = true;
    for (const auto& [k, poly] : numerators) {
        std::vector<std::string> monomials;
        for (const auto& [s, c] : poly) monomials.push_back(scaled_power(c, s));
        std::string denominator;
        if (k == 1) denominator = "/(1-t)";
        if (k > 1) denominator = "/(1-t)^" + std::to_string(k);

        if (!first_group) out << " + ";
        first_group = false;
        if (k == 0) {
            for (std::size_t j = 0; j < monomials.size(); ++j) out << (j ? " + " : "") << monomials[j];
        } else if (monomials.size() == 1) {
            out << monomials.front() << denominator;
        } else {
            out << '(';
            for (std::size_t j = 0; j < monomials.size(); ++j) out << (j ? " + " : "") << monomials[j];
            out << ')' << denominator;
        }
    }
    return out.str();
}

std::size_t krull_dimension(const StanleyDecomposition& decomposition) {
    std::size_t d = 0;
    for (const auto& cone : decomposition.cones) d = std::max(d, cone.free.size());
    return d;
}

// --- rendering ------------------------------------------------------------

std::string format_component(const IrreducibleComponent& component, std::span<const std::string> names) {
    require_same_dimension(names.size(), component.exponents.size(), "format_component");
    std::string out = "<";
    bool first = true;
    for (std::size_t i = 0; i < names.size(); ++i) {
        const auto a = component.exponents[i];
        if (a == 0) continue;
        if (!first) out += ", ";
        out += names[i];
        if (a > 1) out += "^" + std::to_string(a);
        first = false;
    }
    return out + ">";
}

std::string format_cone(const StanleyCone& cone, std::span<const std::string> names) {
    auto out = format_monomial(cone.base, names);
    if (cone.free.empty()) return out;
    auto vars = format_varset(cone.free, names);
    return out + " * k[" + vars.substr(1, vars.size() - 2) + "]";
}

}  // namespace kozmo
