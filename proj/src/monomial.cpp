#include "kozmo/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "kozmo/errors.hpp"

namespace kozmo {

void require_same_dimension(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                             std::to_string(b) + ")");
    }
}

// --- VarSet ---------------------------------------------------------------

VarSet VarSet::full(std::size_t n) {
    if (n > kMaxVariables) throw DimensionError("at most 64 variables are supported");
    return VarSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

VarSet VarSet::from_indices(std::initializer_list<std::size_t> indices) {
    return from_indices(std::span<const std::size_t>(indices.begin(), indices.size()));
}

VarSet VarSet::from_indices(std::span<const std::size_t> indices) {
    std::uint64_t bits = 0;
    for (auto i : indices) {
        if (i >= kMaxVariables) throw DimensionError("variable index out of range");
        bits |= std::uint64_t{1} << i;
    }
    return VarSet(bits);
}

std::vector<std::size_t> VarSet::indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (auto b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
}

std::strong_ordering VarSet::operator<=>(const VarSet& other) const {
    auto a = indices();
    auto b = other.indices();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

// --- Multidegree ----------------------------------------------------------

Multidegree Multidegree::pure_power(std::size_t n, std::size_t i, Exponent value) {
    if (i >= n) throw DimensionError("variable index out of range");
    Multidegree m(n);
    m[i] = value;
    return m;
}

Multidegree Multidegree::indicator(std::size_t n, VarSet vars) {
    Multidegree m(n);
    for (auto i : vars.indices()) {
        if (i >= n) throw DimensionError("variable index out of range");
        m[i] = 1;
    }
    return m;
}

std::uint64_t Multidegree::total_degree() const noexcept {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Multidegree::is_zero() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::strong_ordering Multidegree::operator<=>(const Multidegree& other) const noexcept {
    return std::lexicographical_compare_three_way(exps_.begin(), exps_.end(), other.exps_.begin(),
                                                  other.exps_.end());
}

bool divides(const Multidegree& a, const Multidegree& b) {
    require_same_dimension(a.size(), b.size(), "divides");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

Multidegree lcm_of(const Multidegree& a, const Multidegree& b) {
    require_same_dimension(a.size(), b.size(), "lcm");
    Multidegree out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

VarSet support_of(const Multidegree& mu) {
    if (mu.size() > kMaxVariables) throw DimensionError("at most 64 variables are supported");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] > 0) bits |= std::uint64_t{1} << i;
    }
    return VarSet(bits);
}

Multidegree lowered(const Multidegree& mu) {
    Multidegree out = mu;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] > 0) --out[i];
    }
    return out;
}

Multidegree raised(const Multidegree& mu, VarSet vars) {
    Multidegree out = mu;
    for (auto i : vars.indices()) {
        if (i >= out.size()) throw DimensionError("variable index out of range");
        if (out[i] == std::numeric_limits<Exponent>::max()) throw OverflowError("exponent overflow");
        ++out[i];
    }
    return out;
}

// --- MonomialIdeal --------------------------------------------------------

MonomialIdeal MonomialIdeal::zero(std::size_t n) { return minimalize({}, n); }

MonomialIdeal MonomialIdeal::unit(std::size_t n) { return minimalize({Multidegree(n)}, n); }

bool MonomialIdeal::is_artinian() const noexcept {
    if (is_unit()) return true;
    std::vector<bool> seen(n_, false);
    for (const auto& g : gens_) {
        std::size_t nonzero = 0;
        std::size_t last = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (g[i] > 0) {
                ++nonzero;
                last = i;
            }
        }
        if (nonzero == 1) seen[last] = true;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

MonomialIdeal minimalize(std::vector<Multidegree> raw, std::size_t n) {
    if (n > kMaxVariables) throw DimensionError("at most 64 variables are supported");
    for (const auto& m : raw) require_same_dimension(m.size(), n, "minimalize");

    // After sorting by degree, a generator can only be divided by earlier ones.
    std::sort(raw.begin(), raw.end(), [](const Multidegree& a, const Multidegree& b) {
        auto da = a.total_degree();
        auto db = b.total_degree();
        return da != db ? da < db : a < b;
    });
    std::vector<Multidegree> kept;
    for (auto& m : raw) {
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Multidegree& k) { return divides(k, m); });
        if (!redundant) kept.push_back(std::move(m));
    }
    std::sort(kept.begin(), kept.end(), LexDescending{});

    MonomialIdeal ideal;
    ideal.n_ = n;
    ideal.gens_ = std::move(kept);
    return ideal;
}

bool contains(const MonomialIdeal& ideal, const Multidegree& nu) {
    require_same_dimension(ideal.ring_dimension(), nu.size(), "contains");
    const auto n = nu.size();
    for (const auto& g : ideal.generators()) {
        std::size_t i = 0;
        while (i < n && g[i] <= nu[i]) ++i;
        if (i == n) return true;
    }
    return false;
}

Multidegree lcm_lambda(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw UndefinedLambdaError("lcm of generators is undefined for the zero ideal");
    Multidegree out(ideal.ring_dimension());
    for (const auto& g : ideal.generators()) {
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], g[i]);
    }
    return out;
}

MonomialIdeal artinian_closure(const MonomialIdeal& ideal) {
    const auto lambda = lcm_lambda(ideal);
    if (ideal.is_artinian()) return ideal;
    const auto n = ideal.ring_dimension();
    std::vector<Multidegree> gens = ideal.generators();
    for (std::size_t i = 0; i < n; ++i) {
        if (lambda[i] == std::numeric_limits<Exponent>::max()) throw OverflowError("exponent overflow in closure");
        gens.push_back(Multidegree::pure_power(n, i, lambda[i] + 1));
    }
    return minimalize(std::move(gens), n);
}

// --- rendering ------------------------------------------------------------

std::vector<std::string> default_variable_names(std::size_t n) {
    if (n <= 3) {
        std::vector<std::string> names{"x", "y", "z"};
        names.resize(n);
        return names;
    }
    if (n == 4) return {"x", "y", "z", "t"};
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::string format_monomial(const Multidegree& mu, std::span<const std::string> names) {
    require_same_dimension(names.size(), mu.size(), "format_monomial");
    std::string out;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += names[i];
        if (mu[i] > 1) out += '^' + std::to_string(mu[i]);
    }
    return out.empty() ? "1" : out;
}

std::string format_monomial(const Multidegree& mu) {
    const auto names = default_variable_names(mu.size());
    return format_monomial(mu, names);
}

std::string format_varset(VarSet vars, std::span<const std::string> names) {
    std::string out = "{";
    bool first = true;
    for (auto i : vars.indices()) {
        if (i >= names.size()) throw DimensionError("variable index out of range");
        if (!first) out += ',';
        out += names[i];
        first = false;
    }
    return out + "}";
}

}  // namespace kozmo
