#include "kozmo/oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "kozmo/errors.hpp"

namespace kozmo::oracle {

namespace {

using BigInt = boost::multiprecision::cpp_int;

void require_koszul_scale(std::size_t n) {
    if (n > kMaxKoszulVariables) {
        throw ScaleError("brute-force Koszul homology is limited to " + std::to_string(kMaxKoszulVariables) +
                         " variables");
    }
}

// Faces tau of the strand basis: tau inside supp(mu), |tau| = size, x^(mu - tau) in I.
std::vector<VarSet> strand_basis(const MonomialIdeal& ideal, const Multidegree& mu, std::size_t size) {
    std::vector<VarSet> basis;
    const auto n = mu.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        const VarSet tau(bits);
        if (tau.size() != size) continue;
        Multidegree shifted = mu;
        bool fits = true;
        for (auto j : tau.indices()) {
            if (shifted[j] == 0) {
                fits = false;
                break;
            }
            --shifted[j];
        }
        if (fits && contains(ideal, shifted)) basis.push_back(tau);
    }
    return basis;
}

bool in_component(const Multidegree& a, const Multidegree& nu) {
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (a[i] != 0 && nu[i] >= a[i]) return true;
    }
    return false;
}

bool in_cone(const StanleyCone& cone, const Multidegree& nu) {
    for (std::size_t i = 0; i < nu.size(); ++i) {
        const bool free = ((cone.free.bits() >> i) & 1U) != 0;
        if (free ? nu[i] < cone.base[i] : nu[i] != cone.base[i]) return false;
    }
    return true;
}

std::uint64_t box_cells(const Multidegree& bound) {
    std::uint64_t cells = 1;
    for (std::size_t i = 0; i < bound.size(); ++i) {
        const std::uint64_t side = std::uint64_t{bound[i]} + 1;
        if (cells > kMaxBoxCells * 1000 / side) return std::numeric_limits<std::uint64_t>::max();
        cells *= side;
    }
    return cells;
}

// Odometer over 0 <= nu <= bound; fn returns false to stop early.
template <typename Fn>
void scan_box(const Multidegree& bound, Fn&& fn) {
    Multidegree nu(bound.size());
    while (true) {
        if (!fn(nu)) return;
        std::size_t i = 0;
        while (i < nu.size() && nu[i] == bound[i]) {
            nu[i] = 0;
            ++i;
        }
        if (i == nu.size()) return;
        ++nu[i];
    }
}

// Lambda of I, or zeros for the zero ideal (only used to size boxes).
Multidegree box_lambda(const MonomialIdeal& ideal) {
    return ideal.is_zero() ? Multidegree(ideal.ring_dimension()) : lcm_lambda(ideal);
}

std::uint64_t binomial(std::uint64_t m, std::uint64_t r) {
    if (r > m) return 0;
    r = std::min(r, m - r);
    BigInt c = 1;
    for (std::uint64_t j = 0; j < r; ++j) c = c * (m - j) / (j + 1);
    if (c > std::numeric_limits<std::uint64_t>::max()) throw OverflowError("count exceeds 64 bits");
    return static_cast<std::uint64_t>(c);
}

}  // namespace

// --- Koszul strand --------------------------------------------------------

BoundaryMatrix koszul_boundary(const MonomialIdeal& ideal, std::size_t i, const Multidegree& mu) {
    const auto n = ideal.ring_dimension();
    require_same_dimension(n, mu.size(), "koszul_boundary");
    require_koszul_scale(n);
    BoundaryMatrix d;
    d.degree = i;
    d.column_basis = strand_basis(ideal, mu, i);
    if (i > 0) d.row_basis = strand_basis(ideal, mu, i - 1);
    d.entries.assign(d.row_basis.size(), std::vector<long>(d.column_basis.size(), 0));
    for (std::size_t c = 0; c < d.column_basis.size(); ++c) {
        const auto tau = d.column_basis[c];
        // d(x^a (x) e_j1 ^ ... ^ e_ji) = sum_k (-1)^(k+1) x_jk x^a (x) e_tau\jk
        long sign = 1;
        for (auto j : tau.indices()) {
            const auto face = tau.without(j);
            const auto row = std::find(d.row_basis.begin(), d.row_basis.end(), face);
            if (row == d.row_basis.end()) throw Error("Koszul strand basis is not closed under the differential");
            d.entries[static_cast<std::size_t>(row - d.row_basis.begin())][c] += sign;
            sign = -sign;
        }
    }
    return d;
}

std::vector<std::vector<long>> multiply(const BoundaryMatrix& a, const BoundaryMatrix& b) {
    if (a.column_basis != b.row_basis) throw DimensionError("boundary matrices do not compose");
    std::vector<std::vector<long>> out(a.row_basis.size(), std::vector<long>(b.column_basis.size(), 0));
    for (std::size_t r = 0; r < a.row_basis.size(); ++r) {
        for (std::size_t k = 0; k < a.column_basis.size(); ++k) {
            if (a.entries[r][k] == 0) continue;
            for (std::size_t c = 0; c < b.column_basis.size(); ++c) out[r][c] += a.entries[r][k] * b.entries[k][c];
        }
    }
    return out;
}

std::size_t integer_rank(const std::vector<std::vector<long>>& matrix) {
    if (matrix.empty()) return 0;
    std::vector<std::vector<BigInt>> m;
    m.reserve(matrix.size());
    for (const auto& row : matrix) m.emplace_back(row.begin(), row.end());
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        // Euclid on column c among rows rank..: unimodular row operations until
        // a single non-zero entry remains.
        while (true) {
            std::size_t best = rows;
            for (std::size_t r = rank; r < rows; ++r) {
                if (m[r][c] != 0 && (best == rows || abs(m[r][c]) < abs(m[best][c]))) best = r;
            }
            if (best == rows) break;
            std::swap(m[rank], m[best]);
            bool reduced = true;
            for (std::size_t r = rank + 1; r < rows; ++r) {
                if (m[r][c] == 0) continue;
                const BigInt q = m[r][c] / m[rank][c];
                for (std::size_t j = c; j < cols; ++j) m[r][j] -= q * m[rank][j];
                if (m[r][c] != 0) reduced = false;
            }
            if (reduced) {
                ++rank;
                break;
            }
        }
    }
    return rank;
}

std::size_t koszul_homology_bruteforce(const MonomialIdeal& ideal, std::size_t i, const Multidegree& mu) {
    const auto n = ideal.ring_dimension();
    if (i > n) throw DimensionError("homological degree out of range");
    const auto d_i = koszul_boundary(ideal, i, mu);
    const auto d_next = koszul_boundary(ideal, i + 1, mu);
    const auto cycles = d_i.column_basis.size() - integer_rank(d_i.entries);
    return cycles - integer_rank(d_next.entries);
}

std::vector<Multidegree> lcm_lattice(const MonomialIdeal& ideal, std::size_t max_size) {
    const auto& gens = ideal.generators();
    std::set<Multidegree> seen(gens.begin(), gens.end());
    std::vector<Multidegree> frontier(gens.begin(), gens.end());
    while (!frontier.empty()) {
        std::vector<Multidegree> next;
        for (const auto& e : frontier) {
            for (const auto& g : gens) {
                auto l = lcm_of(e, g);
                if (seen.insert(l).second) {
                    if (seen.size() > max_size) throw ScaleError("lcm lattice is too large");
                    next.push_back(std::move(l));
                }
            }
        }
        frontier = std::move(next);
    }
    return {seen.rbegin(), seen.rend()};
}

std::map<std::pair<std::size_t, Multidegree>, std::size_t> betti_numbers(const MonomialIdeal& ideal) {
    require_koszul_scale(ideal.ring_dimension());
    std::map<std::pair<std::size_t, Multidegree>, std::size_t> out;
    for (const auto& mu : lcm_lattice(ideal)) {
        for (std::size_t i = 0; i <= ideal.ring_dimension(); ++i) {
            const auto b = koszul_homology_bruteforce(ideal, i, mu);
            if (b != 0) out[{i, mu}] = b;
        }
    }
    return out;
}

// --- standard monomials ---------------------------------------------------

std::vector<Multidegree> maximal_standard_monomials_box(const MonomialIdeal& ideal, bool use_closure) {
    const MonomialIdeal scanned = use_closure ? artinian_closure(ideal) : ideal;
    if (!scanned.is_artinian()) {
        throw DomainError("box scan of maximal standard monomials needs an artinian ideal (or the closure flag)");
    }
    if (scanned.is_unit()) return {};
    const auto lambda = lcm_lambda(scanned);
    if (box_cells(lambda) > kMaxBoxCells) throw ScaleError("box is too large for a maximal standard monomial scan");
    std::vector<Multidegree> out;
    scan_box(lambda, [&](const Multidegree& nu) {
        if (contains(scanned, nu)) return true;
        Multidegree up = nu;
        for (std::size_t i = 0; i < up.size(); ++i) {
            ++up[i];
            const bool inside = contains(scanned, up);
            --up[i];
            if (!inside) return true;
        }
        out.push_back(nu);
        return true;
    });
    std::sort(out.begin(), out.end(), LexDescending{});
    return out;
}

std::uint64_t standard_monomial_count(const MonomialIdeal& ideal, std::uint64_t degree) {
    const auto n = ideal.ring_dimension();
    if (ideal.is_unit()) return 0;
    if (n == 0) return degree == 0 ? 1 : 0;
    const auto all = binomial(degree + n - 1, n - 1);
    if (ideal.is_zero()) return all;
    if (all > 1'000'000) return standard_monomial_count_capped(ideal, degree);

    // Every composition of degree into n parts, one by one.
    std::uint64_t count = 0;
    Multidegree nu(n);
    auto visit = [&](auto&& self, std::size_t i, std::uint64_t remaining) -> void {
        if (i + 1 == n) {
            nu[i] = static_cast<Exponent>(remaining);
            if (!contains(ideal, nu)) ++count;
            return;
        }
        for (std::uint64_t e = 0; e <= remaining; ++e) {
            nu[i] = static_cast<Exponent>(e);
            self(self, i + 1, remaining - e);
        }
    };
    visit(visit, 0, degree);
    return count;
}

std::uint64_t standard_monomial_count_capped(const MonomialIdeal& ideal, std::uint64_t degree) {
    const auto n = ideal.ring_dimension();
    if (ideal.is_unit()) return 0;
    if (ideal.is_zero()) return n == 0 ? (degree == 0 ? 1 : 0) : binomial(degree + n - 1, n - 1);
    // Membership only depends on exponents capped at lambda_i + 1. A capped
    // class c stands for the monomials equal to c off F = {i : c_i = lambda_i + 1}
    // and at least c on F.
    auto cap = lcm_lambda(ideal);
    for (std::size_t i = 0; i < n; ++i) ++cap[i];
    if (box_cells(cap) > kMaxBoxCells) throw ScaleError("box is too large for a capped standard monomial count");
    std::uint64_t count = 0;
    scan_box(cap, [&](const Multidegree& c) {
        if (contains(ideal, c)) return true;
        const auto base = c.total_degree();
        if (base > degree) return true;
        std::size_t free = 0;
        for (std::size_t i = 0; i < n; ++i) free += c[i] == cap[i] ? 1 : 0;
        const auto extra = degree - base;
        count += free == 0 ? (extra == 0 ? 1 : 0) : binomial(extra + free - 1, free - 1);
        return true;
    });
    return count;
}

// --- verifiers ------------------------------------------------------------

Verdict verify_irreducible(const MonomialIdeal& ideal, std::span<const IrreducibleComponent> components,
                           const VerifyOptions& options) {
    const auto n = ideal.ring_dimension();
    if (ideal.is_zero()) throw DomainError("the zero ideal has no irreducible decomposition to verify");
    Verdict verdict;
    auto bound = lcm_lambda(ideal);
    Multidegree widest(n);
    for (const auto& c : components) {
        require_same_dimension(c.exponents.size(), n, "verify_irreducible");
        if (c.exponents.is_zero()) {
            verdict.ok = false;
            verdict.detail = "a component is the zero ideal";
            return verdict;
        }
        for (std::size_t i = 0; i < n; ++i) widest[i] = std::max(widest[i], c.exponents[i]);
    }
    for (std::size_t i = 0; i < n; ++i) bound[i] = std::max(bound[i], widest[i]) + 2;

    auto check = [&](const Multidegree& nu) {
        const bool in_ideal = contains(ideal, nu);
        const bool in_all = std::all_of(components.begin(), components.end(),
                                        [&](const IrreducibleComponent& c) { return in_component(c.exponents, nu); });
        if (in_ideal == in_all) return true;
        verdict.ok = false;
        verdict.witness = nu;
        verdict.detail = in_ideal ? "monomial of I missing from a component" : "intersection contains a standard monomial";
        return false;
    };

    if (box_cells(bound) <= options.max_box_cells) {
        scan_box(bound, check);
    } else {
        verdict.sampled = true;
        std::mt19937_64 rng(options.seed);
        for (std::uint64_t s = 0; s < options.samples && verdict.ok; ++s) {
            Multidegree nu(n);
            if (s % 2 == 0 || components.empty()) {
                for (std::size_t i = 0; i < n; ++i) nu[i] = std::uniform_int_distribution<Exponent>(0, bound[i])(rng);
            } else {
                // Points around the corner of a random component, where the
                // intersection is most likely to be wrong.
                const auto& a = components[std::uniform_int_distribution<std::size_t>(0, components.size() - 1)(rng)];
                for (std::size_t i = 0; i < n; ++i) {
                    if (a.exponents[i] == 0) {
                        nu[i] = std::uniform_int_distribution<Exponent>(0, bound[i])(rng);
                    } else {
                        const Exponent lo = a.exponents[i] >= 2 ? a.exponents[i] - 2 : 0;
                        nu[i] = std::uniform_int_distribution<Exponent>(lo, a.exponents[i])(rng);
                    }
                }
            }
            check(nu);
        }
    }
    if (!verdict.ok) return verdict;

    // m^a is needed iff the largest monomial outside it (a - 1 on the
    // support, as large as needed elsewhere) lies in every other component.
    for (std::size_t k = 0; k < components.size(); ++k) {
        const auto& a = components[k].exponents;
        Multidegree top(n);
        for (std::size_t i = 0; i < n; ++i) top[i] = a[i] > 0 ? a[i] - 1 : widest[i];
        bool in_others = true;
        for (std::size_t j = 0; j < components.size() && in_others; ++j) {
            if (j != k && !in_component(components[j].exponents, top)) in_others = false;
        }
        if (!in_others) {
            verdict.ok = false;
            verdict.witness = top;
            verdict.detail = "component " + std::to_string(k) + " is redundant";
            return verdict;
        }
    }
    return verdict;
}

Verdict verify_stanley(const MonomialIdeal& ideal, const StanleyDecomposition& decomposition,
                       const VerifyOptions& options) {
    const auto n = ideal.ring_dimension();
    require_same_dimension(decomposition.ring_dimension, n, "verify_stanley");
    Verdict verdict;
    auto bound = box_lambda(ideal);
    for (const auto& cone : decomposition.cones) {
        require_same_dimension(cone.base.size(), n, "verify_stanley");
        for (std::size_t i = 0; i < n; ++i) bound[i] = std::max(bound[i], cone.base[i]);
    }
    for (std::size_t i = 0; i < n; ++i) bound[i] += 2;

    auto check = [&](const Multidegree& nu) {
        std::size_t covering = 0;
        for (const auto& cone : decomposition.cones) covering += in_cone(cone, nu) ? 1 : 0;
        const bool in_ideal = contains(ideal, nu);
        if (in_ideal && covering > 0) {
            verdict.detail = "a cone contains a monomial of I";
        } else if (!in_ideal && covering != 1) {
            verdict.detail = "standard monomial covered " + std::to_string(covering) + " times";
        } else {
            return true;
        }
        verdict.ok = false;
        verdict.witness = nu;
        return false;
    };

    if (box_cells(bound) <= options.max_box_cells) {
        scan_box(bound, check);
    } else {
        verdict.sampled = true;
        std::mt19937_64 rng(options.seed);
        for (std::uint64_t s = 0; s < options.samples && verdict.ok; ++s) {
            Multidegree nu(n);
            for (std::size_t i = 0; i < n; ++i) nu[i] = std::uniform_int_distribution<Exponent>(0, bound[i])(rng);
            check(nu);
        }
    }
    return verdict;
}

}  // namespace kozmo::oracle
