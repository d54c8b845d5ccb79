#ifndef KOZMO_ORACLE_HPP
#define KOZMO_ORACLE_HPP

// Brute-force reference computations. Nothing here calls into the simplicial,
// Mayer-Vietoris or decomposition code; only monomial arithmetic is shared.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kozmo/decompositions.hpp"
#include "kozmo/monomial.hpp"

namespace kozmo::oracle {

inline constexpr std::size_t kMaxKoszulVariables = 5;
inline constexpr std::uint64_t kMaxBoxCells = 10'000'000;

/**
 * Matrix of the Koszul differential on the multidegree-mu strand.
 *
 * Columns are the basis elements x^(mu - tau) (x) e_tau of I (x) wedge^i V
 * with |tau| = degree, rows those of I (x) wedge^(i-1) V. Basis elements are
 * identified by tau.
 */
struct BoundaryMatrix {
    std::size_t degree = 0;
    std::vector<VarSet> row_basis;
    std::vector<VarSet> column_basis;
    std::vector<std::vector<long>> entries;  // entries[row][column]
};

/// The strand differential d_i : (I (x) wedge^i V)_mu -> (I (x) wedge^(i-1) V)_mu.
BoundaryMatrix koszul_boundary(const MonomialIdeal& ideal, std::size_t i, const Multidegree& mu);

/// Product a * b of integer matrices (a.columns must match b.rows).
std::vector<std::vector<long>> multiply(const BoundaryMatrix& a, const BoundaryMatrix& b);

/// Rank of an integer matrix by gcd-based row reduction over the integers.
std::size_t integer_rank(const std::vector<std::vector<long>>& matrix);

/// dim H_{i,mu}(K(I)) straight from the Koszul strand; n <= 5.
std::size_t koszul_homology_bruteforce(const MonomialIdeal& ideal, std::size_t i, const Multidegree& mu);

/// lcms of all non-empty subsets of the generators, lex descending. Throws ScaleError beyond max_size elements.
std::vector<Multidegree> lcm_lattice(const MonomialIdeal& ideal, std::size_t max_size = 100'000);

/// Non-zero Koszul homology ranks over the lcm lattice, keyed by (i, mu).
std::map<std::pair<std::size_t, Multidegree>, std::size_t> betti_numbers(const MonomialIdeal& ideal);

/**
 * Maximal standard monomials by scanning 0 <= nu <= lambda. Non-artinian
 * ideals are rejected unless use_closure asks to scan the artinian closure.
 */
std::vector<Multidegree> maximal_standard_monomials_box(const MonomialIdeal& ideal, bool use_closure = false);

/// Number of standard monomials of total degree d.
std::uint64_t standard_monomial_count(const MonomialIdeal& ideal, std::uint64_t degree);

/// Same count through classes of exponents capped at lambda + 1; used when direct enumeration is too long.
std::uint64_t standard_monomial_count_capped(const MonomialIdeal& ideal, std::uint64_t degree);

struct Verdict {
    bool ok = true;
    /// The check used random samples instead of the whole box.
    bool sampled = false;
    std::optional<Multidegree> witness;
    std::string detail;

    explicit operator bool() const noexcept { return ok; }
};

struct VerifyOptions {
    std::uint64_t max_box_cells = kMaxBoxCells;
    std::uint64_t samples = 10'000;
    std::uint64_t seed = 1;
};

/**
 * Checks that the components intersect to I (on the box 0 <= nu <= lambda + 2,
 * or on samples when the box is too large) and that none of them is redundant.
 */
Verdict verify_irreducible(const MonomialIdeal& ideal, std::span<const IrreducibleComponent> components,
                           const VerifyOptions& options = {});

/// Checks that every standard monomial of the box lies in exactly one cone and no cone meets I.
Verdict verify_stanley(const MonomialIdeal& ideal, const StanleyDecomposition& decomposition,
                       const VerifyOptions& options = {});

}  // namespace kozmo::oracle

#endif  // KOZMO_ORACLE_HPP
