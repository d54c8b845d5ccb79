#ifndef KOZMO_DECOMPOSITIONS_HPP
#define KOZMO_DECOMPOSITIONS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kozmo/monomial.hpp"
#include "kozmo/mvt.hpp"

namespace kozmo {

/// The irreducible ideal m^a = <x_i^a_i : a_i != 0>.
struct IrreducibleComponent {
    Multidegree exponents;

    /// x^nu lies in m^a.
    bool contains(const Multidegree& nu) const;
    /// m^a contains m^b as ideals.
    bool includes(const IrreducibleComponent& other) const;

    auto operator<=>(const IrreducibleComponent&) const = default;
    bool operator==(const IrreducibleComponent&) const = default;
};

/// The cone x^base * k[x_i : i in free].
struct StanleyCone {
    Multidegree base;
    VarSet free;

    bool contains(const Multidegree& nu) const;

    bool operator==(const StanleyCone&) const = default;
};

struct StanleyDecomposition {
    std::size_t ring_dimension = 0;
    /// Sorted by base (lex descending), then by free set.
    std::vector<StanleyCone> cones;
};

/// Sum over terms of t^shift / (1 - t)^denominator_power.
struct HilbertSeries {
    struct Term {
        std::uint64_t shift = 0;
        std::size_t denominator_power = 0;

        auto operator<=>(const Term&) const = default;
    };

    std::vector<Term> terms;

    /// Taylor coefficients of degrees 0..max_degree. Throws OverflowError if a
    /// coefficient does not fit in 64 bits.
    std::vector<std::uint64_t> coefficients(std::size_t max_degree) const;

    /// Terms grouped by denominator power, e.g. "1 + 2*t + 2*t^2/(1-t)".
    std::string to_string() const;
};

/**
 * Irredundant irreducible decomposition of I, read off the maximal corners
 * of the artinian closure. Components are sorted lex descending.
 */
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal,
                                                            const MvtOptions& options = {});

/// Removes duplicate components and every component that includes another one.
std::vector<IrreducibleComponent> remove_redundant(std::vector<IrreducibleComponent> components);

/// True if no component includes another one (duplicates count as comparable).
bool pairwise_incomparable(std::span<const IrreducibleComponent> components);

/// Zero-dimensional cones on the standard monomials of an artinian ideal.
StanleyDecomposition stanley_artinian(const MonomialIdeal& ideal, const MvtOptions& options = {});

/**
 * Stanley decomposition of R/I: one cone (nu, F) per standard monomial nu
 * of I with 0 <= nu <= lambda + 1, where F = { i : nu_i = lambda_i + 1 }.
 */
StanleyDecomposition stanley_general(const MonomialIdeal& ideal, const MvtOptions& options = {});

HilbertSeries hilbert_series(const StanleyDecomposition& decomposition);

/// Largest number of free directions over the cones.
std::size_t krull_dimension(const StanleyDecomposition& decomposition);

/// Renders m^a as "<x^4, y^5, z^5>".
std::string format_component(const IrreducibleComponent& component, std::span<const std::string> names);

/// Renders a cone as "x^2*y * k[x,z]"; cones without free directions render as the base alone.
std::string format_cone(const StanleyCone& cone, std::span<const std::string> names);

}  // namespace kozmo

#endif  // KOZMO_DECOMPOSITIONS_HPP
