#ifndef KOZMO_MONOMIAL_HPP
#define KOZMO_MONOMIAL_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace kozmo {

using Exponent = std::uint32_t;

/// Largest ring dimension supported. Variable subsets are stored as 64-bit masks.
inline constexpr std::size_t kMaxVariables = 64;

/**
 * A set of variable indices (0-based), stored as a bitmask.
 *
 * Used for supports, simplicial faces and free directions of Stanley cones.
 */
class VarSet {
public:
    constexpr VarSet() = default;
    constexpr explicit VarSet(std::uint64_t bits) : bits_(bits) {}

    static VarSet full(std::size_t n);
    static VarSet from_indices(std::initializer_list<std::size_t> indices);
    static VarSet from_indices(std::span<const std::size_t> indices);

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(std::size_t i) const noexcept { return (bits_ >> i) & 1U; }
    constexpr bool is_subset_of(VarSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }

    constexpr VarSet with(std::size_t i) const noexcept { return VarSet(bits_ | (std::uint64_t{1} << i)); }
    constexpr VarSet without(std::size_t i) const noexcept { return VarSet(bits_ & ~(std::uint64_t{1} << i)); }

    std::vector<std::size_t> indices() const;

    constexpr VarSet operator|(VarSet o) const noexcept { return VarSet(bits_ | o.bits_); }
    constexpr VarSet operator&(VarSet o) const noexcept { return VarSet(bits_ & o.bits_); }

    constexpr bool operator==(const VarSet&) const = default;
    // Orders by increasing index list, e.g. {0} < {0,1} < {1}.
    std::strong_ordering operator<=>(const VarSet& other) const;

private:
    std::uint64_t bits_ = 0;
};

/**
 * Exponent vector of a monomial x^mu in k[x_1..x_n].
 *
 * The length is the ring dimension and never changes. Comparison operators
 * are lexicographic in the exponents.
 */
class Multidegree {
public:
    using Storage = boost::container::small_vector<Exponent, 12>;

    Multidegree() = default;
    explicit Multidegree(std::size_t n) : exps_(n, 0) {}
    Multidegree(std::initializer_list<Exponent> exps) : exps_(exps.begin(), exps.end()) {}
    explicit Multidegree(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {}

    /// x_i^value in a ring of dimension n.
    static Multidegree pure_power(std::size_t n, std::size_t i, Exponent value = 1);
    /// Squarefree monomial with the given support.
    static Multidegree indicator(std::size_t n, VarSet vars);

    std::size_t size() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
    Exponent& operator[](std::size_t i) noexcept { return exps_[i]; }
    std::span<const Exponent> exponents() const noexcept { return {exps_.data(), exps_.size()}; }

    std::uint64_t total_degree() const noexcept;
    bool is_zero() const noexcept;

    bool operator==(const Multidegree& other) const noexcept { return exps_ == other.exps_; }
    std::strong_ordering operator<=>(const Multidegree& other) const noexcept;

private:
    Storage exps_;
};

/// Canonical order used for generators and every rendered set: lex descending.
struct LexDescending {
    bool operator()(const Multidegree& a, const Multidegree& b) const noexcept { return a > b; }
};

bool divides(const Multidegree& a, const Multidegree& b);
Multidegree lcm_of(const Multidegree& a, const Multidegree& b);
VarSet support_of(const Multidegree& mu);
/// mu_i - 1 on the support, 0 elsewhere.
Multidegree lowered(const Multidegree& mu);
/// mu + indicator(vars); throws OverflowError on exponent overflow.
Multidegree raised(const Multidegree& mu, VarSet vars);

/**
 * A monomial ideal given by its minimal generators.
 *
 * Generators are pairwise non-dividing, duplicate free and kept in lex
 * descending order. No generators is the zero ideal; the single generator 0
 * is the unit ideal.
 */
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    static MonomialIdeal zero(std::size_t n);
    static MonomialIdeal unit(std::size_t n);

    std::size_t ring_dimension() const noexcept { return n_; }
    const std::vector<Multidegree>& generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }

    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_zero(); }
    /// Contains a pure power of every variable.
    bool is_artinian() const noexcept;

    bool operator==(const MonomialIdeal&) const = default;

private:
    friend MonomialIdeal minimalize(std::vector<Multidegree> raw, std::size_t n);

    std::size_t n_ = 0;
    std::vector<Multidegree> gens_;
};

/// The divisibility-minimal elements of raw, deduplicated, in canonical order.
MonomialIdeal minimalize(std::vector<Multidegree> raw, std::size_t n);

bool contains(const MonomialIdeal& ideal, const Multidegree& nu);

/// lcm of all minimal generators. Throws UndefinedLambdaError for the zero ideal.
Multidegree lcm_lambda(const MonomialIdeal& ideal);

/// I + <x_i^(lambda_i + 1)>; returns I itself when I is artinian.
MonomialIdeal artinian_closure(const MonomialIdeal& ideal);

/// x, y, z (n <= 3), x, y, z, t (n == 4), otherwise x1..xn.
std::vector<std::string> default_variable_names(std::size_t n);

/// Renders x^mu as e.g. "x^2*y"; the zero vector renders as "1".
std::string format_monomial(const Multidegree& mu, std::span<const std::string> names);
std::string format_monomial(const Multidegree& mu);

/// Renders a variable set as "{x,z}".
std::string format_varset(VarSet vars, std::span<const std::string> names);

void require_same_dimension(std::size_t a, std::size_t b, const char* what);

}  // namespace kozmo

#endif  // KOZMO_MONOMIAL_HPP
