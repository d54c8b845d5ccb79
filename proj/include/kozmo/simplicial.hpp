#ifndef KOZMO_SIMPLICIAL_HPP
#define KOZMO_SIMPLICIAL_HPP

#include <cstddef>
#include <vector>

#include "kozmo/monomial.hpp"

namespace kozmo {

/// Largest vertex count for which complexes are materialized (all faces are stored).
inline constexpr std::size_t kMaxComplexVertices = 24;

/**
 * A simplicial complex on the vertices {0..n-1}, stored as its full face list.
 *
 * Faces are vertex bitmasks kept sorted by (size, index list). The void
 * complex has no faces; the irrelevant complex has only the empty face.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex void_complex(std::size_t n);
    static SimplicialComplex irrelevant(std::size_t n);
    /// Throws InvalidInputError if faces is not downward closed.
    static SimplicialComplex from_faces(std::size_t n, std::vector<VarSet> faces);

    std::size_t vertex_count() const noexcept { return n_; }
    const std::vector<VarSet>& faces() const noexcept { return faces_; }
    bool contains(VarSet face) const;

    bool is_void() const noexcept { return faces_.empty(); }
    bool is_irrelevant() const noexcept { return faces_.size() == 1 && faces_.front().empty(); }

    /// Largest face size minus one; -1 for the irrelevant complex, -2 for the void complex.
    int dimension() const noexcept;

    /// Inclusion-maximal faces in canonical order.
    std::vector<VarSet> facets() const;

    /// Subcomplex of the faces contained in vertices.
    SimplicialComplex induced(VarSet vertices) const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<VarSet> faces_;
};

/**
 * Reduced homology ranks over a field of characteristic zero.
 *
 * dims[k + 1] is dim H~_k for k = -1 .. n-1.
 */
struct HomologyProfile {
    std::vector<std::size_t> dims;

    /// dim H~_k; zero outside the stored range.
    std::size_t reduced(int k) const noexcept;
    bool is_acyclic() const noexcept;

    bool operator==(const HomologyProfile&) const = default;
};

/// Upper Koszul complex: faces tau with mu - tau >= 0 and x^(mu - tau) in I.
SimplicialComplex upper_complex(const MonomialIdeal& ideal, const Multidegree& mu);

/// Lower Koszul complex: faces tau on all n vertices with x^(low(mu) + tau) not in I.
SimplicialComplex lower_complex(const MonomialIdeal& ideal, const Multidegree& mu);

/// Exact reduced homology via ranks of the integer boundary matrices.
HomologyProfile reduced_homology(const SimplicialComplex& complex);

/// dim H_{i,mu}(K(I)) computed as dim H~_{i-1} of the upper Koszul complex; 0 <= i <= n.
std::size_t koszul_homology_dim(const MonomialIdeal& ideal, std::size_t i, const Multidegree& mu);

/**
 * dim H_{i,mu}(K(I)) computed on the lower complex through Alexander duality:
 * dim H~_{|supp mu| - i - 2} of the lower complex restricted to supp(mu).
 */
std::size_t koszul_homology_dim_dual(const MonomialIdeal& ideal, std::size_t i, const Multidegree& mu);

/// x^low(mu) is not in I and x_i * x^low(mu) is in I for every i in supp(mu).
bool is_closed_corner(const MonomialIdeal& ideal, const Multidegree& mu);

/// Closed corner with full support.
bool is_maximal_corner(const MonomialIdeal& ideal, const Multidegree& mu);

/// Locally free directions: facets of the lower complex at mu.
std::vector<VarSet> lfd(const MonomialIdeal& ideal, const Multidegree& mu);

/**
 * Globally free directions: inclusion-maximal non-empty variable sets D such
 * that x^mu* x^sigma stays outside I for every sigma supported on D, where
 * mu* = mu if x^mu is not in I and low(mu) otherwise. Empty when no
 * direction is free.
 */
std::vector<VarSet> gfd(const MonomialIdeal& ideal, const Multidegree& mu);

}  // namespace kozmo

#endif  // KOZMO_SIMPLICIAL_HPP
