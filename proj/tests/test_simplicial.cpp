#include "doctest.h"

#include "kozmo/errors.hpp"
#include "kozmo/simplicial.hpp"
#include "support/helpers.hpp"

using namespace kozmo;
using kozmo::test::ideal;
using kozmo::test::md;

namespace {

VarSet vs(std::initializer_list<std::size_t> i) { return VarSet::from_indices(i); }

SimplicialComplex complex_of(std::size_t n, std::initializer_list<std::initializer_list<std::size_t>> faces) {
    std::vector<VarSet> out;
    for (const auto& f : faces) out.push_back(VarSet::from_indices(f));
    return SimplicialComplex::from_faces(n, std::move(out));
}

const SimplicialComplex triangle_boundary = complex_of(3, {{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}});

}  // namespace

TEST_CASE("complex construction") {
    CHECK(SimplicialComplex::void_complex(3).is_void());
    CHECK(SimplicialComplex::void_complex(3).dimension() == -2);
    CHECK(SimplicialComplex::irrelevant(3).is_irrelevant());
    CHECK(SimplicialComplex::irrelevant(3).dimension() == -1);
    CHECK(triangle_boundary.dimension() == 1);
    CHECK(triangle_boundary.facets().size() == 3);
    CHECK_THROWS_AS(complex_of(3, {{}, {0, 1}}), InvalidInputError);
    CHECK_THROWS_AS(complex_of(2, {{}, {2}}), InvalidInputError);
    CHECK(triangle_boundary.induced(vs({0, 1})) == complex_of(3, {{}, {0}, {1}, {0, 1}}));
}

TEST_CASE("upper complexes of the staircase ideal") {
    const auto stair = kozmo::test::staircase();
    CHECK(upper_complex(stair, md({3, 1, 1})) == triangle_boundary);
    CHECK(upper_complex(stair, md({1, 1, 1})) == complex_of(3, {{}, {1}}));
    for (const auto& g : stair.generators()) {
        const auto up = upper_complex(stair, g);
        CHECK(up.contains(VarSet{}));
        // Only the empty face: removing a variable from a minimal generator leaves I.
        CHECK(up.is_irrelevant());
    }
    CHECK(upper_complex(stair, md({0, 0, 0})).is_void());
}

TEST_CASE("lower complexes") {
    const auto stair = kozmo::test::staircase();
    CHECK(lower_complex(stair, md({1, 1, 1})) == complex_of(3, {{}, {0}, {1}, {2}, {0, 1}, {1, 2}}));
    CHECK(lower_complex(ideal({{1}}, 1), md({1})).is_irrelevant());
    CHECK(lower_complex(MonomialIdeal::unit(2), md({1, 1})).is_void());
}

TEST_CASE("reduced homology") {
    const auto circle = reduced_homology(triangle_boundary);
    CHECK(circle.reduced(1) == 1);
    CHECK(circle.reduced(0) == 0);
    CHECK(circle.reduced(-1) == 0);

    const auto simplex = complex_of(3, {{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});
    CHECK(reduced_homology(simplex).is_acyclic());

    const auto two_points = reduced_homology(complex_of(3, {{}, {0}, {2}}));
    CHECK(two_points.reduced(0) == 1);
    CHECK(two_points.reduced(-1) == 0);

    CHECK(reduced_homology(SimplicialComplex::irrelevant(2)).reduced(-1) == 1);
    CHECK(reduced_homology(SimplicialComplex::void_complex(2)).is_acyclic());

    // Two hollow triangles glued at a vertex.
    const auto bouquet = complex_of(5, {{}, {0}, {1}, {2}, {3}, {4}, {0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(reduced_homology(bouquet).reduced(1) == 2);

    // Hollow tetrahedron.
    std::vector<VarSet> sphere;
    for (std::uint64_t b = 0; b < 15; ++b) sphere.push_back(VarSet(b));
    CHECK(reduced_homology(SimplicialComplex::from_faces(4, sphere)).reduced(2) == 1);
}

TEST_CASE("Koszul homology through the upper complex") {
    const auto stair = kozmo::test::staircase();
    CHECK(koszul_homology_dim(stair, 2, md({3, 1, 1})) == 1);
    CHECK(koszul_homology_dim(stair, 2, md({1, 1, 1})) == 0);
    for (const auto& g : stair.generators()) CHECK(koszul_homology_dim(stair, 0, g) == 1);
    CHECK(koszul_homology_dim(ideal({{1, 1, 0}, {0, 1, 1}}, 3), 1, md({1, 1, 1})) == 1);
    CHECK_THROWS_AS(koszul_homology_dim(stair, 4, md({1, 1, 1})), DimensionError);
    CHECK_THROWS_AS(koszul_homology_dim(stair, 1, md({1, 1})), DimensionError);
}

TEST_CASE("dual computation on the lower complex agrees") {
    const auto stair = kozmo::test::staircase();
    for (const auto& mu : {md({3, 1, 1}), md({2, 3, 1}), md({1, 3, 3}), md({1, 1, 1}), md({0, 3, 3}), md({3, 1, 0})}) {
        for (std::size_t i = 0; i <= 3; ++i) {
            CHECK(koszul_homology_dim_dual(stair, i, mu) == koszul_homology_dim(stair, i, mu));
        }
    }
    // The restriction to supp(mu) matters: <y> at mu = y.
    const auto y = ideal({{0, 1}}, 2);
    CHECK(koszul_homology_dim(y, 0, md({0, 1})) == 1);
    CHECK(koszul_homology_dim_dual(y, 0, md({0, 1})) == 1);
}

TEST_CASE("closed and maximal corners") {
    const auto stair = kozmo::test::staircase();
    for (const auto& mu : {md({0, 3, 3}), md({2, 3, 0}), md({3, 0, 1}), md({3, 1, 0}), md({1, 0, 3})}) {
        CHECK(is_closed_corner(stair, mu));
        CHECK_FALSE(is_maximal_corner(stair, mu));
    }
    CHECK_FALSE(is_closed_corner(stair, md({1, 1, 1})));
    CHECK(is_maximal_corner(stair, md({2, 3, 1})));
    CHECK(is_maximal_corner(stair, md({3, 1, 1})));
    CHECK(is_maximal_corner(stair, md({1, 3, 3})));
    CHECK(is_maximal_corner(artinian_closure(kozmo::test::eight_generator_ideal()), md({4, 5, 5})));
    CHECK_FALSE(is_maximal_corner(stair, md({4, 1, 1})));
}

TEST_CASE("locally free directions") {
    const auto stair = kozmo::test::staircase();
    CHECK(lfd(stair, md({1, 1, 1})) == std::vector<VarSet>{vs({0, 1}), vs({1, 2})});
    CHECK(lfd(MonomialIdeal::unit(2), md({1, 1})).empty());
    CHECK(lfd(ideal({{1, 0}}, 2), md({1, 1})) == std::vector<VarSet>{vs({1})});
}

TEST_CASE("globally free directions") {
    const auto stair = kozmo::test::staircase();
    CHECK(gfd(stair, md({1, 1, 1})).empty());
    const auto without_x3 = ideal({{2, 1, 0}, {1, 0, 1}, {0, 3, 0}, {0, 0, 3}}, 3);
    CHECK(gfd(without_x3, md({1, 1, 1})) == std::vector<VarSet>{vs({0})});
    CHECK(gfd(ideal({{1, 1}}, 2), md({2, 0})) == std::vector<VarSet>{vs({0})});
    CHECK(gfd(MonomialIdeal::zero(2), md({0, 0})) == std::vector<VarSet>{VarSet::full(2)});
    CHECK(gfd(ideal({{0, 1}}, 2), md({0, 0})) == std::vector<VarSet>{vs({0})});
}

TEST_CASE("complexes beyond the vertex limit are refused") {
    const std::size_t n = kMaxComplexVertices + 1;
    Multidegree g(n);
    g[0] = 1;
    const auto big = minimalize({g}, n);
    CHECK_THROWS_AS(lower_complex(big, g), ScaleError);
}
