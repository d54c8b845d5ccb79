#include "doctest.h"

#include "kozmo/decompositions.hpp"
#include "kozmo/errors.hpp"
#include "kozmo/oracle.hpp"
#include "support/helpers.hpp"

using namespace kozmo;
using namespace kozmo::oracle;
using kozmo::test::ideal;
using kozmo::test::md;
using kozmo::test::mds;

TEST_CASE("integer rank") {
    CHECK(integer_rank({}) == 0);
    CHECK(integer_rank({{0, 0}, {0, 0}}) == 0);
    CHECK(integer_rank({{2, 4}, {1, 2}}) == 1);
    CHECK(integer_rank({{2, 3}, {3, 5}}) == 2);
    CHECK(integer_rank({{6, 10, 15}, {10, 15, 6}, {15, 6, 10}}) == 3);
    CHECK(integer_rank({{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}) == 2);
}

TEST_CASE("Koszul strand boundaries compose to zero") {
    const auto stair = kozmo::test::staircase();
    const auto mu = md({3, 1, 1});
    for (std::size_t i = 1; i < 3; ++i) {
        const auto product = multiply(koszul_boundary(stair, i, mu), koszul_boundary(stair, i + 1, mu));
        for (const auto& row : product) {
            for (auto v : row) CHECK(v == 0);
        }
    }
}

TEST_CASE("brute-force Koszul homology") {
    const auto stair = kozmo::test::staircase();
    CHECK(koszul_homology_bruteforce(stair, 2, md({3, 1, 1})) == 1);
    CHECK(koszul_homology_bruteforce(stair, 2, md({1, 1, 1})) == 0);
    CHECK(koszul_homology_bruteforce(ideal({{1, 1, 0}, {0, 1, 1}}, 3), 1, md({1, 1, 1})) == 1);
    for (const auto& mu : {md({3, 1, 1}), md({4, 4, 4}), md({1, 1, 1})}) CHECK(koszul_homology_bruteforce(stair, 3, mu) == 0);
    CHECK_THROWS_AS(koszul_homology_bruteforce(minimalize(mds({{1, 0, 0, 0, 0, 0}}), 6), 0, md({1, 0, 0, 0, 0, 0})),
                    ScaleError);
}

TEST_CASE("lcm lattice and Betti numbers") {
    const auto two = ideal({{1, 1, 0}, {0, 1, 1}}, 3);
    CHECK(lcm_lattice(two) == mds({{1, 1, 1}, {1, 1, 0}, {0, 1, 1}}));
    const auto betti = betti_numbers(two);
    CHECK(betti.size() == 3);
    CHECK(betti.at({1, md({1, 1, 1})}) == 1);
    CHECK_THROWS_AS(lcm_lattice(kozmo::test::eight_generator_ideal(), 10), ScaleError);

    // Staircase: 5 generators, 7 first syzygies, 3 second syzygies.
    std::size_t per_degree[3] = {0, 0, 0};
    for (const auto& [key, rank] : betti_numbers(kozmo::test::staircase())) per_degree[key.first] += rank;
    CHECK(per_degree[0] == 5);
    CHECK(per_degree[1] == 7);
    CHECK(per_degree[2] == 3);
}

TEST_CASE("box scan for maximal standard monomials") {
    CHECK(maximal_standard_monomials_box(kozmo::test::staircase()) == mds({{2, 0, 0}, {1, 2, 0}, {0, 2, 2}}));
    CHECK(maximal_standard_monomials_box(kozmo::test::eight_generator_ideal(), true) ==
          mds({{4, 5, 0}, {4, 3, 1}, {4, 1, 2}, {3, 4, 4}, {2, 5, 3}, {1, 0, 5}, {0, 2, 5}}));
    CHECK(maximal_standard_monomials_box(ideal({{1, 0}, {0, 1}}, 2)) == mds({{0, 0}}));
    CHECK_THROWS_AS(maximal_standard_monomials_box(ideal({{1, 1}}, 2)), DomainError);
    CHECK_THROWS_AS(maximal_standard_monomials_box(ideal({{400, 0, 0}, {0, 400, 0}, {0, 0, 400}}, 3)), ScaleError);
}

TEST_CASE("standard monomial counts") {
    const auto xy = ideal({{1, 1}}, 2);
    CHECK(standard_monomial_count(xy, 3) == 2);
    const auto maximal = ideal({{1, 0}, {0, 1}}, 2);
    CHECK(standard_monomial_count(maximal, 0) == 1);
    CHECK(standard_monomial_count(maximal, 1) == 0);
    CHECK(standard_monomial_count(maximal, 4) == 0);
    CHECK(standard_monomial_count(ideal({{2, 0}, {1, 1}, {0, 2}}, 2), 1) == 2);
    CHECK(standard_monomial_count(MonomialIdeal::zero(3), 2) == 6);
    CHECK(standard_monomial_count(MonomialIdeal::unit(3), 0) == 0);
    const auto eight = kozmo::test::eight_generator_ideal();
    for (std::uint64_t d = 0; d < 25; ++d) {
        CHECK(standard_monomial_count(eight, d) == standard_monomial_count_capped(eight, d));
    }
}

TEST_CASE("verifying irreducible decompositions") {
    const auto eight = kozmo::test::eight_generator_ideal();
    std::vector<IrreducibleComponent> expected{{md({4, 5, 5})}, {md({0, 2, 3})}, {md({0, 4, 2})}, {md({3, 0, 4})},
                                            {md({2, 1, 0})}, {md({1, 3, 0})}, {md({0, 0, 1})}};
    const auto ok = verify_irreducible(eight, expected);
    CHECK(ok.ok);
    CHECK_FALSE(ok.sampled);

    auto missing_z = expected;
    missing_z.pop_back();
    const auto bad = verify_irreducible(eight, missing_z);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.witness);
    CHECK_FALSE(contains(eight, *bad.witness));

    auto redundant = expected;
    redundant.push_back({md({0, 1, 1})});  // contains <z>
    const auto extra = verify_irreducible(eight, redundant);
    CHECK_FALSE(extra.ok);
    CHECK(extra.detail.find("redundant") != std::string::npos);

    CHECK(verify_irreducible(ideal({{1}}, 1), std::vector<IrreducibleComponent>{{md({1})}}));
    CHECK_THROWS_AS(verify_irreducible(MonomialIdeal::zero(1), std::vector<IrreducibleComponent>{}), DomainError);
}

TEST_CASE("sampled verification on a large box") {
    const auto big = ideal({{500, 0, 0}, {0, 500, 0}, {0, 0, 500}, {250, 250, 250}}, 3);
    const auto components = irreducible_decomposition(big);
    VerifyOptions o;
    o.max_box_cells = 1000;
    const auto v = verify_irreducible(big, components, o);
    CHECK(v.ok);
    CHECK(v.sampled);
}

TEST_CASE("verifying Stanley decompositions") {
    const auto xy = ideal({{1, 1}}, 2);
    const auto sd = stanley_general(xy);
    CHECK(verify_stanley(xy, sd));

    auto doubled = sd;
    doubled.cones.push_back(doubled.cones.front());
    const auto twice = verify_stanley(xy, doubled);
    CHECK_FALSE(twice.ok);
    CHECK(twice.witness);

    auto missing = sd;
    missing.cones.pop_back();  // the cone at 1
    const auto hole = verify_stanley(xy, missing);
    CHECK_FALSE(hole.ok);
    REQUIRE(hole.witness);
    CHECK(*hole.witness == md({0, 0}));

    StanleyDecomposition leaking{2, {{md({1, 1}), VarSet{}}}};
    CHECK_FALSE(verify_stanley(ideal({{1, 1}}, 2), leaking).ok);
}
