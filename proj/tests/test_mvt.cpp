#include "doctest.h"

#include "kozmo/errors.hpp"
#include "kozmo/mvt.hpp"
#include "support/helpers.hpp"

using namespace kozmo;
using kozmo::test::ideal;
using kozmo::test::md;
using kozmo::test::mds;

TEST_CASE("pivot strategies") {
    const auto gens = mds({{2, 3, 0, 0}, {0, 3, 1, 1}, {0, 1, 0, 2}, {0, 0, 3, 2}});
    CHECK(PivotStrategy::lex_first().select(gens) == 0);
    CHECK(PivotStrategy::last_generator().select(gens) == 3);
    const auto lowest_degree = PivotStrategy::custom(
        [](const Multidegree& a, const Multidegree& b) { return a.total_degree() < b.total_degree(); }, "degree");
    CHECK(lowest_degree.select(gens) == 2);
    CHECK(lowest_degree.name() == "degree");
    CHECK(lowest_degree.rule() == PivotRule::Custom);
}

TEST_CASE("children of a node") {
    const auto [left, right] = mvt_children(kozmo::test::four_variable_ideal(), PivotStrategy::lex_first());
    CHECK(left == ideal({{2, 3, 1, 1}, {2, 3, 0, 2}}, 4));
    CHECK(right == ideal({{0, 3, 1, 1}, {0, 1, 0, 2}, {0, 0, 3, 2}}, 4));

    const auto [l2, r2] = mvt_children(ideal({{1, 1, 0}, {0, 1, 1}}, 3), PivotStrategy::last_generator());
    CHECK(l2 == ideal({{1, 1, 1}}, 3));
    CHECK(r2 == ideal({{1, 1, 0}}, 3));

    const auto [l3, r3] = mvt_children(ideal({{1, 0}, {0, 1}}, 2), PivotStrategy::last_generator());
    CHECK(l3 == ideal({{1, 1}}, 2));
    CHECK(r3 == ideal({{1, 0}}, 2));

    CHECK_THROWS_AS(mvt_children(ideal({{1, 0}}, 2), PivotStrategy::lex_first()), LeafError);
}

TEST_CASE("pruned tree of the four-variable example") {
    const auto tree = build_mvt(kozmo::test::four_variable_ideal(), PivotStrategy::lex_first(), true);
    REQUIRE(tree.size() == 3);
    const auto& root = tree.root();
    REQUIRE(root.left);
    REQUIRE(root.right);
    const auto& left = tree.nodes()[*root.left];
    const auto& right = tree.nodes()[*root.right];
    CHECK(left.position() == 2);
    CHECK(left.dimension == 1);
    CHECK(left.relevant);
    CHECK((left.pruned & kPrunedByGenerators) != 0);
    CHECK(right.position() == 3);
    CHECK(right.dimension == 0);
    CHECK_FALSE(right.relevant);
    CHECK((right.pruned & kPrunedByIndeterminates) != 0);
    CHECK(compute_b_n_minus_1(kozmo::test::four_variable_ideal()).empty());
}

TEST_CASE("unpruned tree of two generators") {
    const auto tree = build_mvt(ideal({{1, 1, 0}, {0, 1, 1}}, 3), PivotStrategy::last_generator(), false);
    REQUIRE(tree.size() == 3);
    CHECK_FALSE(tree.is_pruned());
    CHECK(tree.root().position() == 1);
    CHECK(tree.root().dimension == 0);
    const auto& left = tree.nodes()[*tree.root().left];
    const auto& right = tree.nodes()[*tree.root().right];
    CHECK(left.position() == 2);
    CHECK(left.dimension == 1);
    CHECK(left.ideal == ideal({{1, 1, 1}}, 3));
    CHECK(right.position() == 3);
    CHECK(right.ideal == ideal({{1, 1, 0}}, 3));

    const auto single = build_mvt(ideal({{1}}, 1), PivotStrategy::lex_first(), false);
    CHECK(single.size() == 1);
    CHECK_FALSE(single.root().left);
}

TEST_CASE("tree positions follow the binary numbering") {
    const auto tree = build_mvt(kozmo::test::staircase(), PivotStrategy::lex_first(), false);
    for (const auto& node : tree.nodes()) {
        if (node.left) CHECK(tree.nodes()[*node.left].position() == 2 * node.position());
        if (node.right) CHECK(tree.nodes()[*node.right].position() == 2 * node.position() + 1);
        CHECK(node.relevant == (node.position() == 1 || node.position() % 2 == 0));
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(build_mvt(MonomialIdeal::zero(2), PivotStrategy::lex_first(), true), DomainError);
    CHECK_THROWS_AS(build_mvt(MonomialIdeal::unit(2), PivotStrategy::lex_first(), true), DomainError);
    CHECK_THROWS_AS(compute_b_n_minus_1(MonomialIdeal::zero(2)), DomainError);
    CHECK_THROWS_AS(build_mvt(kozmo::test::eight_generator_ideal(), PivotStrategy::lex_first(), false, 5), ScaleError);
}

TEST_CASE("Betti bounds") {
    const auto tree = build_mvt(ideal({{1, 1, 0}, {0, 1, 1}}, 3), PivotStrategy::last_generator(), false);
    const auto bounds = betti_bounds(tree);
    CHECK(bounds.size() == 3);
    CHECK(bounds.at({0, md({1, 1, 0})}) == BettiBound{1, 1});
    CHECK(bounds.at({0, md({0, 1, 1})}) == BettiBound{1, 1});
    CHECK(bounds.at({1, md({1, 1, 1})}) == BettiBound{1, 1});

    const auto x = betti_bounds(build_mvt(ideal({{1}}, 1), PivotStrategy::lex_first(), false));
    CHECK(x.size() == 1);
    CHECK(x.at({0, md({1})}) == BettiBound{1, 1});

    CHECK_THROWS_AS(betti_bounds(build_mvt(kozmo::test::staircase(), PivotStrategy::lex_first(), true)),
                    InvalidInputError);
}

TEST_CASE("maximal corners") {
    CHECK(compute_b_n_minus_1(kozmo::test::staircase()) == mds({{3, 1, 1}, {2, 3, 1}, {1, 3, 3}}));
    CHECK(compute_b_n_minus_1(ideal({{1, 1, 0}, {0, 1, 1}}, 3)).empty());
    CHECK(compute_b_n_minus_1(artinian_closure(kozmo::test::eight_generator_ideal())) ==
          mds({{5, 6, 1}, {5, 4, 2}, {5, 2, 3}, {4, 5, 5}, {3, 6, 4}, {2, 1, 6}, {1, 3, 6}}));
    CHECK(compute_b_n_minus_1(ideal({{2}}, 1)) == mds({{2}}));
}

TEST_CASE("search options give the same corners") {
    const auto closure = artinian_closure(kozmo::test::eight_generator_ideal());
    const auto reference = compute_b_n_minus_1(closure);
    for (bool shortcut : {false, true}) {
        for (unsigned threads : {1U, 3U}) {
            MvtOptions o;
            o.eliminate_variables = shortcut;
            o.threads = threads;
            CHECK(compute_b_n_minus_1(closure, o) == reference);
        }
    }
    CHECK(compute_b_n_minus_1(closure, MvtOptions::unpruned(PivotStrategy::last_generator())) == reference);
    const auto search = search_maximal_corners(closure);
    CHECK(search.stats.nodes > 0);
    CHECK(search.stats.distinct_candidates >= search.corners.size());
}

TEST_CASE("tree dump") {
    const auto tree = build_mvt(kozmo::test::four_variable_ideal(), PivotStrategy::lex_first(), true);
    const auto text = dump_tree(tree, default_variable_names(4));
    CHECK(text ==
          "1 0 R [x^2*y^3, y^3*z*t, y*t^2, z^3*t^2]\n"
          "2 1 R [x^2*y^3*z*t, x^2*y^3*t^2] pruned:generators\n"
          "3 0 - [y^3*z*t, y*t^2, z^3*t^2] pruned:generators,indeterminates\n");
}
