import os
from pathlib import Path

import pytest

import kozmo

DATA = Path(os.environ.get("KOZMO_TEST_DATA", Path(__file__).resolve().parents[2] / "tests" / "data"))


def eight_generators():
    return kozmo.MonomialIdeal(
        [(3, 5, 1), (0, 5, 4), (0, 3, 5), (1, 1, 5), (2, 0, 5), (4, 0, 3), (4, 2, 2), (4, 4, 1)]
    )


def staircase():
    return kozmo.MonomialIdeal([(3, 0, 0), (2, 1, 0), (1, 0, 1), (0, 3, 0), (0, 0, 3)])


def test_minimal_generators():
    i = kozmo.MonomialIdeal([(1, 1), (2, 1), (0, 3)])
    assert i.generators == [(1, 1), (0, 3)]
    assert len(i) == 2
    assert (5, 5) in i
    assert (0, 2) not in i
    assert i.lcm_lambda() == (1, 3)
    assert not i.is_artinian
    assert i.artinian_closure().is_artinian


def test_zero_ideal_needs_dimension():
    with pytest.raises(kozmo.DimensionError):
        kozmo.MonomialIdeal([])
    assert kozmo.MonomialIdeal([], 3).is_zero


def test_corners_and_decomposition():
    i = eight_generators()
    corners = kozmo.maximal_corners(i.artinian_closure())
    assert len(corners) == 7
    assert (4, 5, 5) in corners
    components = kozmo.irreducible_decomposition(i)
    assert sorted(components) == sorted(
        [(4, 5, 5), (0, 2, 3), (0, 4, 2), (3, 0, 4), (2, 1, 0), (1, 3, 0), (0, 0, 1)]
    )
    assert kozmo.maximal_corners(i, strategy="last", prune=False, threads=2) == kozmo.maximal_corners(i)


def test_staircase():
    i = staircase()
    assert kozmo.maximal_corners(i) == [(3, 1, 1), (2, 3, 1), (1, 3, 3)]
    assert kozmo.is_closed_corner(i, (0, 3, 3))
    assert not kozmo.is_closed_corner(i, (1, 1, 1))
    assert kozmo.is_maximal_corner(i, (3, 1, 1))
    assert kozmo.lfd(i, (1, 1, 1)) == [[0, 1], [1, 2]]
    assert kozmo.gfd(i, (1, 1, 1)) == []
    assert kozmo.koszul_homology_dim(i, 2, (3, 1, 1)) == 1


def test_stanley_and_hilbert():
    i = staircase()
    cones = kozmo.stanley_decomposition(i)
    assert len(cones) == 13
    assert all(free == [] for _, free in cones)
    series = kozmo.hilbert_series(i, max_degree=6)
    assert sum(series["coefficients"]) == 13
    assert series["coefficients"] == [kozmo.standard_monomial_count(i, d) for d in range(7)]
    assert kozmo.krull_dimension(i) == 0
    assert kozmo.krull_dimension(kozmo.MonomialIdeal([(1, 1)])) == 1


def test_betti_bounds_bracket_exact_values():
    i = eight_generators()
    bounds = kozmo.betti_bounds(i)
    assert bounds
    for (degree, mu), (lower, upper) in bounds.items():
        exact = kozmo.koszul_homology_bruteforce(i, degree, mu)
        assert lower <= exact <= upper


def test_text_format_round_trip():
    doc = kozmo.parse_ideal("ring: x y z\nideal: x^2*y, xy^3, z\n")
    assert doc.variable_names == ["x", "y", "z"]
    assert doc.ideal.generators == [(2, 1, 0), (1, 3, 0), (0, 0, 1)]
    assert doc.source_format == "monomial-string"
    assert kozmo.parse_ideal(kozmo.format_ideal(doc)).ideal == doc.ideal
    with pytest.raises(kozmo.IdealSyntaxError, match="unknown variable"):
        kozmo.parse_ideal("ring: x y\nideal: w\n")


def test_read_file():
    doc = kozmo.read_ideal_file(str(DATA / "eight_gens.ideal"))
    assert doc.ideal == eight_generators()
    with pytest.raises(kozmo.InvalidInputError):
        kozmo.read_ideal_file(str(DATA / "missing.ideal"))


def test_random_ideal_and_verify():
    i = kozmo.random_ideal(vars=4, gens=6, max_exp=5, seed=3)
    assert i.ring_dimension == 4
    assert len(i) == 6
    assert kozmo.random_ideal(vars=4, gens=6, max_exp=5, seed=3) == i
    report = kozmo.verify(i)
    assert report["irreducible"]["ok"]
    assert report["stanley"]["ok"]
    with pytest.raises(kozmo.FeasibilityError):
        kozmo.random_ideal(vars=2, gens=10, max_exp=2, generic=True)


def test_bad_strategy():
    with pytest.raises(kozmo.InvalidInputError):
        kozmo.maximal_corners(staircase(), strategy="random")
