import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import compositions
from spectab.shapes import Partition, SkewShape, shape_sh
from spectab.symfunc import partitions_of
from spectab.tableaux import (
    Tableau,
    TableauError,
    descent_multiplicities,
    descents_exponents,
    enumerate_tableaux,
    exponent_ranges,
    is_lattice_word,
    is_lr_tableau,
    is_nonmovable,
    is_semistandard,
    max_ordered_matching,
    reading_word,
    row_is_movable,
    theta_d,
    theta_d_inverse,
    theta_nu,
    theta_nu_inverse,
)

EXPONENT_EXAMPLE = "1,1,2,3,5,5;2,3,3,4;3,4,5;4,5"
THETA_EXAMPLE = "1,1,2,3,3,3,4,4;2,2,4,4,4;3,4"


def test_descent_multiplicities_golden():
    t = Tableau.parse(EXPONENT_EXAMPLE)
    assert t.shape == SkewShape((6, 4, 3, 2))
    assert t.content() == (2, 2, 4, 3, 4)
    assert descent_multiplicities(t, 5) == (1, 2, 3, 2)
    assert descents_exponents(t, (2, 2, 4, 3, 4)) == (1, 2, 0, 2)


def test_theta_nu_golden():
    t = Tableau.parse(THETA_EXAMPLE)
    u = theta_nu(t, (1, 1, 2), (2, 3, 4, 6))
    assert u.shape == SkewShape((6, 6, 6, 6), (4, 3, 2))
    assert u.rows == ((1, 1), (1, 2, 2), (1, 1, 1, 3), (1, 1, 2, 2, 2, 3))
    assert u.display() == "....1,1;...1,2,2;..1,1,1,3;1,1,2,2,2,3"
    assert reading_word(u) == tuple(int(c) for c in "112213111322211")
    assert is_lr_tableau(u)
    assert theta_nu_inverse(u, Partition((8, 5, 2))) == t


def test_parse_with_inner_dots():
    t = Tableau.parse("..1,2;.1,3;2")
    assert t.shape == SkewShape((4, 3, 1), (2, 1))
    assert Tableau.parse(t.display()) == t
    with pytest.raises(TableauError):
        Tableau(SkewShape((2,)), ((1,),))
    with pytest.raises(TableauError):
        Tableau(SkewShape((1,)), ((0,),))


def test_lattice_words():
    assert is_lattice_word((1, 1, 2, 1, 2, 3))
    assert not is_lattice_word((1, 2, 2))
    assert not is_lattice_word((2,))
    assert is_lattice_word(())


def test_single_row_moves():
    # the lower row of 2,2/1 can slide left past nothing: its inner is 0
    t = Tableau(SkewShape((2, 2), (1,)), ((1,), (1, 2)))
    assert not row_is_movable(t, 1)
    # the top row slides onto column 0 only if column strictness survives
    assert row_is_movable(t, 0) is False
    loose = Tableau(SkewShape((3, 1), (1,)), ((1, 1), (2,)))
    assert row_is_movable(loose, 0)
    assert not is_nonmovable(loose)


def _brute_matching(lower, upper):
    best = 0
    for k in range(min(len(lower), len(upper)), 0, -1):
        for a in itertools.combinations(lower, k):
            for b in itertools.permutations(upper, k):
                if all(x < y for x, y in zip(a, b)):
                    return k
    return best


@given(st.lists(st.integers(1, 6), max_size=5), st.lists(st.integers(1, 6), max_size=5))
def test_greedy_matching_is_maximum(lower, upper):
    assert max_ordered_matching(lower, upper) == _brute_matching(lower, upper)


def test_greedy_matching_on_all_small_tableaux():
    for size in range(1, 9):
        for lam in partitions_of(size):
            for t in enumerate_tableaux(SkewShape.straight(lam), alphabet=4):
                for i in range(1, 4):
                    lo, up = t.letter_rows(i), t.letter_rows(i + 1)
                    assert max_ordered_matching(lo, up) == _brute_matching(lo, up)


SMALL_SHAPES = [
    SkewShape((2, 1)),
    SkewShape((3, 2), (1,)),
    SkewShape((3, 3), (2,)),
    SkewShape((2, 2, 1), (1, 1)),
    SkewShape((3, 3, 2), (2, 1)),
    SkewShape((2, 1, 1), (1,)),
    SkewShape((3, 2, 2), (2, 2)),
]


@pytest.mark.parametrize("shape", SMALL_SHAPES, ids=str)
def test_enumeration_kinds_match_filtered_fillings(shape):
    n = 3
    every = list(enumerate_tableaux(shape, kind="all", alphabet=n))
    assert len(every) == n ** shape.size
    expected = {
        "semistandard": [t for t in every if is_semistandard(t)],
        "lr": [t for t in every if is_lr_tableau(t)],
        "nonmovable": [t for t in every if is_semistandard(t) and is_nonmovable(t)],
        "nonmovable-lr": [t for t in every if is_lr_tableau(t) and is_semistandard(t) and is_nonmovable(t)],
    }
    for kind, tableaux in expected.items():
        got = list(enumerate_tableaux(shape, kind=kind, alphabet=n))
        assert sorted(map(str, got)) == sorted(map(str, tableaux)), kind
        assert len(set(got)) == len(got)


def test_enumeration_with_content():
    shape = SkewShape((3, 2))
    assert len(list(enumerate_tableaux(shape, (2, 2, 1)))) == 2
    assert list(enumerate_tableaux(shape, (2, 2))) == []


def test_theta_d_bijection_small():
    for size in range(1, 7):
        for mu in compositions(size):
            for lam in partitions_of(size, max_length=len(mu)):
                sst = list(enumerate_tableaux(SkewShape.straight(lam), mu))
                images = {}
                for t in sst:
                    u = theta_d(t, mu)
                    assert u.shape == shape_sh(descents_exponents(t, mu), mu)
                    assert is_semistandard(u) and is_lr_tableau(u) and is_nonmovable(u)
                    assert theta_d_inverse(u, lam) == t
                    images.setdefault(descents_exponents(t, mu), set()).add(u)
                for d in itertools.product(*exponent_ranges(mu)):
                    lr0 = set(enumerate_tableaux(shape_sh(d, mu), lam.parts, "nonmovable-lr"))
                    assert lr0 == images.get(d, set())


def test_nonmovable_exactly_at_own_exponents_with_margin():
    """Offsets one past the exponent boxes are included."""
    for size in range(1, 8):
        for mu in compositions(size):
            ranges = [range(r.start, r.stop + 1) for r in exponent_ranges(mu)]
            for lam in partitions_of(size, max_length=len(mu)):
                for t in enumerate_tableaux(SkewShape.straight(lam), mu):
                    d = descents_exponents(t, mu)
                    for nu in itertools.product(*ranges):
                        u = theta_nu(t, nu, mu)
                        assert is_lr_tableau(u)
                        assert is_semistandard(u) == all(a >= b for a, b in zip(nu, d))
                        assert is_nonmovable(u) == (nu == d)


SKEW_CASES = [
    (SkewShape((3, 2), (1,)), (2, 1, 1)),
    (SkewShape((3, 3, 1), (2, 1)), (2, 1, 1)),
    (SkewShape((4, 2, 1), (2,)), (2, 2, 1)),
    (SkewShape((3, 2, 2), (1, 1)), (2, 2, 1)),
    (SkewShape((3, 3, 2), (2, 1)), (2, 2, 1)),
    (SkewShape((4, 3), (2, 1)), (2, 2)),
]


@pytest.mark.parametrize("shape,mu", SKEW_CASES, ids=lambda x: str(x))
def test_extended_theta_on_skew_tableaux(shape, mu):
    for t in enumerate_tableaux(shape, mu):
        u = theta_d(t, mu)
        assert is_semistandard(u) and is_lr_tableau(u) and is_nonmovable(u)
        assert theta_d_inverse(u, shape) == t
        assert u.content() == shape.outer


def test_theta_rejects_bad_input():
    with pytest.raises(TableauError):
        theta_nu(Tableau.parse("2,1"), (0,), (1, 1))
    with pytest.raises(TableauError):
        theta_nu(Tableau.parse("1,2"), (0,), (1, 2))
    with pytest.raises(TableauError):
        descents_exponents(Tableau.parse("1,2"), (2,))
