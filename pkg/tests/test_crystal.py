import itertools

import pytest
from hypothesis import given, strategies as st

from spectab.crystal import (
    CrystalElement,
    CrystalError,
    TensorElement,
    WeightK,
    all_elements,
    component_orbits,
    energy,
    etilde,
    ftilde,
    ground_energy_row,
    is_highest_weight,
    iter_pairs,
    raise_to_highest,
    tensor_etilde,
    tensor_ftilde,
)
from spectab.shapes import SkewShape
from spectab.symfunc import schur


def _sst_count(shape, n):
    return sum(c for _, c in schur(SkewShape(shape), n).terms)


@pytest.mark.parametrize("n", [2, 3])
def test_energy_methods_agree(n):
    for l1, l2 in itertools.product(range(1, 4), repeat=2):
        for b1, b2 in iter_pairs(l1, l2, n):
            h = energy(b1, b2, "offset")
            assert energy(b1, b2, "component") == h
            if l1 == l2:
                assert energy(b1, b2, "min-perm") == h
            assert 0 <= h <= min(l1, l2)


@pytest.mark.parametrize("l1,l2,n", [(1, 1, 2), (2, 1, 3), (2, 2, 3), (3, 2, 3), (2, 3, 2), (2, 2, 4)])
def test_components_are_labelled_by_energy(l1, l2, n):
    orbits = component_orbits(l1, l2, n)
    lo, hi = min(l1, l2), max(l1, l2)
    expected_count = sum(1 for d in range(lo + 1) if _sst_count((hi + d, lo - d), n))
    assert len(orbits) == expected_count
    sizes = {}
    for orbit in orbits:
        values = {energy(x.left, x.right) for x in orbit}
        assert len(values) == 1
        d = values.pop()
        assert d not in sizes
        sizes[d] = len(orbit)
        tops = [x for x in orbit if is_highest_weight((x.left, x.right))]
        assert len(tops) == 1
    for d, size in sizes.items():
        assert size == _sst_count((hi + d, lo - d), n)


def test_full_component_count_when_rank_is_large():
    for l1, l2 in [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)]:
        assert len(component_orbits(l1, l2, 3)) == min(l1, l2) + 1


def test_energy_of_repeated_row():
    for n in range(2, 5):
        for l in range(1, 4):
            for a in range(1, n + 1):
                v = CrystalElement((a,) * l, n)
                assert energy(v, v) == l
    v12 = CrystalElement((1, 2), 2)
    assert energy(v12, v12, "offset") == energy(v12, v12, "component") == energy(v12, v12, "min-perm") == 1


def test_energy_examples():
    b = lambda s, n=3: CrystalElement.parse(s, n)
    assert energy(b("11"), b("22")) == 0
    assert energy(b("22"), b("11")) == 2
    assert energy(b("12"), b("23")) == 0
    assert energy(b("1"), b("123")) == 0
    assert energy(b("3"), b("123")) == 1


@given(st.integers(2, 4), st.integers(1, 3), st.integers(1, 3), st.data())
def test_operators_are_partial_inverses(n, l1, l2, data):
    a = data.draw(st.sampled_from(all_elements(l1, n)))
    b = data.draw(st.sampled_from(all_elements(l2, n)))
    x = TensorElement(a, b)
    for i in range(1, n):
        y = ftilde(i, x)
        if y is not None:
            assert etilde(i, y) == x
            assert energy(y.left, y.right) == energy(a, b)
            assert tensor_ftilde(i, (a, b)) == (y.left, y.right)
        z = etilde(i, x)
        if z is not None:
            assert ftilde(i, z) == x
            assert tensor_etilde(i, (a, b)) == (z.left, z.right)
        else:
            assert tensor_etilde(i, (a, b)) is None


def test_raise_to_highest_reaches_highest_weight():
    for a, b in iter_pairs(2, 2, 3):
        top = raise_to_highest(TensorElement(a, b))
        assert is_highest_weight((top.left, top.right))


def test_single_row_operators():
    v = CrystalElement((1, 1, 2), 3)
    assert v.f(1) == CrystalElement((1, 2, 2), 3)
    assert v.e(1) == CrystalElement((1, 1, 1), 3)
    assert v.f(2) == CrystalElement((1, 1, 3), 3)
    assert v.e(2) is None
    assert v.weight() == (2, 1, 0)


def test_element_validation():
    with pytest.raises(CrystalError):
        CrystalElement((2, 1), 3)
    with pytest.raises(CrystalError):
        CrystalElement((4,), 3)
    with pytest.raises(CrystalError):
        ftilde(3, CrystalElement((1,), 3))
    with pytest.raises(CrystalError):
        energy(CrystalElement((1,), 2), CrystalElement((1,), 3))
    with pytest.raises(CrystalError):
        energy(CrystalElement((1,), 2), CrystalElement((1, 2), 2), "min-perm")
    assert str(CrystalElement.parse("2113", 3)) == "1123"


def test_weight_data():
    K = WeightK.parse("1,0,2")
    assert K.n == 3 and K.level == 3
    assert K.ground_row(1) == CrystalElement((1, 3, 3), 3)
    assert K.ground_row(2) == CrystalElement((2, 2, 3), 3)
    assert K.ground_row(4) == K.ground_row(1)
    assert K.classical_weight() == (1, 0, 0)
    assert WeightK.fundamental(0, 2, 3) == WeightK((0, 0, 2))
    assert WeightK.fundamental(1, 2, 3) == WeightK((2, 0, 0))
    with pytest.raises(CrystalError):
        WeightK((1,))
    with pytest.raises(CrystalError):
        WeightK((1, -1))


@pytest.mark.parametrize("cycle", [(1, 0), (0, 1), (2, 0), (1, 1), (1, 0, 0), (1, 1, 0), (2, 1, 0), (0, 1, 2), (1, 1, 1, 0)])
def test_ground_path_local_energies(cycle):
    K = WeightK(cycle)
    for i in range(1, 3 * K.n):
        assert ground_energy_row(K, i) == K.k(i)
