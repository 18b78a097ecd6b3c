import itertools
from collections import Counter

import pytest

from spectab.crystal import CrystalElement, WeightK, energy, is_highest_weight
from spectab.shapes import Partition, SkewShape, border_strip
from spectab.symfunc import (
    QPolynomial,
    SchurExpansion,
    complete_homogeneous,
    kostka_foulkes,
    monomial_one,
    partitions_of,
    schur,
)
from spectab.spectral import (
    FinitePath,
    SpectralError,
    SpectrumPoint,
    alt_schur_sum,
    branching_approximant,
    brute_force_path_sum,
    character_partial_sum,
    decremented_shapes,
    enumerate_spectrum,
    fiber_by_search,
    general_prefactor,
    ground_path,
    is_in_spectrum,
    nu_km,
    path_energy,
    path_weight,
    paths_bounded,
    paths_for_spectrum,
    paths_unpruned,
    rho,
    t_character,
    truncated_character,
    truncated_character_general,
    truncated_paths_general,
    truncation_prefactor,
    weight_correction,
)


def weights(n, l):
    return [WeightK(c) for c in itertools.product(range(l + 1), repeat=n) if sum(c) == l]


RANGE = [K for n in (2, 3) for l in (1, 2) for K in weights(n, l)]
ids = [str(K) for K in RANGE]


@pytest.mark.parametrize("K", RANGE, ids=ids)
def test_spectrum_is_the_image_of_local_energies(K):
    points = {p.h_fin for p in enumerate_spectrum(K, 5)}
    images = {rho(p).h_fin for p in paths_bounded(K, 5)}
    assert points == images
    assert all(is_in_spectrum(h, K) for h in points)
    assert all(SpectrumPoint(h, K).energy <= 5 for h in points)


@pytest.mark.parametrize("K", RANGE, ids=ids)
def test_spectrum_conditions_on_all_short_candidates(K):
    """Every finite part of length <= n+2 is in the spectrum iff some path realizes it."""
    n, l = K.n, K.level
    images = {rho(p).h_fin for p in paths_bounded(K, 5)}
    for length in range(n + 3):
        for h in itertools.product(range(l + 1), repeat=length):
            if h and h[-1] == K.k(length):
                continue
            if SpectrumPoint(h, K).energy > 5:
                continue
            assert is_in_spectrum(h, K) == (h in images), h


@pytest.mark.parametrize("K", RANGE, ids=ids)
def test_fibers_are_nonmovable_fillings(K):
    n = K.n
    for point in enumerate_spectrum(K, 5):
        fiber = list(paths_for_spectrum(point))
        assert set(fiber) == set(fiber_by_search(point))
        assert len(set(fiber)) == len(fiber)
        assert all(rho(p) == point and path_energy(p) == point.energy for p in fiber)
        t = t_character(point.kappa(), n, reduced=True)
        assert Counter(path_weight(p) for p in fiber) == Counter(t.as_dict())


@pytest.mark.parametrize("K", RANGE, ids=ids)
def test_character_decomposition(K):
    D = 5
    assert character_partial_sum(K, D) == brute_force_path_sum(K, D)


@pytest.mark.parametrize("K", [WeightK((1, 0)), WeightK((1, 1)), WeightK((0, 1, 0))], ids=str)
def test_pruned_path_search_matches_unpruned(K):
    D = 2
    length = K.n * D + K.n - 1
    pruned = {p.prefix[:length] for p in paths_bounded(K, D) if len(p.prefix) <= length}
    unpruned = set()
    ground = ground_path(K, length).prefix
    for p in paths_unpruned(K, length, D):
        prefix = p.prefix
        while prefix and prefix[-1] == ground[len(prefix) - 1]:
            prefix = prefix[:-1]
        unpruned.add(prefix)
    trimmed = set()
    for prefix in pruned:
        while prefix and prefix[-1] == ground[len(prefix) - 1]:
            prefix = prefix[:-1]
        trimmed.add(prefix)
    assert trimmed == unpruned


@pytest.mark.parametrize("K", RANGE, ids=ids)
def test_alternating_sum(K):
    for point in enumerate_spectrum(K, 5):
        assert t_character(point.kappa(), K.n, reduced=True) == alt_schur_sum(point)


def test_pictured_alternating_sum():
    point = SpectrumPoint((1, 1), WeightK((2, 0)))
    assert point.kappa() == SkewShape((4, 3, 2), (2, 1))
    assert sorted((sign, str(shape)) for sign, shape in decremented_shapes(point)) == [
        (-1, "3,2,2/1"),
        (-1, "3,3,2/1,1"),
        (1, "2,2,2/"),
        (1, "4,3,2/2,1"),
    ]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_level_one_border_strips(n):
    for K in weights(n, 1):
        for point in enumerate_spectrum(K, 5):
            heights = point.kappa().column_heights()
            if not heights:
                continue
            strip = border_strip([heights[c] for c in sorted(heights)])
            assert t_character(point.kappa(), n) == schur(strip, n)


@pytest.mark.parametrize("l", [1, 2, 3])
def test_rank_two_products_of_complete_symmetric(l):
    for K in weights(2, l):
        for point in enumerate_spectrum(K, 6):
            J = len(point.h_fin)
            free = [point.h(1)] + [point.h(i) + point.h(i - 1) - l for i in range(2, J + 2)]
            blocks = [sum(g) for nonzero, g in itertools.groupby(free, key=bool) if nonzero]
            product = monomial_one(2)
            for M in blocks:
                product = product * complete_homogeneous(M, 2)
            assert t_character(point.kappa(), 2, reduced=True) == product.reduce()


def test_ground_and_simple_points():
    K = WeightK((1, 0))
    assert rho(ground_path(K, 5)) == SpectrumPoint((), K)
    assert not is_in_spectrum((0,), K)
    assert is_in_spectrum((1, 1), K)
    assert not is_in_spectrum((0, 0, 1), K)
    assert SpectrumPoint((1, 1), K).energy == 2
    with pytest.raises(SpectralError):
        alt_schur_sum(SpectrumPoint((0, 0, 1), K))
    with pytest.raises(SpectralError):
        FinitePath((CrystalElement((1, 2), 2),), K)


def test_truncated_character_phase():
    F = truncated_character(0, 2, 1, 2)
    assert F == SchurExpansion.from_dict(2, {Partition((2,)): QPolynomial.monomial(1), Partition((1, 1)): QPolynomial.monomial(0)})
    assert truncation_prefactor(0, 2, 1, 2) == 0
    assert truncation_prefactor(1, 5, 2, 2) == 2 * 2 * 2 * 1 // 2 + 2 * 2 * 1


TRUNC = [(k, m, l, n) for n in (2, 3) for l in (1, 2) for k in range(n) for m in range(1, 5) if m % n == k % n]


@pytest.mark.parametrize("k,m,l,n", TRUNC)
def test_truncated_character_three_ways(k, m, l, n):
    by_paths = truncated_character(k, m, l, n, "paths")
    assert truncated_character(k, m, l, n, "spectral") == by_paths
    assert truncated_character(k, m, l, n, "kostka") == by_paths


GENERAL = [(K, m) for n in (2, 3) for l in (1, 2) for K in weights(n, l) for m in range(1, 4)]


@pytest.mark.parametrize("K,m", GENERAL, ids=[f"{K}-{m}" for K, m in GENERAL])
def test_general_truncated_character(K, m):
    assert truncated_character_general(K, m, "paths") == truncated_character_general(K, m, "g")


def test_uncorrected_weight_shift_gives_negative_exponents():
    K, m = WeightK((0, 2)), 1
    uncorrected = [sum(K.k(m + j - 1) for j in range(1, i + 1)) for i in range(1, K.n + 1)]
    exponents = set()
    for p in truncated_paths_general(K, m):
        content = path_weight(p, reduced=False)
        exponents.add((content[0],) + tuple(c - w for c, w in zip(content[1:], uncorrected[1:])))
    assert (4, -2) in exponents
    assert weight_correction(K, m) == (0, 0)
    assert weight_correction(WeightK((1, 1)), 1) == (0, 1)


def test_general_staircase_and_prefactor():
    K = WeightK((1, 0, 2))
    assert nu_km(K, 1) == Partition((2, 2))
    assert nu_km(K, 2) == Partition((3, 1))
    assert general_prefactor(K, 3) == 1 + 6
    assert nu_km(WeightK((0, 0, 2)), 3) == Partition(())


def _product_series(excluded, top):
    """Coefficients of ``prod_{j >= 1, j not in excluded} 1 / (1 - q^j)`` up to ``top``."""
    coeffs = [1] + [0] * top
    for j in range(1, top + 1):
        if j in excluded:
            continue
        for d in range(j, top + 1):
            coeffs[d] += coeffs[d - j]
    return coeffs


@pytest.mark.parametrize("lam,K,excluded", [((), WeightK((0, 1)), {1}), ((1,), WeightK((1, 0)), {2})])
def test_branching_stabilizes(lam, K, excluded):
    lam = Partition(lam)
    series = _product_series(excluded, 6)
    for N in range(1, 6):
        now = branching_approximant(lam, K, N)
        nxt = branching_approximant(lam, K, N + 1)
        assert now.truncate(N - 1) == nxt.truncate(N - 1)
        assert [now.as_dict().get(d, 0) for d in range(N)] == series[:N]


def test_branching_variants_agree():
    for N in range(1, 4):
        assert branching_approximant(Partition(()), WeightK((0, 1)), N) == branching_approximant(
            Partition(()), WeightK((0, 1)), 2 * N, "general"
        )
        assert branching_approximant(Partition((1,)), WeightK((1, 0)), N) == branching_approximant(
            Partition((1,)), WeightK((1, 0)), 2 * N + 1, "general"
        )


def test_branching_rejects_bad_arguments():
    with pytest.raises(SpectralError):
        branching_approximant(Partition((1,)), WeightK((0, 1)), 2)
    with pytest.raises(SpectralError):
        branching_approximant(Partition(()), WeightK((1, 1)), 2)
    with pytest.raises(SpectralError):
        branching_approximant(Partition((1, 1, 1)), WeightK((0, 1)), 2)
    with pytest.raises(SpectralError):
        branching_approximant(Partition(()), WeightK((0, 1)), 2, "other")


def test_commutative_diagram_small():
    from spectab.spectral import highest_weight_tuples, phi_map, pi_map
    from spectab.tableaux import enumerate_tableaux, theta_d

    l, m, n = 2, 3, 3
    for lam in partitions_of(l * m, max_length=n):
        images = set()
        for t in enumerate_tableaux(SkewShape.straight(lam), (l,) * m):
            rows = pi_map(t, l, n)
            assert is_highest_weight(rows)
            assert phi_map(rows) == theta_d(t)
            images.add(rows)
        assert images == set(highest_weight_tuples(lam, l, m, n))
