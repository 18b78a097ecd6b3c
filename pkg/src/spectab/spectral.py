"""Paths, the local energy map, the spectrum and the characters built from it.

Paths are infinite sequences that agree with the ground path of ``K`` after
a finite prefix, so every object here is a finite prefix plus the periodic
tail rule.  Energies are bounded explicitly: each enumeration takes a
``max_degree`` and relies on the identity ``E = sum_i R_i`` with
``R_i = sum_{j >= i} (h_j - k_j) >= 0`` (disjoint windows each have
nonnegative excess), which makes every partial sum a valid lower bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .crystal import CrystalElement, WeightK, all_elements, energy, is_highest_weight
from .shapes import Partition, SkewShape, kappa_from_h, kappa_row_starts, shape_sh
from .symfunc import (
    MonomialExpansion,
    QPolynomial,
    SchurExpansion,
    ZERO,
    g_polynomial,
    kostka_foulkes,
    lr0_count,
    monomials_to_schur,
    partitions_of,
    schur,
)
from .tableaux import Tableau, enumerate_tableaux, exponent_ranges


class SpectralError(ValueError):
    """Raised when a spectral precondition fails."""


@dataclass(frozen=True)
class FinitePath:
    prefix: tuple[CrystalElement, ...]
    K: WeightK

    def __post_init__(self) -> None:
        prefix = tuple(self.prefix)
        for s in prefix:
            if s.n != self.K.n or s.l != self.K.level:
                raise SpectralError(f"row {s} is not in B_{self.K.level} for n={self.K.n}")
        object.__setattr__(self, "prefix", prefix)

    def row(self, i: int) -> CrystalElement:
        """``s_i`` (1-based), falling back to the ground row past the prefix."""
        return self.prefix[i - 1] if i <= len(self.prefix) else self.K.ground_row(i)

    def local_energy(self, i: int) -> int:
        return energy(self.row(i + 1), self.row(i))

    def __str__(self) -> str:
        return " ".join(map(str, self.prefix))


@dataclass(frozen=True)
class SpectrumPoint:
    h_fin: tuple[int, ...]
    K: WeightK

    def __post_init__(self) -> None:
        object.__setattr__(self, "h_fin", tuple(int(h) for h in self.h_fin))

    def h(self, i: int) -> int:
        return self.h_fin[i - 1] if i <= len(self.h_fin) else self.K.k(i)

    @property
    def energy(self) -> int:
        return sum(i * (h - self.K.k(i)) for i, h in enumerate(self.h_fin, start=1))

    def kappa(self) -> SkewShape:
        return kappa_from_h(self.h_fin, self.K, self.K.level, self.K.n)

    def __str__(self) -> str:
        return ",".join(map(str, self.h_fin)) or "()"


def ground_path(K: WeightK, length: int = 0) -> FinitePath:
    return FinitePath(tuple(K.ground_paths(length)), K)


def rho(p: FinitePath) -> SpectrumPoint:
    """The finite part of ``(H(s_{i+1}, s_i))_i``.

    Past the prefix every local energy is the ground value, so the finite part
    ends at or before the prefix length.
    """
    h = [p.local_energy(i) for i in range(1, len(p.prefix) + 1)]
    while h and h[-1] == p.K.k(len(h)):
        h.pop()
    point = SpectrumPoint(tuple(h), p.K)
    if not is_in_spectrum(point.h_fin, p.K):
        raise SpectralError(f"local energies {point} violate the spectrum conditions")
    return point


def is_in_spectrum(h_fin: Sequence[int], K: WeightK) -> bool:
    """Window condition ``h_i + .. + h_{i+n-1} >= l`` and ``h_J > k_J``."""
    h_fin = tuple(h_fin)
    l, n = K.level, K.n
    if any(h < 0 or h > l for h in h_fin):
        return False
    J = len(h_fin)
    if J and h_fin[-1] <= K.k(J):
        return False
    value = lambda i: h_fin[i - 1] if i <= J else K.k(i)
    return all(sum(value(j) for j in range(i, i + n)) >= l for i in range(1, J + 1))


def path_energy(p: FinitePath) -> int:
    return sum(i * (p.local_energy(i) - p.K.k(i)) for i in range(1, len(p.prefix) + 1))


def path_weight(p: FinitePath, reduced: bool = True) -> tuple[int, ...]:
    """``sl_n`` weight (canonical mod the all-ones vector) or the ``gl_n`` content of the prefix."""
    n = p.K.n
    if not reduced:
        out = [0] * n
        for s in p.prefix:
            for a in s.entries:
                out[a - 1] += 1
        return tuple(out)
    out = list(p.K.classical_weight())
    for i, s in enumerate(p.prefix, start=1):
        g = p.K.ground_row(i)
        for a in s.entries:
            out[a - 1] += 1
        for a in g.entries:
            out[a - 1] -= 1
    low = min(out)
    return tuple(x - low for x in out)


def path_energy_weight(p: FinitePath, reduced: bool = True) -> tuple[int, tuple[int, ...]]:
    return path_energy(p), path_weight(p, reduced)


def enumerate_spectrum(K: WeightK, max_degree: int) -> Iterator[SpectrumPoint]:
    """All finite parts of energy ``<= max_degree``, the empty one first.

    ``J <= n * max_degree`` because ``R_i >= 1`` whenever ``i = J mod n``.
    The DFS fixes ``J`` and ``h_J``, then fills ``h_{J-1}, .., h_1``.
    """
    if max_degree < 0:
        return
    l, n = K.level, K.n
    yield SpectrumPoint((), K)
    for J in range(1, n * max_degree + 1):
        h = [0] * (J + n)
        for i in range(J + 1, J + n):
            h[i - 1] = K.k(i)

        def rec(i: int, tail_excess: int, partial: int) -> Iterator[SpectrumPoint]:
            if i == 0:
                yield SpectrumPoint(tuple(h[:J]), K)
                return
            for v in range(l + 1):
                excess = tail_excess + v - K.k(i)
                if excess < 0 or partial + excess > max_degree:
                    continue
                if i == J and v <= K.k(J):
                    continue
                h[i - 1] = v
                if i < J and sum(h[i - 1 : i - 1 + n]) < l:
                    continue
                yield from rec(i - 1, excess, partial + excess)

        yield from rec(J, 0, 0)


def paths_bounded(K: WeightK, max_degree: int) -> Iterator[FinitePath]:
    """Every path of energy ``<= max_degree`` by direct search over crystal rows.

    Rows past ``n * max_degree + n - 1`` are forced to the ground rows; the
    search runs from the last free row down to ``s_1``, pruning on the
    nonnegative suffix excesses.
    """
    l, n = K.level, K.n
    M = n * max_degree + n - 1
    rows = all_elements(l, n)
    chosen: list[CrystalElement | None] = [None] * (M + 2)
    chosen[M + 1] = K.ground_row(M + 1)

    def rec(i: int, tail_excess: int, partial: int) -> Iterator[FinitePath]:
        if i == 0:
            yield FinitePath(tuple(chosen[1 : M + 1]), K)
            return
        for s in rows:
            excess = tail_excess + energy(chosen[i + 1], s) - K.k(i)
            if excess < 0 or partial + excess > max_degree:
                continue
            chosen[i] = s
            yield from rec(i - 1, excess, partial + excess)

    if max_degree >= 0:
        yield from rec(M, 0, 0)


def paths_unpruned(K: WeightK, length: int, max_degree: int) -> Iterator[FinitePath]:
    """Every prefix of the given length with energy ``<= max_degree``; an oracle for :func:`paths_bounded`."""
    for prefix in itertools.product(all_elements(K.level, K.n), repeat=length):
        p = FinitePath(prefix, K)
        if path_energy(p) <= max_degree:
            yield p


def _full_column_rows(point: SpectrumPoint) -> tuple[int, dict[int, tuple[int, ...]]]:
    """Cut column and, for each column past it met by rows ``1 .. J+n-1``, the path rows covering it.

    On the ground tail ``P_{r+n} = P_r + l``, so rows beyond ``J+2n-1`` start
    right of every such column.
    """
    K = point.K
    l, n = K.level, K.n
    top = len(point.h_fin) + n - 1
    depth = top + n
    starts = kappa_row_starts(point.h_fin, K, depth)
    cut = starts[top]
    last = starts[top - 1] + l
    columns: dict[int, list[int]] = {}
    for r in range(1, depth + 1):
        for c in range(max(starts[r - 1], cut), min(starts[r - 1] + l, last)):
            columns.setdefault(c, []).append(r)
    return cut, {c: tuple(rs) for c, rs in columns.items()}


def paths_for_spectrum(point: SpectrumPoint) -> Iterator[FinitePath]:
    """The fiber ``rho^{-1}(h)``, built from nonmovable fillings of ``kappa(h)``.

    Path row ``r`` is read off the diagram: boxes left of the cut come from
    the filling, boxes in the full columns beyond it are forced to
    ``1 .. n`` top to bottom.
    """
    K = point.K
    if not is_in_spectrum(point.h_fin, K):
        raise SpectralError(f"{point} is not in the spectrum of K={K}")
    l, n = K.level, K.n
    J = len(point.h_fin)
    top = J + n - 1
    starts = kappa_row_starts(point.h_fin, K, top + 1)
    cut, columns = _full_column_rows(point)
    forced: dict[tuple[int, int], int] = {}
    for c, rs in columns.items():
        if len(rs) != n:
            raise SpectralError(f"column {c} past the cut has height {len(rs)}")
        for pos, r in enumerate(sorted(rs, reverse=True)):
            forced[(r, c)] = pos + 1
    shape = point.kappa()
    offset = top - shape.num_rows
    for t in enumerate_tableaux(shape, kind="nonmovable", alphabet=n):
        prefix = []
        for r in range(1, top + 1):
            english = top - r - offset
            entries = []
            for c in range(starts[r - 1], starts[r - 1] + l):
                if c < cut:
                    entries.append(t.entry(english, c))
                else:
                    entries.append(forced[(r, c)])
            prefix.append(CrystalElement(tuple(entries), n))
        path = FinitePath(tuple(prefix), K)
        if rho(path) != point:
            raise SpectralError(f"path {path} does not map back to {point}")
        yield path


def fiber_by_search(point: SpectrumPoint) -> Iterator[FinitePath]:
    """The fiber by direct backward search over rows; an oracle for :func:`paths_for_spectrum`."""
    K = point.K
    top = len(point.h_fin) + K.n - 1
    rows = all_elements(K.level, K.n)
    chosen: list[CrystalElement | None] = [None] * (top + 2)
    chosen[top + 1] = K.ground_row(top + 1)

    def rec(i: int) -> Iterator[FinitePath]:
        if i == 0:
            yield FinitePath(tuple(chosen[1 : top + 1]), K)
            return
        for s in rows:
            if energy(chosen[i + 1], s) == point.h(i):
                chosen[i] = s
                yield from rec(i - 1)

    yield from rec(top)


@lru_cache(maxsize=None)
def _t_character(outer: tuple[int, ...], inner: tuple[int, ...], n: int) -> MonomialExpansion:
    counts: dict[tuple[int, ...], int] = {}
    for t in enumerate_tableaux(SkewShape(outer, inner), kind="nonmovable", alphabet=n):
        e = t.content(n)
        counts[e] = counts.get(e, 0) + 1
    return MonomialExpansion.from_dict(n, counts)


def t_character(shape: SkewShape, n: int, reduced: bool = False) -> MonomialExpansion:
    """Generating function of the nonmovable fillings of ``shape`` with letters ``<= n``."""
    out = _t_character(shape.outer, shape.inner, n)
    return out.reduce() if reduced else out


def decremented_shapes(point: SpectrumPoint) -> Iterator[tuple[int, SkewShape]]:
    """``(sign, kappa_{i_1 .. i_p})`` over subsets of the nonzero positions of the finite part."""
    K = point.K
    support = [i for i, h in enumerate(point.h_fin) if h]
    for p in range(len(support) + 1):
        for subset in itertools.combinations(support, p):
            h = list(point.h_fin)
            for i in subset:
                h[i] -= 1
            yield (-1) ** p, kappa_from_h(h, K, K.level, K.n)


def alt_schur_sum(point: SpectrumPoint) -> MonomialExpansion:
    """``sum_p (-1)^p sum s_{kappa_{i_1 .. i_p}}`` modulo ``x_1 .. x_n = 1``."""
    if not is_in_spectrum(point.h_fin, point.K):
        raise SpectralError(f"{point} is not in the spectrum of K={point.K}")
    n = point.K.n
    total = MonomialExpansion(n, (), reduced=True)
    for sign, shape in decremented_shapes(point):
        total = total + schur(shape, n).reduce().scale(sign)
    return total


def _graded_add(acc: dict[int, MonomialExpansion], degree: int, piece: MonomialExpansion) -> None:
    acc[degree] = acc[degree] + piece if degree in acc else piece


def character_partial_sum(K: WeightK, max_degree: int) -> dict[int, MonomialExpansion]:
    """``sum_h q^{E(h)} t_{kappa(h)}`` over the spectrum up to ``max_degree``, reduced."""
    out: dict[int, MonomialExpansion] = {}
    for point in enumerate_spectrum(K, max_degree):
        _graded_add(out, point.energy, t_character(point.kappa(), K.n, reduced=True))
    return {d: m for d, m in sorted(out.items()) if m}


def brute_force_path_sum(K: WeightK, max_degree: int) -> dict[int, MonomialExpansion]:
    """``sum_s q^{E(s)} e^{wt(s)}`` over all paths of energy ``<= max_degree``."""
    counts: dict[int, dict[tuple[int, ...], int]] = {}
    for p in paths_bounded(K, max_degree):
        e, w = path_energy_weight(p)
        bucket = counts.setdefault(e, {})
        bucket[w] = bucket.get(w, 0) + 1
    return {
        d: MonomialExpansion.from_dict(K.n, counts[d], reduced=True) for d in sorted(counts)
    }


def _check_rectangular_args(k: int, m: int, n: int) -> None:
    if n < 2:
        raise SpectralError("n >= 2 is required")
    if not 0 <= k <= n - 1:
        raise SpectralError(f"k={k} outside 0..{n - 1}")
    if m < 1 or (m - k) % n:
        raise SpectralError(f"m={m} is not a positive integer congruent to k={k} mod n={n}")


def truncation_prefactor(k: int, m: int, l: int, n: int) -> int:
    """``A_{k,m} = l n N (N-1) / 2 + l N k`` with ``N = (m - k) / n``."""
    N = (m - k) // n
    return l * n * N * (N - 1) // 2 + l * N * k


def _graded_to_schur(counts: dict[int, dict[tuple[int, ...], int]], n: int) -> SchurExpansion:
    graded = {d: MonomialExpansion.from_dict(n, c) for d, c in counts.items()}
    return monomials_to_schur({d: m for d, m in graded.items() if m}, n)


def truncated_character(k: int, m: int, l: int, n: int, method: str = "paths") -> SchurExpansion:
    """``F_{k,m}`` in the ``gl_n`` Schur basis.

    ``paths`` sums over ``(s_1, .., s_m)`` followed by the ground tail of
    ``l Lambda_k``; ``spectral`` sums ``q^{c(d)} |LR_0(Sh_d((l^m)), lam)|``;
    ``kostka`` uses ``K_{lam, (l^m)}(q)``.
    """
    _check_rectangular_args(k, m, n)
    mu = (l,) * m
    if method == "paths":
        K = WeightK.fundamental(k, l, n)
        A = truncation_prefactor(k, m, l, n)
        counts: dict[int, dict[tuple[int, ...], int]] = {}
        for prefix in itertools.product(all_elements(l, n), repeat=m):
            e = A + sum(i * (energy(prefix[i], prefix[i - 1]) - K.k(i)) for i in range(1, m))
            w = [0] * n
            for s in prefix:
                for a in s.entries:
                    w[a - 1] += 1
            bucket = counts.setdefault(e, {})
            bucket[tuple(w)] = bucket.get(tuple(w), 0) + 1
        return _graded_to_schur(counts, n)
    lams = partitions_of(l * m, max_length=n)
    if method == "spectral":
        data: dict[Partition, QPolynomial] = {}
        for d in itertools.product(*exponent_ranges(mu)):
            shape = shape_sh(d, mu)
            deg = sum((m - i) * x for i, x in enumerate(d, start=1))
            for lam in lams:
                c = lr0_count(shape, lam)
                if c:
                    data[lam] = data.get(lam, ZERO) + QPolynomial.monomial(deg, c)
        return SchurExpansion.from_dict(n, data)
    if method == "kostka":
        return SchurExpansion.from_dict(n, {lam: kostka_foulkes(lam, mu) for lam in lams})
    raise SpectralError(f"unknown method {method!r}")


def nu_km(K: WeightK, m: int) -> Partition:
    """Staircase partition with rows ``L_i = k_{m+i} + .. + k_{m+n-1}``, ``i = 1 .. n-1``."""
    n = K.n
    return Partition(tuple(sum(K.k(m + j) for j in range(i, n)) for i in range(1, n)))


def general_prefactor(K: WeightK, m: int) -> int:
    """``B_{K,m} = sum_{i=1}^m i k_i``."""
    return sum(i * K.k(i) for i in range(1, m + 1))


def weight_correction(K: WeightK, m: int) -> tuple[int, ...]:
    """Exponents ``w_i = k_m + .. + k_{m+i-2}`` removed from ``x_i``, with ``w_1 = 0``.

    These are exactly the boxes of the forced full columns in rows
    ``m+1 .. m+n-1`` that carry the letter ``i``.
    """
    return tuple(sum(K.k(m + j - 1) for j in range(1, i)) for i in range(1, K.n + 1))


def truncated_paths_general(K: WeightK, m: int) -> Iterator[FinitePath]:
    """Prefixes ``s_1 .. s_{m+n-1}`` with ``H(s_{i+1}, s_i) = k_i`` for ``i > m``."""
    n, l = K.n, K.level
    top = m + n - 1
    rows = all_elements(l, n)
    chosen: list[CrystalElement | None] = [None] * (top + 2)
    chosen[top + 1] = K.ground_row(top + 1)

    def rec(i: int) -> Iterator[FinitePath]:
        if i == 0:
            yield FinitePath(tuple(chosen[1 : top + 1]), K)
            return
        for s in rows:
            if i > m and energy(chosen[i + 1], s) != K.k(i):
                continue
            chosen[i] = s
            yield from rec(i - 1)

    yield from rec(top)


def truncated_character_general(K: WeightK, m: int, method: str = "paths") -> SchurExpansion:
    """``F_{K,m}`` by path enumeration (``paths``) or by the ``G`` polynomials (``g``)."""
    if m < 1:
        raise SpectralError("m >= 1 is required")
    n, l = K.n, K.level
    nu = nu_km(K, m)
    if method == "paths":
        B = general_prefactor(K, m)
        w = weight_correction(K, m)
        counts: dict[int, dict[tuple[int, ...], int]] = {}
        for p in truncated_paths_general(K, m):
            e = B + sum(i * (p.local_energy(i) - K.k(i)) for i in range(1, m + 1))
            content = path_weight(p, reduced=False)
            x = tuple(c - wi for c, wi in zip(content, w))
            bucket = counts.setdefault(e, {})
            bucket[x] = bucket.get(x, 0) + 1
        return _graded_to_schur(counts, n)
    if method == "g":
        mu = (l,) * m
        data: dict[Partition, QPolynomial] = {}
        for lam in partitions_of(l * m + nu.size, max_length=n):
            if not lam.contains(nu):
                continue
            data[lam] = g_polynomial(SkewShape(lam.parts, nu.padded(len(lam))), mu)
        return SchurExpansion.from_dict(n, data)
    raise SpectralError(f"unknown method {method!r}")


def _fundamental_index(K: WeightK) -> int:
    l = K.level
    hits = [i for i in range(1, K.n + 1) if K.k(i) == l]
    if l == 0 or len(hits) != 1:
        raise SpectralError(f"K={K} is not of the form l * Lambda_k")
    return hits[0] % K.n


def _pad(lam: Partition, total: int, n: int) -> Partition:
    if len(lam) > n:
        raise SpectralError(f"l({lam}) > n={n}")
    extra = total - lam.size
    if extra < 0 or extra % n:
        raise SpectralError(f"|{lam.parts}| = {lam.size} is not congruent to {total} mod n={n}")
    return Partition(tuple(p + extra // n for p in lam.padded(n)))


def branching_approximant(lam: Partition, K: WeightK, N: int, variant: str = "rectangular") -> QPolynomial:
    """Normalized approximant of the branching function at truncation ``N``.

    ``rectangular``: ``K = l Lambda_k``, lattice size ``m = k + N n`` and
    ``q^{-A_{k,m}} K_{lam_N, (l^m)}(q)``.  ``general``: lattice size ``m = N``
    and ``q^{-B_{K,m}} G_{lam_m / nu_{K,m}, (l^m)}(q)``.
    """
    l, n = K.level, K.n
    if variant == "rectangular":
        k = _fundamental_index(K)
        m = k + N * n
        if m < 1:
            raise SpectralError("the lattice size k + N n must be positive")
        big = _pad(lam, l * m, n)
        poly = kostka_foulkes(big, (l,) * m).shift(-truncation_prefactor(k, m, l, n))
    elif variant == "general":
        m = N
        if m < 1:
            raise SpectralError("the lattice size must be positive")
        nu = nu_km(K, m)
        big = _pad(lam, l * m + nu.size, n)
        if not big.contains(nu):
            raise SpectralError(f"{big} does not contain {nu}")
        shape = SkewShape(big.parts, nu.padded(len(big)))
        poly = g_polynomial(shape, (l,) * m).shift(-general_prefactor(K, m))
    else:
        raise SpectralError(f"unknown variant {variant!r}")
    low = poly.min_degree
    if low is not None and low < 0:
        raise SpectralError(f"normalized approximant has negative degree {low}")
    return poly


def pi_map(t: Tableau, l: int, n: int) -> tuple[CrystalElement, ...]:
    """``s_i`` = the indices of the rows of ``t`` containing ``i``."""
    content = t.content()
    if any(c != l for c in content):
        raise SpectralError(f"content {content} is not rectangular with rows of {l}")
    return tuple(CrystalElement(tuple(t.letter_rows(i)), n) for i in range(1, len(content) + 1))


def phi_offsets(rows: Sequence[CrystalElement]) -> tuple[int, ...]:
    return tuple(energy(rows[i], rows[i + 1]) for i in range(len(rows) - 1))


def phi_map(rows: Sequence[CrystalElement]) -> Tableau:
    """Row ``i`` holds ``s_i``; row ``i`` sits ``H(s_i, s_{i+1})`` columns right of row ``i+1``."""
    rows = tuple(rows)
    mu = tuple(s.l for s in rows)
    shape = shape_sh(phi_offsets(rows), mu)
    return Tableau(shape, tuple(s.entries for s in rows))


def highest_weight_tuples(lam: Partition, l: int, m: int, n: int) -> Iterator[tuple[CrystalElement, ...]]:
    """Highest weight elements of ``B_l^{(x) m}`` of weight ``lam``, searched row by row within the weight."""
    target = lam.padded(n)
    rows = all_elements(l, n)
    chosen: list[CrystalElement] = []
    left = list(target)

    def rec() -> Iterator[tuple[CrystalElement, ...]]:
        if len(chosen) == m:
            if not any(left) and is_highest_weight(chosen):
                yield tuple(chosen)
            return
        for s in rows:
            w = s.weight()
            if any(w[a] > left[a] for a in range(n)):
                continue
            for a in range(n):
                left[a] -= w[a]
            chosen.append(s)
            yield from rec()
            chosen.pop()
            for a in range(n):
                left[a] += w[a]

    yield from rec()


def evaluate_graded(graded: dict[int, MonomialExpansion], x: Sequence[Fraction], q: Fraction) -> Fraction:
    return sum((m.evaluate(x) * q**d for d, m in graded.items()), Fraction(0))
