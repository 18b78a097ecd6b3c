"""One-row crystals B_l, their tensor products, and the energy function."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Union


class CrystalError(ValueError):
    """Raised when a crystal precondition fails."""


@dataclass(frozen=True, order=True)
class CrystalElement:
    """``v_{a_1 .. a_l}`` with ``1 <= a_1 <= .. <= a_l <= n``."""

    entries: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        entries = tuple(int(a) for a in self.entries)
        if any(a < 1 or a > self.n for a in entries):
            raise CrystalError(f"entries {entries} outside 1..{self.n}")
        if any(entries[j] > entries[j + 1] for j in range(len(entries) - 1)):
            raise CrystalError(f"entries {entries} not weakly increasing")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str, n: int) -> "CrystalElement":
        text = text.strip()
        entries = text.split(",") if "," in text else list(text)
        return cls(tuple(sorted(int(a) for a in entries)), n)

    def __str__(self) -> str:
        return "".join(map(str, self.entries)) if self.n <= 9 else ",".join(map(str, self.entries))

    @property
    def l(self) -> int:
        return len(self.entries)

    def count(self, a: int) -> int:
        return self.entries.count(a)

    def phi(self, i: int) -> int:
        return self.count(i)

    def epsilon(self, i: int) -> int:
        return self.count(i + 1)

    def weight(self) -> tuple[int, ...]:
        return tuple(self.count(a) for a in range(1, self.n + 1))

    def f(self, i: int) -> "CrystalElement | None":
        if not self.phi(i):
            return None
        e = list(self.entries)
        j = len(e) - 1 - e[::-1].index(i)
        e[j] = i + 1
        return CrystalElement(tuple(e), self.n)

    def e(self, i: int) -> "CrystalElement | None":
        if not self.epsilon(i):
            return None
        e = list(self.entries)
        e[e.index(i + 1)] = i
        return CrystalElement(tuple(e), self.n)


@dataclass(frozen=True, order=True)
class TensorElement:
    left: CrystalElement
    right: CrystalElement

    def __post_init__(self) -> None:
        if self.left.n != self.right.n:
            raise CrystalError("tensor factors have different ranks")

    def __str__(self) -> str:
        return f"{self.left}(x){self.right}"


Element = Union[CrystalElement, TensorElement]


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise CrystalError(f"index {i} outside 1..{n - 1}")


def ftilde(i: int, x: Element) -> Element | None:
    if isinstance(x, CrystalElement):
        _check_index(i, x.n)
        return x.f(i)
    _check_index(i, x.left.n)
    if x.left.phi(i) > x.right.epsilon(i):
        new = x.left.f(i)
        return None if new is None else TensorElement(new, x.right)
    new = x.right.f(i)
    return None if new is None else TensorElement(x.left, new)


def etilde(i: int, x: Element) -> Element | None:
    if isinstance(x, CrystalElement):
        _check_index(i, x.n)
        return x.e(i)
    _check_index(i, x.left.n)
    if x.left.phi(i) >= x.right.epsilon(i):
        new = x.left.e(i)
        return None if new is None else TensorElement(new, x.right)
    new = x.right.e(i)
    return None if new is None else TensorElement(x.left, new)


def _signature(i: int, factors: Sequence[CrystalElement]) -> tuple[list[int], list[int]]:
    """Positions of uncancelled raising and lowering slots under bracket cancellation."""
    plus: list[int] = []
    minus: list[int] = []
    for pos, b in enumerate(factors):
        for _ in range(b.epsilon(i)):
            if plus:
                plus.pop()
            else:
                minus.append(pos)
        plus.extend([pos] * b.phi(i))
    return minus, plus


def tensor_etilde(i: int, factors: Sequence[CrystalElement]) -> tuple[CrystalElement, ...] | None:
    """``e_i`` on ``b_1 (x) .. (x) b_m``, compatible with the two-factor rule."""
    minus, _ = _signature(i, factors)
    if not minus:
        return None
    pos = minus[-1]
    out = list(factors)
    out[pos] = out[pos].e(i)
    return tuple(out)


def tensor_ftilde(i: int, factors: Sequence[CrystalElement]) -> tuple[CrystalElement, ...] | None:
    _, plus = _signature(i, factors)
    if not plus:
        return None
    pos = plus[0]
    out = list(factors)
    out[pos] = out[pos].f(i)
    return tuple(out)


def is_highest_weight(factors: Sequence[CrystalElement]) -> bool:
    if not factors:
        return True
    n = factors[0].n
    return all(tensor_etilde(i, factors) is None for i in range(1, n))


def all_elements(l: int, n: int) -> list[CrystalElement]:
    return [CrystalElement(c, n) for c in itertools.combinations_with_replacement(range(1, n + 1), l)]


def raise_to_highest(x: TensorElement) -> TensorElement:
    """Apply raising operators round-robin until none applies."""
    n = x.left.n
    while True:
        for i in range(1, n):
            y = etilde(i, x)
            if y is not None:
                x = y
                break
        else:
            return x


def _energy_component(b1: CrystalElement, b2: CrystalElement) -> int:
    top = raise_to_highest(TensorElement(b1, b2))
    l0 = min(b1.l, b2.l)
    twos = top.right.count(2)
    if top.left.entries != (1,) * b1.l or top.right.entries != (1,) * (b2.l - twos) + (2,) * twos:
        raise CrystalError(f"unexpected highest weight element {top}")
    return l0 - twos


def offset_semistandard(b1: CrystalElement, b2: CrystalElement, d: int) -> bool:
    """Two-row tableau with ``b1`` on top, overlapping ``b2`` in ``min(l1, l2) - d`` columns."""
    w = min(b1.l, b2.l) - d
    start = b2.l - w
    return all(b1.entries[j] < b2.entries[start + j] for j in range(w))


def _energy_offset(b1: CrystalElement, b2: CrystalElement) -> int:
    for d in range(min(b1.l, b2.l) + 1):
        if offset_semistandard(b1, b2, d):
            return d
    raise CrystalError("no semistandard offset")  # unreachable: zero overlap is always semistandard


def _energy_min_perm(b1: CrystalElement, b2: CrystalElement) -> int:
    if b1.l != b2.l:
        raise CrystalError("min-perm needs equal lengths")
    if b1.l > 6:
        raise CrystalError("min-perm is limited to l <= 6")
    a, b = b1.entries, b2.entries
    return min(
        sum(1 for i in range(len(a)) if a[i] >= b[p[i]])
        for p in itertools.permutations(range(len(b)))
    )


def energy(b1: CrystalElement, b2: CrystalElement, method: str = "offset") -> int:
    """``H(b1 (x) b2)``, normalized to ``0 .. min(l1, l2)``."""
    if b1.n != b2.n:
        raise CrystalError("elements of different ranks")
    if method == "component":
        return _energy_component(b1, b2)
    if method == "offset":
        return _energy_offset(b1, b2)
    if method == "min-perm":
        return _energy_min_perm(b1, b2)
    raise CrystalError(f"unknown method {method!r}")


def component_orbits(l1: int, l2: int, n: int) -> list[set[TensorElement]]:
    """Connected components of ``B_{l1} (x) B_{l2}`` under all ``e_i`` and ``f_i``."""
    elements = [TensorElement(a, b) for a in all_elements(l1, n) for b in all_elements(l2, n)]
    seen: set[TensorElement] = set()
    orbits = []
    for x in elements:
        if x in seen:
            continue
        orbit = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for i in range(1, n):
                for z in (ftilde(i, y), etilde(i, y)):
                    if z is not None and z not in orbit:
                        orbit.add(z)
                        stack.append(z)
        seen |= orbit
        orbits.append(orbit)
    return orbits


@dataclass(frozen=True)
class WeightK:
    """Periodic ground data ``K = ((k_1, .., k_n))^infinity`` of level ``l = sum k_i``."""

    cycle: tuple[int, ...]

    def __post_init__(self) -> None:
        cycle = tuple(int(k) for k in self.cycle)
        if len(cycle) < 2:
            raise CrystalError("n >= 2 is required")
        if any(k < 0 for k in cycle):
            raise CrystalError(f"negative entry in {cycle}")
        object.__setattr__(self, "cycle", cycle)

    @classmethod
    def parse(cls, text: str) -> "WeightK":
        return cls(tuple(int(x) for x in text.split(",")))

    @classmethod
    def fundamental(cls, k: int, l: int, n: int) -> "WeightK":
        """``l * Lambda_k``: the entry ``k_k`` (``k_n`` for ``k = 0``) equals ``l``."""
        cycle = [0] * n
        cycle[(k - 1) % n] = l
        return cls(tuple(cycle))

    def __str__(self) -> str:
        return ",".join(map(str, self.cycle))

    @property
    def n(self) -> int:
        return len(self.cycle)

    @property
    def level(self) -> int:
        return sum(self.cycle)

    def k(self, i: int) -> int:
        return self.cycle[(i - 1) % self.n]

    def ground_row(self, i: int) -> CrystalElement:
        """``s_i = v_{1^{k_i} 2^{k_{i+1}} .. n^{k_{i+n-1}}}``."""
        entries: list[int] = []
        for j in range(self.n):
            entries += [j + 1] * self.k(i + j)
        return CrystalElement(tuple(entries), self.n)

    def ground_paths(self, length: int) -> list[CrystalElement]:
        return [self.ground_row(i) for i in range(1, length + 1)]

    def classical_weight(self) -> tuple[int, ...]:
        """``sum_{i<n} k_i Lambda_i`` as an exponent vector, ``Lambda_i = e_1 + .. + e_i``."""
        out = [0] * self.n
        for i in range(1, self.n):
            for j in range(i):
                out[j] += self.k(i)
        return tuple(out)


def ground_energy_row(K: WeightK, i: int) -> int:
    """``H(s_{i+1}, s_i)`` on the ground path."""
    return energy(K.ground_row(i + 1), K.ground_row(i))


def iter_pairs(l1: int, l2: int, n: int) -> Iterator[tuple[CrystalElement, CrystalElement]]:
    for a in all_elements(l1, n):
        for b in all_elements(l2, n):
            yield a, b
