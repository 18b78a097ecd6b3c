"""Sparse q-polynomials, symmetric functions, and Kostka-type counts."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .charge import charge_of_d, charge_tableau
from .shapes import Partition, ShapeError, SkewShape, shape_sh
from .tableaux import descents_exponents, enumerate_tableaux, exponent_ranges, is_lattice_word, reading_word


class SymfuncError(ValueError):
    """Raised when a symmetric-function precondition fails."""


@dataclass(frozen=True)
class QPolynomial:
    """Sparse Laurent polynomial in ``q`` with integer coefficients."""

    coeffs: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, data: Mapping[int, int]) -> "QPolynomial":
        return cls(tuple(sorted((int(d), int(c)) for d, c in data.items() if c)))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "QPolynomial":
        return cls.from_dict({degree: coeff})

    @classmethod
    def parse_json(cls, data: Mapping[str, int]) -> "QPolynomial":
        return cls.from_dict({int(k.split("^")[1]): v for k, v in data.items()})

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        out = self.as_dict()
        for d, c in other.coeffs:
            out[d] = out.get(d, 0) + c
        return QPolynomial.from_dict(out)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(tuple((d, -c) for d, c in self.coeffs))

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-other)

    def __mul__(self, other: "QPolynomial | int") -> "QPolynomial":
        if isinstance(other, int):
            return QPolynomial.from_dict({d: c * other for d, c in self.coeffs})
        out: dict[int, int] = {}
        for d1, c1 in self.coeffs:
            for d2, c2 in other.coeffs:
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return QPolynomial.from_dict(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "QPolynomial":
        return QPolynomial(tuple((d + k, c) for d, c in self.coeffs))

    def __call__(self, q: Fraction | int) -> Fraction:
        return sum((Fraction(c) * Fraction(q) ** d for d, c in self.coeffs), Fraction(0))

    @property
    def min_degree(self) -> int | None:
        return self.coeffs[0][0] if self.coeffs else None

    @property
    def max_degree(self) -> int | None:
        return self.coeffs[-1][0] if self.coeffs else None

    def truncate(self, top: int) -> "QPolynomial":
        return QPolynomial(tuple((d, c) for d, c in self.coeffs if d <= top))

    def to_json(self) -> dict[str, int]:
        return {f"q^{d}": c for d, c in self.coeffs}

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in self.coeffs:
            mono = "1" if d == 0 else ("q" if d == 1 else f"q^{d}")
            if mono == "1":
                body = str(abs(c))
            else:
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += sign + body
        return text


ZERO = QPolynomial()
ONE = QPolynomial.monomial(0)


def _canonical(exponent: Sequence[int]) -> tuple[int, ...]:
    low = min(exponent) if exponent else 0
    return tuple(e - low for e in exponent)


@dataclass(frozen=True)
class MonomialExpansion:
    """Polynomial in ``x_1 .. x_n`` stored as exponent vector -> coefficient.

    With ``reduced`` set, exponent vectors are taken modulo the all-ones
    vector, i.e. modulo the relation ``x_1 ... x_n = 1``.
    """

    n: int
    terms: tuple[tuple[tuple[int, ...], int], ...] = ()
    reduced: bool = False

    @classmethod
    def from_dict(cls, n: int, data: Mapping[tuple[int, ...], int], reduced: bool = False) -> "MonomialExpansion":
        out: dict[tuple[int, ...], int] = {}
        for e, c in data.items():
            if len(e) != n:
                raise SymfuncError(f"exponent {e} has wrong length for n={n}")
            key = _canonical(e) if reduced else tuple(e)
            out[key] = out.get(key, 0) + c
        return cls(n, tuple(sorted((e, c) for e, c in out.items() if c)), reduced)

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def reduce(self) -> "MonomialExpansion":
        return MonomialExpansion.from_dict(self.n, self.as_dict(), reduced=True)

    def _check(self, other: "MonomialExpansion") -> None:
        if self.n != other.n or self.reduced != other.reduced:
            raise SymfuncError("incompatible expansions")

    def __add__(self, other: "MonomialExpansion") -> "MonomialExpansion":
        self._check(other)
        out = self.as_dict()
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return MonomialExpansion.from_dict(self.n, out, self.reduced)

    def scale(self, k: int) -> "MonomialExpansion":
        return MonomialExpansion.from_dict(self.n, {e: c * k for e, c in self.terms}, self.reduced)

    def __neg__(self) -> "MonomialExpansion":
        return self.scale(-1)

    def __sub__(self, other: "MonomialExpansion") -> "MonomialExpansion":
        return self + (-other)

    def __mul__(self, other: "MonomialExpansion") -> "MonomialExpansion":
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MonomialExpansion.from_dict(self.n, out, self.reduced)

    def evaluate(self, x: Sequence[Fraction | int]) -> Fraction:
        if self.reduced:
            raise SymfuncError("a reduced expansion has no point values")
        total = Fraction(0)
        for e, c in self.terms:
            term = Fraction(c)
            for xi, ei in zip(x, e):
                term *= Fraction(xi) ** ei
            total += term
        return total

    def coefficient(self, exponent: Sequence[int]) -> int:
        key = _canonical(exponent) if self.reduced else tuple(exponent)
        return self.as_dict().get(key, 0)

    def to_json(self) -> dict[str, int]:
        return {",".join(map(str, e)): c for e, c in self.terms}


def monomial_one(n: int, reduced: bool = False) -> MonomialExpansion:
    return MonomialExpansion.from_dict(n, {(0,) * n: 1}, reduced)


def monomial_zero(n: int, reduced: bool = False) -> MonomialExpansion:
    return MonomialExpansion(n, (), reduced)


@dataclass(frozen=True)
class SchurExpansion:
    """Linear combination of Schur polynomials in ``n`` variables with q-polynomial coefficients."""

    n: int
    terms: tuple[tuple[Partition, QPolynomial], ...] = ()
    reduced: bool = False

    @classmethod
    def from_dict(cls, n: int, data: Mapping[Partition, QPolynomial], reduced: bool = False) -> "SchurExpansion":
        out: dict[Partition, QPolynomial] = {}
        for lam, poly in data.items():
            if len(lam) > n:
                continue
            if reduced and len(lam) == n:
                low = lam.parts[-1]
                lam = Partition(tuple(p - low for p in lam.parts))
            out[lam] = out.get(lam, ZERO) + poly
        items = sorted(((lam, p) for lam, p in out.items() if p), key=lambda item: item[0].parts, reverse=True)
        return cls(n, tuple(items), reduced)

    def as_dict(self) -> dict[Partition, QPolynomial]:
        return dict(self.terms)

    def reduce(self) -> "SchurExpansion":
        return SchurExpansion.from_dict(self.n, self.as_dict(), reduced=True)

    def coefficient(self, lam: Partition) -> QPolynomial:
        return self.as_dict().get(lam, ZERO)

    def to_json(self) -> dict[str, str]:
        return {str(lam) or "0": str(p) for lam, p in self.terms}

    def to_graded_monomials(self) -> dict[int, MonomialExpansion]:
        """Expand each Schur polynomial into monomials, grouped by q-degree."""
        out: dict[int, MonomialExpansion] = {}
        for lam, poly in self.terms:
            mono = schur(SkewShape.straight(lam), self.n)
            if self.reduced:
                mono = mono.reduce()
            for d, c in poly.coeffs:
                piece = mono.scale(c)
                out[d] = out[d] + piece if d in out else piece
        return {d: m for d, m in out.items() if m}


@lru_cache(maxsize=None)
def _schur_cached(outer: tuple[int, ...], inner: tuple[int, ...], n: int) -> MonomialExpansion:
    shape = SkewShape(outer, inner)
    counts: dict[tuple[int, ...], int] = {}
    for t in enumerate_tableaux(shape, kind="semistandard", alphabet=n):
        e = t.content(n)
        counts[e] = counts.get(e, 0) + 1
    return MonomialExpansion.from_dict(n, counts)


def schur(shape: SkewShape | Partition, n: int) -> MonomialExpansion:
    """Skew Schur polynomial in ``n`` variables as a sum over semistandard fillings."""
    shape = shape if isinstance(shape, SkewShape) else SkewShape.straight(shape)
    return _schur_cached(shape.outer, shape.inner, n)


def complete_homogeneous(k: int, n: int) -> MonomialExpansion:
    if k < 0:
        return monomial_zero(n)
    data = {}
    for combo in itertools.combinations_with_replacement(range(n), k):
        e = [0] * n
        for i in combo:
            e[i] += 1
        data[tuple(e)] = 1
    return MonomialExpansion.from_dict(n, data)


def elementary(k: int, n: int) -> MonomialExpansion:
    if k < 0 or k > n:
        return monomial_zero(n)
    data = {}
    for combo in itertools.combinations(range(n), k):
        data[tuple(1 if i in combo else 0 for i in range(n))] = 1
    return MonomialExpansion.from_dict(n, data)


def jacobi_trudi(shape: SkewShape, n: int) -> MonomialExpansion:
    """``det h_{outer_i - inner_j - i + j}``: an independent skew Schur computation."""
    m = shape.num_rows
    outer, inner = shape.outer, shape.inner
    total = monomial_zero(n)
    for perm in itertools.permutations(range(m)):
        sign = 1
        for i in range(m):
            for j in range(i + 1, m):
                if perm[i] > perm[j]:
                    sign = -sign
        term = monomial_one(n)
        for i in range(m):
            j = perm[i]
            term = term * complete_homogeneous(outer[i] - inner[j] - i + j, n)
            if not term:
                break
        if term:
            total = total + term.scale(sign)
    return total


def schur_to_monomials(exp: SchurExpansion) -> dict[int, MonomialExpansion]:
    return exp.to_graded_monomials()


def monomials_to_schur(graded: Mapping[int, MonomialExpansion], n: int) -> SchurExpansion:
    """Write a q-graded symmetric polynomial in independent variables in the Schur basis."""
    out: dict[Partition, dict[int, int]] = {}
    for degree, mono in graded.items():
        if mono.reduced:
            raise SymfuncError("conversion needs independent variables")
        rest = mono.as_dict()
        while rest:
            lead = max(rest)
            if any(lead[i] < lead[i + 1] for i in range(n - 1)):
                raise SymfuncError(f"not symmetric: leading exponent {lead}")
            coeff = rest[lead]
            lam = Partition(lead)
            out.setdefault(lam, {})
            out[lam][degree] = out[lam].get(degree, 0) + coeff
            for e, c in schur(SkewShape.straight(lam), n).terms:
                rest[e] = rest.get(e, 0) - coeff * c
                if not rest[e]:
                    del rest[e]
    return SchurExpansion.from_dict(n, {lam: QPolynomial.from_dict(p) for lam, p in out.items()})


def kostka_number(shape: SkewShape | Partition, mu: Sequence[int]) -> int:
    shape = shape if isinstance(shape, SkewShape) else SkewShape.straight(shape)
    mu = tuple(mu)
    if shape.size != sum(mu):
        raise SymfuncError(f"|{shape}| != |{mu}|")
    return sum(1 for _ in enumerate_tableaux(shape, mu, "semistandard"))


@lru_cache(maxsize=None)
def _lr_coefficient(outer: tuple[int, ...], inner: tuple[int, ...], content: tuple[int, ...]) -> int:
    try:
        shape = SkewShape(outer, inner)
    except ShapeError:
        return 0
    if shape.size != sum(content):
        return 0
    count = 0
    for t in enumerate_tableaux(shape, content, "semistandard"):
        if is_lattice_word(reading_word(t)):
            count += 1
    return count


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """``c^nu_{lam, mu}``: semistandard LR fillings of ``nu/lam`` with content ``mu``."""
    if not nu.contains(lam):
        return 0
    return _lr_coefficient(nu.parts, lam.padded(len(nu)), mu.parts)


def _skew_lr_coefficient(outer: Sequence[int], inner: Sequence[int], lam: Partition) -> int:
    """LR count of ``outer/inner`` where both are arbitrary integer rows; 0 unless a genuine skew shape."""
    if any(x < 0 for x in inner):
        return 0
    if any(outer[i] < outer[i + 1] or inner[i] < inner[i + 1] for i in range(len(outer) - 1)):
        return 0
    if any(i > o for i, o in zip(inner, outer)):
        return 0
    return _lr_coefficient(tuple(outer), tuple(inner), lam.parts)


def lr0_count(shape: SkewShape, lam: Partition, method: str = "enumerate") -> int:
    """Number of nonmovable LR tableaux of ``shape`` with content ``lam``.

    The diagram is taken as a set of boxes placed flush left, so empty
    boundary rows are dropped first.

    ``inclusion-exclusion`` sums over sets ``S`` of row interfaces: a row is
    movable exactly when the interface below it can be tightened, which is
    the same as shifting every row above that interface one box left; row
    ``j`` then moves by ``#{i in S : i >= j}``.  ``inclexcl-rowwise`` shifts
    each row independently by 0 or 1; it disagrees with enumeration (e.g.
    ``2,2,1/1,1`` with ``(2,1)``) and is kept only to document that.
    """
    shape = shape.canonical()
    if shape.size != lam.size:
        return 0
    if method == "enumerate":
        return sum(1 for _ in enumerate_tableaux(shape, lam.parts, "nonmovable-lr"))
    if method in ("inclusion-exclusion", "inclexcl", "inclexcl-rowwise"):
        total = 0
        m = shape.num_rows
        for choice in itertools.product((0, 1), repeat=m):
            if method == "inclexcl-rowwise":
                shift = choice
            else:
                shift = tuple(sum(choice[j:]) for j in range(m))
            outer = [shape.outer[i] - shift[i] for i in range(m)]
            inner = [shape.inner[i] - shift[i] for i in range(m)]
            sign = -1 if sum(choice) % 2 else 1
            total += sign * _skew_lr_coefficient(outer, inner, lam)
        return total
    raise SymfuncError(f"unknown method {method!r}")


def is_rectangular(mu: Sequence[int]) -> bool:
    mu = tuple(mu)
    return bool(mu) and all(x == mu[0] for x in mu) and mu[0] > 0


def exponent_vectors(mu: Sequence[int]) -> Iterable[tuple[int, ...]]:
    return itertools.product(*exponent_ranges(mu))


def spectral_classes(lam: Partition, mu: Sequence[int]) -> dict[tuple[int, ...], int]:
    """Nonzero ``|LR_0(Sh_d(mu), lam)|`` indexed by exponent vector ``d``."""
    mu = tuple(mu)
    out = {}
    for d in exponent_vectors(mu):
        count = lr0_count(shape_sh(d, mu), lam)
        if count:
            out[d] = count
    return out


def kostka_foulkes(lam: Partition, mu: Sequence[int], method: str = "charge") -> QPolynomial:
    mu = tuple(mu)
    if sum(mu) != lam.size:
        raise SymfuncError(f"|{lam}| != |{mu}|")
    if method == "charge":
        if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
            raise SymfuncError("charge method needs a dominant content")
        data: dict[int, int] = {}
        for t in enumerate_tableaux(SkewShape.straight(lam), mu, "semistandard"):
            c = charge_tableau(t)
            data[c] = data.get(c, 0) + 1
        return QPolynomial.from_dict(data)
    if method in ("spectral-c", "spectral-ind"):
        if not is_rectangular(mu):
            raise SymfuncError("spectral methods need a rectangular content")
        return spectral_sum(lam, mu, "c" if method == "spectral-c" else "ind")
    raise SymfuncError(f"unknown method {method!r}")


def spectral_sum(lam: Partition, mu: Sequence[int], variant: str = "c") -> QPolynomial:
    """``sum_d q^{c(d)} |LR_0(Sh_d(mu), lam)|`` with no shape restriction on ``mu``."""
    mu = tuple(mu)
    data: dict[int, int] = {}
    for d, count in spectral_classes(lam, mu).items():
        deg = charge_of_d(d, len(mu), variant)
        data[deg] = data.get(deg, 0) + count
    return QPolynomial.from_dict(data)


def g_polynomial(shape: SkewShape | Partition, mu: Sequence[int]) -> QPolynomial:
    """``sum_T q^{sum_{i=0}^{m-1} (m-i) d_i(T)}`` over semistandard fillings with extended exponents."""
    shape = shape if isinstance(shape, SkewShape) else SkewShape.straight(shape)
    mu = tuple(mu)
    if shape.size != sum(mu):
        raise SymfuncError(f"|{shape}| != |{mu}|")
    m = len(mu)
    data: dict[int, int] = {}
    for t in enumerate_tableaux(shape, mu, "semistandard"):
        d = descents_exponents(t, mu, extended=True)
        deg = sum((m - i) * x for i, x in enumerate(d))
        data[deg] = data.get(deg, 0) + 1
    return QPolynomial.from_dict(data)


def partitions_of(size: int, max_length: int | None = None, max_part: int | None = None) -> list[Partition]:
    """Partitions of ``size`` in reverse lexicographic order."""
    out = []

    def rec(left: int, cap: int, acc: list[int]) -> None:
        if left == 0:
            out.append(Partition(tuple(acc)))
            return
        if max_length is not None and len(acc) >= max_length:
            return
        for p in range(min(left, cap), 0, -1):
            acc.append(p)
            rec(left - p, p, acc)
            acc.pop()

    rec(size, size if max_part is None else max_part, [])
    return out


def _v(count: int, q: Fraction) -> Fraction:
    out = Fraction(1)
    for j in range(1, count + 1):
        out *= sum((q**e for e in range(j)), Fraction(0))
    return out


def hall_littlewood_eval(mu: Partition, x: Sequence[Fraction | int], q: Fraction | int) -> Fraction:
    """``P_mu(x; q)`` by symmetrization over all permutations of the variables.

    The normalization divides by ``v_m(q)`` for every multiplicity ``m`` of a
    part of ``mu``, zero parts included, so that ``P_0 = 1``.
    """
    x = [Fraction(v) for v in x]
    q = Fraction(q)
    m = len(x)
    if len(mu) > m:
        raise SymfuncError(f"l({mu}) > {m}")
    if len(set(x)) != m:
        raise SymfuncError("sample point needs distinct coordinates")
    parts = mu.padded(m)
    total = Fraction(0)
    for perm in itertools.permutations(range(m)):
        y = [x[p] for p in perm]
        term = Fraction(1)
        for i in range(m):
            term *= y[i] ** parts[i]
        for i in range(m):
            for j in range(i + 1, m):
                term *= (y[i] - q * y[j]) / (y[i] - y[j])
        total += term
    norm = Fraction(1)
    for part in set(parts):
        norm *= _v(parts.count(part), q)
    return total / norm


def skew_kostka_foulkes(shape: SkewShape, mu: Partition) -> QPolynomial:
    """``K_{lam/nu, mu}(q) = sum_kappa c^lam_{nu kappa} K_{kappa, mu}(q)``."""
    outer = Partition(shape.outer)
    inner = Partition(shape.inner)
    total = ZERO
    for kappa in partitions_of(shape.size):
        c = lr_coefficient(inner, kappa, outer)
        if c:
            total = total + kostka_foulkes(kappa, mu.parts) * c
    return total
