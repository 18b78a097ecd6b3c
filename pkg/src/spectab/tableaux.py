"""Fillings of skew shapes, their predicates and statistics, and the theta maps."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .shapes import Partition, ShapeError, SkewShape, shape_sh

KINDS = ("semistandard", "all", "lr", "nonmovable", "nonmovable-lr")


class TableauError(ValueError):
    """Raised when a tableau precondition fails."""


@dataclass(frozen=True)
class Tableau:
    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        lengths = self.shape.row_lengths()
        rows = rows + ((),) * (len(lengths) - len(rows))
        if tuple(len(r) for r in rows) != lengths:
            raise TableauError(f"row lengths {tuple(len(r) for r in rows)} do not fit shape {self.shape}")
        if any(x < 1 for row in rows for x in row):
            raise TableauError("entries must be positive")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], inner: Sequence[int] = ()) -> "Tableau":
        rows = [tuple(r) for r in rows]
        inner = tuple(inner) + (0,) * (len(rows) - len(inner))
        outer = tuple(i + len(r) for i, r in zip(inner, rows))
        return cls(SkewShape(outer, inner), tuple(rows))

    @classmethod
    def parse(cls, text: str, inner: Sequence[int] = ()) -> "Tableau":
        """Rows separated by ``;``; leading dots mark skipped inner boxes when ``inner`` is not given."""
        rows, dots = [], []
        for chunk in text.split(";"):
            chunk = chunk.strip()
            stripped = chunk.lstrip(".")
            dots.append(len(chunk) - len(stripped))
            stripped = stripped.strip(",")
            rows.append(tuple(int(x) for x in stripped.split(",")) if stripped else ())
        if not inner and any(dots):
            inner = dots
        return cls.from_rows(rows, inner)

    def __str__(self) -> str:
        return ";".join(",".join(map(str, row)) for row in self.rows)

    def display(self) -> str:
        return ";".join("." * i + ",".join(map(str, row)) for i, row in zip(self.shape.inner, self.rows))

    def entry(self, r: int, c: int) -> int | None:
        """Entry at row ``r`` and absolute column ``c`` (both 0-based)."""
        if 0 <= r < len(self.rows):
            j = c - self.shape.inner[r]
            if 0 <= j < len(self.rows[r]):
                return self.rows[r][j]
        return None

    def content(self, size: int | None = None) -> tuple[int, ...]:
        top = max((x for row in self.rows for x in row), default=0)
        size = top if size is None else size
        if top > size:
            raise TableauError(f"entry {top} exceeds alphabet {size}")
        counts = [0] * size
        for row in self.rows:
            for x in row:
                counts[x - 1] += 1
        return tuple(counts)

    def letter_rows(self, letter: int) -> list[int]:
        """Sorted 1-based indices of the rows containing ``letter``, with multiplicity."""
        return [r + 1 for r, row in enumerate(self.rows) for x in row if x == letter]


def rows_semistandard(outer: Sequence[int], inner: Sequence[int], rows: Sequence[Sequence[int]]) -> bool:
    """Semistandardness of rows placed at the given positions."""
    for r, row in enumerate(rows):
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
        if r == 0:
            continue
        above, a_in = rows[r - 1], inner[r - 1]
        lo = max(inner[r], a_in)
        hi = min(outer[r], a_in + len(above))
        for c in range(lo, hi):
            if above[c - a_in] >= row[c - inner[r]]:
                return False
    return True


def is_semistandard(t: Tableau) -> bool:
    return rows_semistandard(t.shape.outer, t.shape.inner, t.rows)


def reading_word(t: Tableau) -> tuple[int, ...]:
    """Rows read right to left, top row first."""
    return tuple(x for row in t.rows for x in reversed(row))


def is_lattice_word(word: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for a in word:
        counts[a] = counts.get(a, 0) + 1
        if a > 1 and counts[a] > counts.get(a - 1, 0):
            return False
    return True


def is_lr_tableau(t: Tableau) -> bool:
    rows_ok = all(row[j] <= row[j + 1] for row in t.rows for j in range(len(row) - 1))
    return rows_ok and is_lattice_word(reading_word(t))


def _is_partition(seq: Sequence[int]) -> bool:
    return all(x >= 0 for x in seq) and all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1))


def row_is_movable(t: Tableau, r: int) -> bool:
    """Whether shifting row ``r`` one box left yields a semistandard skew tableau."""
    outer = list(t.shape.outer)
    inner = list(t.shape.inner)
    outer[r] -= 1
    inner[r] -= 1
    if not (_is_partition(outer) and _is_partition(inner)):
        return False
    lo, hi = max(r - 1, 0), min(r + 2, len(outer))
    return rows_semistandard(outer[lo:hi], inner[lo:hi], t.rows[lo:hi])


def is_nonmovable(t: Tableau) -> bool:
    if not is_semistandard(t):
        return False
    return not any(row_is_movable(t, r) for r in range(t.shape.num_rows))


def enumerate_tableaux(
    shape: SkewShape,
    content: Sequence[int] | None = None,
    kind: str = "semistandard",
    alphabet: int | None = None,
) -> Iterator[Tableau]:
    """Yield fillings of ``shape`` of the requested kind in row-lexicographic order.

    ``content`` fixes the multiplicity of each letter; ``alphabet`` bounds the
    letters when no content is given.
    """
    if kind not in KINDS:
        raise TableauError(f"unknown kind {kind!r}")
    if content is not None:
        content = tuple(content)
        if sum(content) != shape.size:
            return
        alphabet = len(content) if alphabet is None else alphabet
        if len(content) > alphabet and any(content[alphabet:]):
            return
        remaining = list(content) + [0] * max(0, alphabet - len(content))
        remaining = remaining[:alphabet]
    else:
        if alphabet is None:
            raise TableauError("either content or alphabet is required")
        remaining = None
    strict = kind in ("semistandard", "nonmovable", "nonmovable-lr")
    weak = kind != "all"
    lattice = kind in ("lr", "nonmovable-lr")
    nonmovable = kind in ("nonmovable", "nonmovable-lr")

    lengths = shape.row_lengths()
    inner = shape.inner
    nrows = len(lengths)
    rows: list[list[int]] = [[] for _ in range(nrows)]
    read_counts = [0] * (alphabet + 2)
    cells = [(r, j) for r in range(nrows) for j in range(lengths[r])]
    total = len(cells)

    def lower_bound(r: int, j: int) -> int:
        lo = 1
        if weak and j > 0:
            lo = rows[r][j - 1]
        if strict and r > 0:
            c = inner[r] + j
            above = c - inner[r - 1]
            if 0 <= above < lengths[r - 1]:
                lo = max(lo, rows[r - 1][above] + 1)
        return lo

    def row_lattice_ok(r: int) -> bool:
        touched = []
        ok = True
        for a in reversed(rows[r]):
            read_counts[a] += 1
            touched.append(a)
            if a > 1 and read_counts[a] > read_counts[a - 1]:
                ok = False
                break
        if not ok:
            for a in touched:
                read_counts[a] -= 1
        return ok

    def undo_row(r: int) -> None:
        for a in rows[r]:
            read_counts[a] -= 1

    def rec(pos: int) -> Iterator[Tableau]:
        if pos == total:
            t = Tableau(shape, tuple(tuple(row) for row in rows))
            if not nonmovable or not any(row_is_movable(t, r) for r in range(nrows)):
                yield t
            return
        r, j = cells[pos]
        for v in range(lower_bound(r, j), alphabet + 1):
            if remaining is not None:
                if remaining[v - 1] == 0:
                    continue
                remaining[v - 1] -= 1
            rows[r].append(v)
            row_done = j == lengths[r] - 1
            if not (lattice and row_done) or row_lattice_ok(r):
                yield from rec(pos + 1)
                if lattice and row_done:
                    undo_row(r)
            rows[r].pop()
            if remaining is not None:
                remaining[v - 1] += 1

    yield from rec(0)


def max_ordered_matching(lower: Sequence[int], upper: Sequence[int]) -> int:
    """Largest number of disjoint pairs ``(a, b)`` with ``a`` in ``lower``, ``b`` in ``upper`` and ``a < b``."""
    a_sorted = sorted(lower)
    matched = 0
    for b in sorted(upper):
        if matched < len(a_sorted) and a_sorted[matched] < b:
            matched += 1
    return matched


def descent_multiplicities(t: Tableau, m: int) -> tuple[int, ...]:
    """``zeta_1 .. zeta_{m-1}``: maximal pairings of an ``i`` with an ``i+1`` in a strictly lower row."""
    return tuple(max_ordered_matching(t.letter_rows(i), t.letter_rows(i + 1)) for i in range(1, m))


def descents_exponents(t: Tableau, content: Sequence[int], extended: bool = False) -> tuple[int, ...]:
    """Exponents ``d_i = mu_{i+1} - zeta_i``, optionally preceded by ``d_0``."""
    content = tuple(content)
    m = len(content)
    if t.content(m) != content:
        raise TableauError(f"content {t.content(m)} does not match {content}")
    zeta = descent_multiplicities(t, m)
    d = tuple(content[i + 1] - zeta[i] for i in range(m - 1))
    if not extended:
        return d
    if m == 0:
        return ()
    ones_below_top = sum(1 for r in t.letter_rows(1) if r > 1)
    return (content[0] - ones_below_top,) + d


def theta_nu(t: Tableau, nu: Sequence[int], content: Sequence[int] | None = None) -> Tableau:
    """Fill row ``k`` of the staircase shape with the indices of the rows of ``t`` containing ``k``."""
    if not t.shape.is_straight():
        raise TableauError("theta_nu takes a straight-shape tableau")
    if not is_semistandard(t):
        raise TableauError("theta_nu takes a semistandard tableau")
    mu = tuple(content) if content is not None else t.content()
    if t.content(len(mu)) != mu:
        raise TableauError("content mismatch")
    try:
        shape = shape_sh(tuple(nu), mu)
    except ShapeError as exc:
        raise TableauError(str(exc)) from exc
    return Tableau(shape, tuple(tuple(t.letter_rows(k)) for k in range(1, len(mu) + 1)))


def theta_nu_inverse(u: Tableau, target: Partition | SkewShape, skip_rows: int = 0) -> Tableau:
    """Rebuild the tableau whose letter ``k`` occupies the rows listed in row ``skip_rows + k`` of ``u``."""
    target = target if isinstance(target, SkewShape) else SkewShape.straight(target)
    letter_rows = u.rows[skip_rows:]
    buckets: list[list[int]] = [[] for _ in range(target.num_rows)]
    for k, row in enumerate(letter_rows, start=1):
        for r in row:
            if not 1 <= r <= target.num_rows:
                raise TableauError(f"row index {r} outside the target shape")
            buckets[r - 1].append(k)
    try:
        return Tableau(target, tuple(tuple(b) for b in buckets))
    except TableauError as exc:
        raise TableauError(f"row contents do not fit {target}: {exc}") from exc


def _complete_tail(below: Tableau, tail: tuple[int, ...], lam: tuple[int, ...], shape: SkewShape) -> tuple[tuple[int, ...], ...]:
    """Forced filling of the rotated-tail rows sitting above the letter rows."""
    p = len(tail)
    needed = list(lam)
    for row in below.rows:
        for x in row:
            needed[x - 1] -= 1
    if any(x < 0 for x in needed):
        raise TableauError("letter rows exceed the target content")
    lengths = shape.row_lengths()[:p]
    solutions = []
    rows: list[list[int]] = [[] for _ in range(p)]
    top_cells = [(r, j) for r in range(p) for j in range(lengths[r])]
    alphabet = len(lam)

    def rec(pos: int) -> None:
        if len(solutions) > 1:
            return
        if pos == len(top_cells):
            full = tuple(tuple(r) for r in rows) + below.rows
            cand = Tableau(shape, full)
            if is_semistandard(cand) and is_lr_tableau(cand):
                solutions.append(full[:p])
            return
        r, j = top_cells[pos]
        lo = rows[r][j - 1] if j else 1
        for v in range(lo, alphabet + 1):
            if needed[v - 1] == 0:
                continue
            if r > 0:
                c = shape.inner[r] + j
                above = c - shape.inner[r - 1]
                if 0 <= above < lengths[r - 1] and rows[r - 1][above] >= v:
                    continue
            needed[v - 1] -= 1
            rows[r].append(v)
            rec(pos + 1)
            rows[r].pop()
            needed[v - 1] += 1

    rec(0)
    if len(solutions) != 1:
        raise TableauError(f"rotated tail rows are not forced: {len(solutions)} completions")
    return solutions[0]


def theta_d(t: Tableau, content: Sequence[int] | None = None) -> Tableau:
    """Image of ``t`` on the staircase shape determined by its own exponents.

    For a skew tableau of shape ``lambda/nu`` the extended exponents are used
    and the rotated ``nu`` rows on top receive their forced filling.
    """
    mu = tuple(content) if content is not None else t.content()
    if not is_semistandard(t):
        raise TableauError("theta_d takes a semistandard tableau")
    if t.shape.is_straight():
        return theta_nu(t, descents_exponents(t, mu), mu)
    d = descents_exponents(t, mu, extended=True)
    tail = Partition(t.shape.inner).parts
    shape = shape_sh(d, mu, tail)
    letters = Tableau.from_rows([t.letter_rows(k) for k in range(1, len(mu) + 1)])
    lam = tuple(t.shape.outer)
    p = len(tail)
    below = Tableau(
        SkewShape(shape.outer[p:], shape.inner[p:]),
        letters.rows,
    )
    top = _complete_tail(below, tail, lam, shape)
    return Tableau(shape, top + letters.rows)


def theta_d_inverse(u: Tableau, target: Partition | SkewShape) -> Tableau:
    """Inverse of ``theta_d``: read letter rows below the rotated tail rows."""
    target = target if isinstance(target, SkewShape) else SkewShape.straight(target)
    p = len(Partition(target.inner).parts)
    return theta_nu_inverse(u, target, skip_rows=p)


def exponent_ranges(mu: Sequence[int]) -> list[range]:
    """Admissible exponents per position: ``max(0, mu_{i+1} - mu_i) <= d_i <= mu_{i+1}``."""
    mu = tuple(mu)
    return [range(max(0, mu[i + 1] - mu[i]), mu[i + 1] + 1) for i in range(len(mu) - 1)]
