"""Partitions, compositions and skew diagrams.

Every diagram is stored in English convention: row 1 is the top row and
row ``i`` occupies columns ``inner[i] + 1 .. outer[i]``.  Columns are
0-based internally, so a row is the half-open interval
``[inner[i], outer[i])``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class ShapeError(ValueError):
    """Raised when a shape precondition fails."""


def _ints(parts: Iterable[int]) -> tuple[int, ...]:
    out = tuple(int(p) for p in parts)
    if any(p < 0 for p in out):
        raise ShapeError(f"negative part in {out}")
    return out


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = list(_ints(self.parts))
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ShapeError(f"not weakly decreasing: {tuple(parts)}")
        while parts and parts[-1] == 0:
            parts.pop()
        object.__setattr__(self, "parts", tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("", "0", "()", "-"):
            return cls(())
        return cls(tuple(int(x) for x in text.split(",")))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self.parts):
            raise ShapeError(f"cannot pad {self} to length {length}")
        return self.parts + (0,) * (length - len(self.parts))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(other[i] <= self[i] for i in range(len(other)))


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", _ints(self.parts))

    @classmethod
    def parse(cls, text: str) -> "Composition":
        text = text.strip()
        if text in ("", "()", "-"):
            return cls(())
        return cls(tuple(int(x) for x in text.split(",")))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    @property
    def size(self) -> int:
        return sum(self.parts)

    def is_dominant(self) -> bool:
        p = self.parts
        return all(p[i] >= p[i + 1] for i in range(len(p) - 1))


@dataclass(frozen=True)
class SkewShape:
    """A skew diagram ``outer/inner``.

    The row count is ``len(outer)``; ``inner`` is zero-padded to it.  Rows
    whose inner and outer coincide are kept, because the position of an
    empty row matters for the row-shifting moves used by nonmovable
    tableaux.
    """

    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        outer = list(_ints(self.outer))
        inner = list(_ints(self.inner))
        while outer and outer[-1] == 0 and (len(inner) < len(outer) or inner[len(outer) - 1] == 0):
            outer.pop()
        while inner and inner[-1] == 0 and len(inner) > len(outer):
            inner.pop()
        if len(inner) > len(outer):
            raise ShapeError(f"inner {tuple(inner)} longer than outer {tuple(outer)}")
        inner += [0] * (len(outer) - len(inner))
        for seq in (outer, inner):
            if any(seq[i] < seq[i + 1] for i in range(len(seq) - 1)):
                raise ShapeError(f"not a skew shape: {tuple(outer)}/{tuple(inner)}")
        if any(i > o for i, o in zip(inner, outer)):
            raise ShapeError(f"inner not contained in outer: {tuple(outer)}/{tuple(inner)}")
        object.__setattr__(self, "outer", tuple(outer))
        object.__setattr__(self, "inner", tuple(inner))

    @classmethod
    def straight(cls, shape: Partition | Sequence[int]) -> "SkewShape":
        parts = shape.parts if isinstance(shape, Partition) else tuple(shape)
        return cls(parts, ())

    @classmethod
    def parse(cls, text: str) -> "SkewShape":
        if "/" in text:
            outer, inner = text.split("/", 1)
        else:
            outer, inner = text, ""
        to_tuple = lambda s: () if s.strip() in ("", "0") else tuple(int(x) for x in s.split(","))
        return cls(to_tuple(outer), to_tuple(inner))

    def __str__(self) -> str:
        inner = self.inner
        while inner and inner[-1] == 0:
            inner = inner[:-1]
        return ",".join(map(str, self.outer)) + "/" + ",".join(map(str, inner))

    @property
    def num_rows(self) -> int:
        return len(self.outer)

    def row_lengths(self) -> tuple[int, ...]:
        return tuple(o - i for o, i in zip(self.outer, self.inner))

    @property
    def size(self) -> int:
        return sum(self.row_lengths())

    def is_straight(self) -> bool:
        return not any(self.inner)

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r in range(self.num_rows) for c in range(self.inner[r], self.outer[r])]

    def column_heights(self) -> dict[int, int]:
        heights: dict[int, int] = {}
        for _, c in self.cells():
            heights[c] = heights.get(c, 0) + 1
        return heights

    def canonical(self) -> "SkewShape":
        """Drop empty rows at the top and bottom and slide the diagram flush left."""
        lengths = self.row_lengths()
        nonempty = [r for r, n in enumerate(lengths) if n]
        if not nonempty:
            return SkewShape((), ())
        lo, hi = nonempty[0], nonempty[-1] + 1
        shift = min(self.inner[lo:hi])
        return SkewShape(
            tuple(o - shift for o in self.outer[lo:hi]),
            tuple(i - shift for i in self.inner[lo:hi]),
        )


def conjugate(p: Partition) -> Partition:
    if not p.parts:
        return Partition(())
    return Partition(tuple(sum(1 for x in p.parts if x >= j) for j in range(1, p.parts[0] + 1)))


def skew_length(s: SkewShape) -> int:
    """Maximum column height of the diagram."""
    heights = s.column_heights()
    return max(heights.values()) if heights else 0


def rotate180(s: SkewShape) -> SkewShape:
    """Rotate the diagram by 180 degrees inside its bounding ``m x outer[0]`` box."""
    m = s.num_rows
    if m == 0:
        return s
    width = s.outer[0]
    outer = tuple(width - s.inner[m - 1 - r] for r in range(m))
    inner = tuple(width - s.outer[m - 1 - r] for r in range(m))
    return SkewShape(outer, inner)


def shape_sh(
    offsets: Sequence[int],
    mu: Sequence[int],
    inner_tail: Partition | Sequence[int] = (),
) -> SkewShape:
    """The staircase shape whose rows have lengths ``mu`` and relative offsets ``offsets``.

    The bottom row has ``mu[-1]`` boxes starting in column 1; row ``i`` starts
    ``offsets[i]`` columns to the right of row ``i + 1``.  With ``len(offsets)
    == len(mu)`` the leading offset ``d0`` places the 180-degree rotation of
    ``inner_tail`` on top of row 1, its bottom row starting ``d0`` columns to
    the right of row 1's start.
    """
    mu = _ints(mu)
    offsets = _ints(offsets)
    tail = tuple(inner_tail.parts if isinstance(inner_tail, Partition) else Partition(tuple(inner_tail)).parts)
    m = len(mu)
    if len(offsets) == m:
        d0, offsets = offsets[0], offsets[1:]
        extended = True
    elif len(offsets) == max(m - 1, 0):
        d0, extended = 0, False
        if tail:
            raise ShapeError("a non-empty inner tail needs the extended offset vector")
    else:
        raise ShapeError(f"offset vector of length {len(offsets)} does not fit {m} rows")
    for i in range(m - 1):
        if offsets[i] + mu[i] < mu[i + 1]:
            raise ShapeError(f"offset {offsets[i]} + {mu[i]} < {mu[i + 1]} at row {i + 1}")
    starts = [0] * m
    for i in range(m - 2, -1, -1):
        starts[i] = starts[i + 1] + offsets[i]
    outer = [starts[i] + mu[i] for i in range(m)]
    inner = list(starts)
    if extended and tail:
        if m == 0:
            raise ShapeError("an inner tail needs at least one row")
        right = starts[0] + d0 + tail[0]
        if right < outer[0]:
            raise ShapeError(f"offset d0={d0} leaves the rotated tail short of row 1")
        top_outer = [right] * len(tail)
        top_inner = [right - tail[len(tail) - 1 - j] for j in range(len(tail))]
        outer = top_outer + outer
        inner = top_inner + inner
    return SkewShape(tuple(outer), tuple(inner))


def _cyclic(k: Sequence[int], i: int) -> int:
    """``k_i`` for a 1-based index read cyclically."""
    return k[(i - 1) % len(k)]


def kappa_row_starts(h_fin: Sequence[int], k: Sequence[int], rows: int) -> list[int]:
    """Left ends ``P_1 .. P_rows`` of the rows of the infinite diagram."""
    k = tuple(getattr(k, "cycle", k))
    starts = [0]
    for r in range(1, rows):
        h = h_fin[r - 1] if r <= len(h_fin) else _cyclic(k, r)
        starts.append(starts[-1] + h)
    return starts


def kappa_from_h(h_fin: Sequence[int], k: Sequence[int], l: int, n: int) -> SkewShape:
    """The finite diagram attached to a finite part ``(h_1, .., h_J)``.

    ``k`` is the ground cycle ``(k_1, .., k_n)``.  Path row ``r`` covers
    columns ``[P_r, P_r + l)`` with ``P_{r+1} = P_r + h_r``.  The diagram keeps
    rows ``1 .. J+n-1`` cut at column ``P_{J+n}``, where the full columns of
    the periodic tail begin.  English row 1 is the highest path row.
    """
    k = tuple(getattr(k, "cycle", k))
    h_fin = _ints(h_fin)
    if len(k) != n or n < 2:
        raise ShapeError(f"ground cycle {k} does not have length n={n} >= 2")
    if any(h > l for h in h_fin):
        raise ShapeError(f"entries of {h_fin} exceed the level {l}")
    J = len(h_fin)
    starts = kappa_row_starts(h_fin, k, J + n)
    cut = starts[J + n - 1]
    rows = []
    for r in range(J + n - 1, 0, -1):
        left = starts[r - 1]
        right = min(left + l, cut)
        rows.append((max(right, left), left))
    while rows and rows[0][0] == rows[0][1]:
        rows.pop(0)
    return SkewShape(tuple(o for o, _ in rows), tuple(i for _, i in rows))


def kappa_tilde_columns(h_fin: Sequence[int], k: Sequence[int], l: int, n: int, depth: int | None = None) -> dict[int, list[int]]:
    """Column -> list of path rows covering it, for rows ``1 .. J+depth``."""
    k = tuple(getattr(k, "cycle", k))
    J = len(h_fin)
    total = J + (2 * n if depth is None else depth)
    starts = kappa_row_starts(h_fin, k, total)
    cols: dict[int, list[int]] = {}
    for r in range(1, total + 1):
        for c in range(starts[r - 1], starts[r - 1] + l):
            cols.setdefault(c, []).append(r)
    return cols


def border_strip(heights: Sequence[int]) -> SkewShape:
    """Connected ribbon whose columns, left to right, have the given heights.

    The top box of each column sits immediately left of the bottom box of the
    next column.
    """
    heights = _ints(heights)
    if any(h == 0 for h in heights):
        raise ShapeError("border strip columns must be nonempty")
    if not heights:
        return SkewShape((), ())
    total_rows = sum(heights) - (len(heights) - 1)
    spans = []
    bottom = total_rows - 1
    for h in heights:
        top = bottom - h + 1
        spans.append((top, bottom))
        bottom = top
    outer, inner = [], []
    for r in range(total_rows):
        cols = [j for j, (top, bot) in enumerate(spans) if top <= r <= bot]
        inner.append(min(cols))
        outer.append(max(cols) + 1)
    return SkewShape(tuple(outer), tuple(inner))
