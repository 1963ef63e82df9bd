"""Partitions and boxed plane partitions.

Cells are 1-indexed ``(row, column)`` pairs; plane-partition boxes are
``(row, column, level)`` triples.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence


class MalformedCoordinatesError(ValueError):
    """Frobenius or corner coordinates that describe no partition."""


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def durfee(self) -> int:
        return durfee(self)

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, part in enumerate(self, start=1):
            for j in range(1, part + 1):
                yield (i, j)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def durfee(lam: Sequence[int]) -> int:
    k = 0
    while k < len(lam) and lam[k] >= k + 1:
        k += 1
    return k


def hook_length(lam: Sequence[int], i: int, j: int) -> int:
    conj = conjugate(lam)
    return (lam[i - 1] - i) + (conj[j - 1] - j) + 1


class FrobeniusCoords(NamedTuple):
    """Diagonal hooks; both arm and leg count the diagonal cell itself."""

    arms: tuple[int, ...]
    legs: tuple[int, ...]


def to_frobenius(lam: Sequence[int]) -> FrobeniusCoords:
    lam = Partition(lam)
    conj = conjugate(lam)
    k = durfee(lam)
    arms = tuple(lam[i] - i for i in range(k))
    legs = tuple(conj[i] - i for i in range(k))
    return FrobeniusCoords(arms, legs)


def _strictly_decreasing_positive(seq: Sequence[int]) -> bool:
    return all(s >= 1 for s in seq) and all(seq[i] > seq[i + 1] for i in range(len(seq) - 1))


def from_frobenius(arms: Sequence[int], legs: Sequence[int]) -> Partition:
    arms, legs = tuple(arms), tuple(legs)
    if len(arms) != len(legs):
        raise MalformedCoordinatesError(f"arms {arms} and legs {legs} differ in length")
    if not (_strictly_decreasing_positive(arms) and _strictly_decreasing_positive(legs)):
        raise MalformedCoordinatesError(
            f"arms {arms} and legs {legs} must be strictly decreasing and positive"
        )
    k = len(arms)
    parts = [arms[r] + r for r in range(k)]
    # column i (<= k) reaches down to row legs[i] + i
    depth = [legs[i] + i for i in range(k)]
    row = k + 1
    while True:
        width = sum(1 for d in depth if d >= row)
        if not width:
            break
        parts.append(width)
        row += 1
    return Partition(parts)


def corners(lam: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """Outer corners of ``lam``, rows descending (so columns ascending)."""
    lam = tuple(lam)
    out = []
    for i in range(len(lam), 0, -1):
        if i == len(lam) or lam[i] < lam[i - 1]:
            out.append((i, lam[i - 1]))
    return tuple(out)


def canonical_corners(cells: Iterable[Sequence[int]]) -> tuple[tuple[int, int], ...]:
    """Validate a corner set and return it in canonical order (rows descending)."""
    cells = sorted(((int(r), int(c)) for r, c in cells), reverse=True)
    rows = [r for r, _ in cells]
    cols = [c for _, c in cells]
    if any(r < 1 for r in rows) or any(c < 1 for c in cols):
        raise MalformedCoordinatesError(f"corner cells must be positive: {cells}")
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise MalformedCoordinatesError(f"two corners share a row or a column: {cells}")
    if any(cols[i] >= cols[i + 1] for i in range(len(cols) - 1)):
        raise MalformedCoordinatesError(
            f"columns must increase as rows decrease: {cells}"
        )
    return tuple(cells)


def from_corners(cells: Iterable[Sequence[int]]) -> Partition:
    cells = canonical_corners(cells)
    if not cells:
        return Partition()
    parts = []
    # walk rows from the bottom corner upward; each row's length is the
    # column of the nearest corner at or below it
    by_row = dict(cells)
    width = 0
    for r in range(cells[0][0], 0, -1):
        width = max(width, by_row.get(r, 0))
        parts.append(width)
    return Partition(reversed(parts))


def cohook_area(lam: Sequence[int]) -> int:
    return sum(i + j - 1 for i, j in corners(lam))


def corner_count(lam: Sequence[int]) -> int:
    return len(corners(lam))


def phi(lam: Sequence[int]) -> Partition:
    """Send ``(a_1..a_k | b_1..b_k)`` to the partition with corners ``(b_i, a_{k+1-i})``.

    Area becomes cohook area and the Durfee side becomes the corner count.
    """
    arms, legs = to_frobenius(lam)
    return from_corners(zip(legs, reversed(arms)))


def phi_inverse(mu: Sequence[int]) -> Partition:
    cells = corners(mu)
    legs = tuple(r for r, _ in cells)
    arms = tuple(c for _, c in reversed(cells))
    return from_frobenius(arms, legs)


@lru_cache(maxsize=None)
def _partitions_of(size: int, max_parts: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if size == 0:
        return ((),)
    if max_parts == 0 or max_part == 0:
        return ()
    out = []
    for first in range(min(size, max_part), 0, -1):
        for rest in _partitions_of(size - first, max_parts - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(m: int, n: int) -> Iterator[Partition]:
    """All partitions inside the ``m x n`` box (at most m parts, each at most n).

    Ordered by size, then lexicographically descending within a size.
    """
    if m < 0 or n < 0:
        raise ValueError("box sides must be nonnegative")
    for size in range(m * n + 1):
        for parts in _partitions_of(size, m, n):
            yield Partition(parts)


def partitions_up_to(nmax: int) -> Iterator[Partition]:
    """All partitions of size at most ``nmax``."""
    for size in range(nmax + 1):
        for parts in _partitions_of(size, size, size):
            yield Partition(parts)


def partitions_by_cohook_area(nmax: int) -> Iterator[Partition]:
    """All partitions whose cohook area is at most ``nmax``.

    Generated from corner sets, bottom corner first, pruning on the running
    cohook sum.
    """
    def extend(row_bound: int, col_floor: int, budget: int, acc: list):
        yield list(acc)
        # next corner sits strictly above and strictly to the right
        for r in range(row_bound - 1, 0, -1):
            for c in range(col_floor + 1, budget - r + 2):
                acc.append((r, c))
                yield from extend(r, c, budget - (r + c - 1), acc)
                acc.pop()

    for cells in extend(nmax + 1, 0, nmax, []):
        yield from_corners(cells)


# -- plane partitions --------------------------------------------------------


class PPStats(NamedTuple):
    volume: int
    trace: int
    trace_vector: tuple[int, ...]
    corner_set: tuple[tuple[int, int, int], ...]
    cor: int
    cornerhook: int

    def to_json(self) -> dict:
        return {
            "volume": self.volume,
            "trace": self.trace,
            "traceVector": list(self.trace_vector),
            "cor": self.cor,
            "cornerhook": self.cornerhook,
            "corners": [list(c) for c in self.corner_set],
        }


@dataclass(frozen=True)
class PlanePartition:
    """Height matrix of shape ``a x b`` with entries in ``[0, c]``."""

    box: tuple[int, int, int]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        a, b, c = self.box
        if min(a, b, c) < 0:
            raise ValueError(f"box sides must be nonnegative: {self.box}")
        rows = tuple(tuple(int(h) for h in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != a or any(len(row) != b for row in rows):
            raise ValueError(f"height matrix does not have shape {a}x{b}")
        for i, row in enumerate(rows):
            for j, h in enumerate(row):
                if not 0 <= h <= c:
                    raise ValueError(f"height {h} at ({i + 1},{j + 1}) outside [0,{c}]")
                if j + 1 < b and row[j + 1] > h:
                    raise ValueError(f"row {i + 1} is not weakly decreasing")
                if i + 1 < a and rows[i + 1][j] > h:
                    raise ValueError(f"column {j + 1} is not weakly decreasing")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], box: tuple[int, int, int] | None = None):
        """Build from a possibly ragged matrix, zero-padding to ``box``.

        Without ``box`` the tightest box is used.
        """
        rows = [list(r) for r in rows]
        if box is None:
            a = len(rows)
            b = max((len(r) for r in rows), default=0)
            c = max((h for r in rows for h in r), default=0)
            box = (a, b, c)
        a, b, _ = box
        if len(rows) > a or any(len(r) > b for r in rows):
            raise ValueError(f"matrix does not fit the box {box}")
        padded = [r + [0] * (b - len(r)) for r in rows] + [[0] * b for _ in range(a - len(rows))]
        return cls(tuple(box), tuple(tuple(r) for r in padded))

    def height(self, i: int, j: int) -> int:
        """``pi_{i,j}`` (1-indexed), zero outside the matrix."""
        if 1 <= i <= len(self.rows) and 1 <= j <= self.box[1]:
            return self.rows[i - 1][j - 1]
        return 0

    @property
    def volume(self) -> int:
        return sum(map(sum, self.rows))

    def diagram(self) -> Iterator[tuple[int, int, int]]:
        for i, row in enumerate(self.rows, start=1):
            for j, h in enumerate(row, start=1):
                for k in range(1, h + 1):
                    yield (i, j, k)

    def level(self, k: int) -> Partition:
        """The partition ``{(i, j) : pi_{i,j} >= k}`` cut at height ``k``."""
        return Partition(sum(1 for h in row if h >= k) for row in self.rows)

    def to_json(self) -> dict:
        return {"box": list(self.box), "rows": [list(r) for r in self.rows]}


def corner_cells(pi: PlanePartition) -> tuple[tuple[int, int, int], ...]:
    """``(i, j, k)`` with ``pi_{i+1,j} < k <= pi_{i,j}`` and ``pi_{i,j+1} < k``."""
    out = []
    for i, row in enumerate(pi.rows, start=1):
        for j, h in enumerate(row, start=1):
            low = max(pi.height(i + 1, j), pi.height(i, j + 1))
            out.extend((i, j, k) for k in range(low + 1, h + 1))
    return tuple(out)


def pp_stats(pi: PlanePartition) -> PPStats:
    cells = corner_cells(pi)
    diag = tuple(pi.rows[i][i] for i in range(min(pi.box[0], pi.box[1])) if pi.rows[i][i])
    return PPStats(
        volume=pi.volume,
        trace=sum(diag),
        trace_vector=diag,
        corner_set=cells,
        cor=len(cells),
        cornerhook=sum(i + j - 1 for i, j, _ in cells),
    )


def fast_stats(rows: Sequence[Sequence[int]]) -> tuple[int, int, int, int]:
    """``(volume, trace, cornerhook, cor)`` for a raw height matrix."""
    vol = tr = ch = cor = 0
    a = len(rows)
    for i in range(a):
        row = rows[i]
        below = rows[i + 1] if i + 1 < a else None
        b = len(row)
        for j in range(b):
            h = row[j]
            if not h:
                break
            vol += h
            if i == j:
                tr += h
            low = row[j + 1] if j + 1 < b else 0
            if below is not None and below[j] > low:
                low = below[j]
            n = h - low
            cor += n
            ch += n * (i + j + 1)
    return vol, tr, ch, cor


def side_shape(pi: PlanePartition) -> Partition:
    if not pi.rows:
        return Partition()
    return Partition(pi.rows[0])


@lru_cache(maxsize=None)
def _rows_under(bound: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Weakly decreasing rows entrywise at most ``bound``, lexicographically descending."""
    if not bound:
        return ((),)
    out = []
    head, rest = bound[0], bound[1:]
    for h in range(head, -1, -1):
        capped = tuple(min(x, h) for x in rest)
        for tail in _rows_under(capped):
            out.append((h,) + tail)
    return tuple(out)


def enumerate_pp_rows(a: int, b: int, c: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Raw height matrices of ``PP(a, b, c)``; see :func:`enumerate_pp`."""
    if min(a, b, c) < 0:
        raise ValueError("box sides must be nonnegative")

    def rec(depth: int, bound: tuple[int, ...], acc: tuple):
        if depth == a:
            yield acc
            return
        for row in _rows_under(bound):
            yield from rec(depth + 1, row, acc + (row,))

    yield from rec(0, (c,) * b, ())


def enumerate_pp(a: int, b: int, c: int) -> Iterator[PlanePartition]:
    """Every plane partition in the ``a x b x c`` box, exactly once.

    Rows are chosen top-down, each entrywise below the previous one; within a
    row, candidates run lexicographically descending.
    """
    box = (a, b, c)
    for rows in enumerate_pp_rows(a, b, c):
        pi = PlanePartition.__new__(PlanePartition)
        object.__setattr__(pi, "box", box)
        object.__setattr__(pi, "rows", rows)
        yield pi


def enumerate_pp_with_first_row(lam: Sequence[int], a: int, b: int) -> Iterator[PlanePartition]:
    """Plane partitions with at most ``a`` rows, ``b`` columns and first row ``lam``."""
    lam = Partition(lam)
    if len(lam) > b:
        raise ValueError(f"{tuple(lam)} has more than {b} parts")
    if a < 1:
        if lam:
            return
        yield PlanePartition((0, b, 0), ())
        return
    c = lam[0] if lam else 0
    first = tuple(lam) + (0,) * (b - len(lam))
    box = (a, b, c)

    def rec(depth: int, bound: tuple[int, ...], acc: tuple):
        if depth == a:
            yield PlanePartition(box, acc)
            return
        for row in _rows_under(bound):
            yield from rec(depth + 1, row, acc + (row,))

    yield from rec(1, first, (first,))
