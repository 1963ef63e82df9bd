"""Floor/wall lattice paths and the LGV determinant ``D(a, b, c)``.

Source ``A_i = (i, 0, b)`` and sink ``B_j = (j, a, 0)``.  A path first walks
on the floor ``y = 0`` from ``z = b`` down to ``z = 0`` (forward, or left
with weight ``z_level``), then climbs the wall ``z = 0`` from ``y = 0`` up to
``y = a`` (up, or right with weight ``x_level``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, NamedTuple, Sequence

from .combcore import (
    Partition,
    PlanePartition,
    conjugate,
    durfee,
    from_frobenius,
    to_frobenius,
)
from .polyring import MPoly, Var, det, mono_mul, perm_sign, poly_sum, q, t
from .symfunc import elementary, xs, zs

FORWARD, LEFT = "F", "L"
UP, RIGHT = "U", "R"


class Box(NamedTuple):
    a: int
    b: int
    c: int


class SizeLimitError(ValueError):
    pass


class MalformedSystemError(ValueError):
    pass


@dataclass(frozen=True)
class LatticePath:
    """``floor`` is read from level ``b`` down to 1, ``wall`` from level 1 up to ``a``."""

    source: int
    floor: str
    wall: str

    def __post_init__(self):
        if set(self.floor) - {FORWARD, LEFT} or set(self.wall) - {UP, RIGHT}:
            raise ValueError(f"bad step letters in {self.floor!r}/{self.wall!r}")

    @property
    def sink(self) -> int:
        return self.source - self.floor.count(LEFT) + self.wall.count(RIGHT)

    @property
    def axis_x(self) -> int:
        """x-coordinate where the path meets the x-axis."""
        return self.source - self.floor.count(LEFT)

    def left_levels(self) -> list[int]:
        b = len(self.floor)
        return [b - s for s, step in enumerate(self.floor) if step == LEFT]

    def right_levels(self) -> list[int]:
        return [s + 1 for s, step in enumerate(self.wall) if step == RIGHT]

    def vertices(self) -> list[tuple[int, int, int]]:
        b = len(self.floor)
        x = self.source
        out = [(x, 0, b)]
        for s, step in enumerate(self.floor):
            if step == LEFT:
                x -= 1
            out.append((x, 0, b - s - 1))
        for s, step in enumerate(self.wall):
            if step == RIGHT:
                x += 1
            out.append((x, s + 1, 0))
        return out

    def monomial(self) -> tuple:
        mono: tuple = ()
        for lv in sorted(self.left_levels()):
            mono = mono_mul(mono, ((Var("z", lv), 1),))
        for lv in self.right_levels():
            mono = mono_mul(mono, ((Var("x", lv), 1),))
        return mono

    def __str__(self) -> str:
        return f"{self.source}->{self.sink}:FLOOR={self.floor};WALL={self.wall}"


_PATH_RE = re.compile(r"(-?\d+)->(-?\d+):FLOOR=([FL]*);WALL=([UR]*)")


def parse_path(text: str) -> LatticePath:
    m = _PATH_RE.fullmatch(text.strip())
    if not m:
        raise ValueError(f"cannot parse path {text!r}")
    path = LatticePath(int(m.group(1)), m.group(3), m.group(4))
    if path.sink != int(m.group(2)):
        raise ValueError(f"path {text!r} does not end at sink {m.group(2)}")
    return path


def path_weight(p: LatticePath) -> MPoly:
    return MPoly({p.monomial(): 1})


@dataclass(frozen=True)
class PathSystem:
    box: Box
    paths: tuple[LatticePath, ...]

    @property
    def twist(self) -> tuple[int, ...]:
        """``sigma`` with ``P_t: A_t -> B_sigma(t)``, 1-indexed."""
        return tuple(p.sink for p in self.paths)

    def sign(self) -> int:
        return perm_sign([s - 1 for s in self.twist])

    def weight(self) -> MPoly:
        mono: tuple = ()
        for p in self.paths:
            mono = mono_mul(mono, p.monomial())
        return MPoly({mono: 1})

    def is_nonintersecting(self) -> bool:
        seen: set = set()
        for p in self.paths:
            vs = p.vertices()
            if seen.intersection(vs):
                return False
            seen.update(vs)
        return True

    def __str__(self) -> str:
        return "\n".join(str(p) for p in self.paths)


@lru_cache(maxsize=None)
def _words(alphabet: str, length: int) -> tuple[str, ...]:
    return tuple("".join(w) for w in product(alphabet, repeat=length))


def paths_between(i: int, j: int, box: Box) -> Iterator[LatticePath]:
    a, b, _ = box
    for floor in _words(FORWARD + LEFT, b):
        lefts = floor.count(LEFT)
        need = j - i + lefts
        if not 0 <= need <= a:
            continue
        for wall in _words(UP + RIGHT, a):
            if wall.count(RIGHT) == need:
                yield LatticePath(i, floor, wall)


def pairwise_enumerator(i: int, j: int, box: Box) -> MPoly:
    """Sum of path weights from ``A_i`` to ``B_j`` by explicit path listing."""
    acc: dict = {}
    for p in paths_between(i, j, box):
        m = p.monomial()
        acc[m] = acc.get(m, 0) + 1
    return MPoly(acc)


def pairwise_formula(i: int, j: int, box: Box) -> MPoly:
    """``sum_k e_k(z_b) e_{j-i+k}(x_a)``."""
    a, b, _ = box
    return poly_sum(
        elementary(k, zs(b)) * elementary(j - i + k, xs(a)) for k in range(b + 1)
    )


def lgv_matrix(box: Box) -> list[list[MPoly]]:
    c = box.c
    return [[pairwise_formula(i, j, box) for j in range(1, c + 1)] for i in range(1, c + 1)]


def lgv_determinant(box: Box) -> MPoly:
    return det(lgv_matrix(Box(*box)))


def enumerate_systems(box: Box) -> Iterator[PathSystem]:
    """Vertex-disjoint systems with ``P_i: A_i -> B_i``, depth first over ``i``.

    Candidate paths and their vertex sets are computed once per source; a
    branch is cut as soon as a path touches an earlier one.
    """
    box = Box(*box)
    a, b, c = box
    candidates = [
        [(p, frozenset(p.vertices())) for p in paths_between(i, i, box)]
        for i in range(1, c + 1)
    ]

    def rec(i: int, used: frozenset, acc: tuple):
        if i == c:
            yield PathSystem(box, acc)
            return
        for p, vs in candidates[i]:
            if used.isdisjoint(vs):
                yield from rec(i + 1, used | vs, acc + (p,))

    yield from rec(0, frozenset(), ())


def nonintersecting_sum(box: Box) -> MPoly:
    acc: dict = {}
    for s in enumerate_systems(box):
        mono: tuple = ()
        for p in s.paths:
            mono = mono_mul(mono, p.monomial())
        acc[mono] = acc.get(mono, 0) + 1
    return MPoly(acc)


def signed_enumerator_bruteforce(box: Box, limit: int = 2) -> MPoly:
    """``sum sgn(sigma) w(P)`` over all systems, intersecting ones included."""
    box = Box(*box)
    if max(box) > limit:
        raise SizeLimitError(f"box {tuple(box)} exceeds the brute-force limit {limit}")
    c = box.c
    acc: dict = {}
    for sigma in permutations(range(1, c + 1)):
        sign = perm_sign([s - 1 for s in sigma])
        choices = [
            [p.monomial() for p in paths_between(i, sigma[i - 1], box)]
            for i in range(1, c + 1)
        ]
        for combo in product(*choices):
            mono: tuple = ()
            for m in combo:
                mono = mono_mul(mono, m)
            acc[mono] = acc.get(mono, 0) + sign
    return MPoly(acc)


def split_at_axis(s: PathSystem) -> tuple[Partition, MPoly, MPoly]:
    """Cut every path where it meets the x-axis.

    Returns ``lam`` whose conjugate is the vector of left-step counts, the
    floor-part weight and the wall-part weight.
    """
    counts = [p.floor.count(LEFT) for p in s.paths]
    lam = conjugate(Partition(counts))
    floor_mono: tuple = ()
    wall_mono: tuple = ()
    for p in s.paths:
        for lv in p.left_levels():
            floor_mono = mono_mul(floor_mono, ((Var("z", lv), 1),))
        for lv in p.right_levels():
            wall_mono = mono_mul(wall_mono, ((Var("x", lv), 1),))
    return lam, MPoly({floor_mono: 1}), MPoly({wall_mono: 1})


def first_left_edge_shape(s: PathSystem) -> Partition:
    """Partition whose conjugate lists, per path, the level of its first left step."""
    firsts = [max(p.left_levels(), default=0) for p in s.paths]
    return conjugate(Partition(firsts))


def system_to_pp(s: PathSystem) -> PlanePartition:
    """Read path ``P_k`` as the level-``k`` slice of a plane partition.

    The left-step levels of ``P_k`` are the Frobenius arms and the right-step
    levels the Frobenius legs of ``{(i, j) : pi_{i,j} >= k}``.
    """
    a, b, c = s.box
    levels = []
    for p in s.paths:
        arms = sorted(p.left_levels(), reverse=True)
        legs = sorted(p.right_levels(), reverse=True)
        if len(arms) != len(legs):
            raise MalformedSystemError(f"path {p} does not return to its own sink")
        levels.append(from_frobenius(arms, legs))
    rows = [[0] * b for _ in range(a)]
    for k, lam in enumerate(levels, start=1):
        if k > 1 and any(
            part > (levels[k - 2][r] if r < len(levels[k - 2]) else 0)
            for r, part in enumerate(lam)
        ):
            raise MalformedSystemError(f"level {k} is not nested in level {k - 1}")
        for r, part in enumerate(lam):
            for col in range(part):
                rows[r][col] = k
    return PlanePartition(s.box, tuple(tuple(r) for r in rows))


def pp_to_system(pi: PlanePartition) -> PathSystem:
    a, b, c = pi.box
    paths = []
    for k in range(1, c + 1):
        arms, legs = to_frobenius(pi.level(k))
        floor = "".join(LEFT if b - s in arms else FORWARD for s in range(b))
        wall = "".join(RIGHT if s + 1 in legs else UP for s in range(a))
        paths.append(LatticePath(k, floor, wall))
    return PathSystem(Box(a, b, c), tuple(paths))


def level_weight_specialized(lam: Sequence[int]) -> tuple[int, int]:
    """``(|lam|, d(lam))``: exponents of ``q`` and ``t`` for one path's weight."""
    return sum(lam), durfee(lam)


def theorem_specialization(v: Var) -> MPoly:
    """``x_i -> q^i``, ``z_i -> t q^(i-1)``."""
    if v.kind == "x":
        return q ** v.index
    if v.kind == "z":
        return t * q ** (v.index - 1)
    raise KeyError(v)


def volume_specialization(v: Var) -> MPoly:
    """``x_i -> q^i``, ``z_j -> q^(j-1)``."""
    if v.kind == "x":
        return q ** v.index
    if v.kind == "z":
        return q ** (v.index - 1)
    raise KeyError(v)

