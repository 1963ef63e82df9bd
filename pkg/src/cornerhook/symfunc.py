"""Elementary, Schur and refined dual stable Grothendieck polynomials.

Schur and Grothendieck polynomials are each available two independent ways:
a combinatorial sum over fillings / plane partitions, and a determinant in
elementary symmetric polynomials.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import NamedTuple, Sequence

from .combcore import Partition, conjugate, corner_cells, enumerate_pp_with_first_row
from .polyring import ONE, ZERO, MPoly, Var, det, mono_mul, poly_sum


class VarSet(NamedTuple):
    kind: str  # "x" or "z"
    count: int

    def var(self, i: int) -> Var:
        return Var(self.kind, i)


def xs(n: int) -> VarSet:
    return VarSet("x", n)


def zs(n: int) -> VarSet:
    return VarSet("z", n)


class HypothesisError(ValueError):
    """A determinant formula was called outside the range where it holds."""


@lru_cache(maxsize=None)
def elementary(k: int, vars: VarSet) -> MPoly:
    if k < 0 or k > vars.count:
        return ZERO
    if k == 0:
        return ONE
    terms = {}
    for subset in combinations(range(1, vars.count + 1), k):
        terms[tuple((vars.var(i), 1) for i in subset)] = 1
    return MPoly(terms)


def schur_via_det(lam: Sequence[int], vars: VarSet) -> MPoly:
    """``det(e_{lam'_i - i + j})`` over ``i, j <= lam_1``."""
    lam = Partition(lam)
    if len(lam) > vars.count:
        return ZERO
    conj = conjugate(lam)
    n = len(conj)
    return det([[elementary(conj[i] - i + j, vars) for j in range(n)] for i in range(n)])


def schur_via_tableaux(lam: Sequence[int], vars: VarSet) -> MPoly:
    """Sum over fillings of ``lam`` by ``1..n``, rows weakly and columns strictly decreasing."""
    lam = Partition(lam)
    n = vars.count
    cells = list(lam.cells())
    filling: dict[tuple[int, int], int] = {}
    acc: dict = {}

    def rec(pos: int, mono: tuple):
        if pos == len(cells):
            acc[mono] = acc.get(mono, 0) + 1
            return
        i, j = cells[pos]
        hi = n
        if j > 1:
            hi = min(hi, filling[(i, j - 1)])
        if i > 1:
            hi = min(hi, filling[(i - 1, j)] - 1)
        for v in range(hi, 0, -1):
            filling[(i, j)] = v
            rec(pos + 1, mono_mul(mono, ((vars.var(v), 1),)))
        filling.pop((i, j), None)

    rec(0, ())
    return MPoly(acc)


def corner_weight(pi) -> tuple:
    """Monomial ``prod x_i z_j`` over the corners ``(i, j, k)`` of ``pi``."""
    mono: tuple = ()
    for i, j, _ in corner_cells(pi):
        mono = mono_mul(mono, ((Var("x", i), 1), (Var("z", j), 1)))
    return mono


def grothendieck_via_corners(lam: Sequence[int], a: int, b: int) -> MPoly:
    """``g_lam(x_1..x_a; z_1..z_b)`` as a sum over plane partitions with first row ``lam``.

    Each plane partition has at most ``a`` rows and contributes the product of
    ``x_row * z_col`` over its corners.
    """
    acc: dict = {}
    for pi in enumerate_pp_with_first_row(lam, a, b):
        m = corner_weight(pi)
        acc[m] = acc.get(m, 0) + 1
    return MPoly(acc)


def grothendieck_entry(colheight: int, shift: int, a: int) -> MPoly:
    """``z_h * sum_k e_{shift+k}(x_a) e_k(z_{h-1})`` for column height ``h``."""
    zset = zs(colheight - 1)
    total = poly_sum(
        elementary(shift + k, xs(a)) * elementary(k, zset)
        for k in range(0, colheight)
        if 0 <= shift + k <= a
    )
    return MPoly.var(Var("z", colheight)) * total


def grothendieck_via_det(
    lam: Sequence[int], a: int, b: int, check_hypothesis: bool = True
) -> MPoly:
    """Determinant formula for ``g_lam(x_a; z_b)``, proven for ``lam_1 <= a``.

    Row ``i`` collects paths whose first floor step to the left happens at
    level ``lam'_i``; from there the path has one unit of horizontal shift
    already spent, hence the ``j - i + 1`` index.  Pass
    ``check_hypothesis=False`` to evaluate it when ``lam_1 > a``.
    """
    lam = Partition(lam)
    if check_hypothesis and lam and lam[0] > a:
        raise HypothesisError(f"largest part {lam[0]} exceeds the x-variable count {a}")
    if len(lam) > b:
        raise HypothesisError(f"{tuple(lam)} has more than {b} parts")
    conj = conjugate(lam)
    n = len(conj)
    return det([
        [grothendieck_entry(conj[i], j - i + 1, a) for j in range(n)]
        for i in range(n)
    ])


def is_symmetric(p: MPoly, vars: VarSet) -> bool:
    return all(
        p.swap(vars.var(i), vars.var(i + 1)) == p for i in range(1, vars.count)
    )
