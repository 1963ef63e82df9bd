"""Generating functions over boxed plane partitions and partitions.

Every identity is exposed as a function returning a polynomial (or a pair
of polynomials) plus a ``*_check`` wrapper returning a boolean.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from . import combcore as cc
from .lgv import Box, lgv_determinant, theorem_specialization, volume_specialization
from .polyring import ONE, Q, T, MPoly, poly_sum, q, x, z
from .symfunc import grothendieck_via_corners, schur_via_det, xs, zs


class InexactDivisionError(ArithmeticError):
    pass


@dataclass(frozen=True)
class GFTable:
    label: str
    box: tuple[int, ...]
    poly: MPoly

    def __str__(self) -> str:
        return str(self.poly)


def _pp_counter(a: int, b: int, c: int, which: str) -> Counter:
    counts: Counter = Counter()
    stats = cc.fast_stats
    for rows in cc.enumerate_pp_rows(a, b, c):
        vol, tr, ch, cor = stats(rows)
        if which == "volume-trace":
            counts[(vol, tr)] += 1
        elif which == "cornerhook-corners":
            counts[(ch, cor)] += 1
        elif which == "joint":
            counts[(vol, ch)] += 1
        else:
            raise ValueError(f"unknown statistic pair {which!r}")
    return counts


PAIRS = ("volume-trace", "cornerhook-corners", "joint")


def gf(a: int, b: int, c: int, pair: str) -> GFTable:
    if pair not in PAIRS:
        raise ValueError(f"unknown statistic pair {pair!r}; choose from {', '.join(PAIRS)}")
    return GFTable(pair, (a, b, c), MPoly.from_qt(_pp_counter(a, b, c, pair)))


def gf_volume_trace(a: int, b: int, c: int) -> GFTable:
    """``sum q^|pi| t^tr(pi)`` over ``PP(a, b, c)``."""
    return gf(a, b, c, "volume-trace")


def gf_cornerhook_corners(a: int, b: int, c: int) -> GFTable:
    """``sum q^|pi|_ch t^cor(pi)`` over ``PP(a, b, c)``."""
    return gf(a, b, c, "cornerhook-corners")


def joint_gf(a: int, b: int, c: int) -> MPoly:
    """``sum q^|pi| t^|pi|_ch`` over ``PP(a, b, c)``."""
    return gf(a, b, c, "joint").poly


def check_equidistribution(a: int, b: int, c: int) -> tuple[bool, MPoly]:
    diff = gf_volume_trace(a, b, c).poly - gf_cornerhook_corners(a, b, c).poly
    return diff.is_zero(), diff


# -- product formulas ---------------------------------------------------------


def _one_minus_q_power(h: int) -> list[int]:
    coeffs = [0] * (h + 1)
    coeffs[0] += 1
    coeffs[h] -= 1
    return coeffs


def _series_mul(p: list[int], r: list[int]) -> list[int]:
    out = [0] * (len(p) + len(r) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(r):
                out[i + j] += a * b
    return out


def _exact_divide(num: list[int], den: list[int]) -> list[int]:
    """Divide univariate integer polynomials (constant term of ``den`` is 1)."""
    if den[0] != 1:
        raise InexactDivisionError("denominator must have constant term 1")
    num = list(num)
    qlen = len(num) - len(den) + 1
    if qlen <= 0:
        raise InexactDivisionError("denominator degree exceeds numerator degree")
    quot = [0] * qlen
    for i in range(qlen):
        coef = num[i]
        quot[i] = coef
        if coef:
            for j, d in enumerate(den):
                num[i + j] -= coef * d
    if any(num):
        raise InexactDivisionError("nonzero remainder")
    return quot


def _box_hooks(a: int, b: int, c: int) -> tuple[list[int], list[int]]:
    # the k-product telescopes: prod_k (1-q^{i+j+k-1})/(1-q^{i+j+k-2})
    # = (1-q^{i+j+c-1}) / (1-q^{i+j-1}), which removes the 1 - q^0 factor
    nums = [i + j + c - 1 for i in range(1, a + 1) for j in range(1, b + 1)]
    dens = [i + j - 1 for i in range(1, a + 1) for j in range(1, b + 1)]
    return nums, dens


def macmahon_product(a: int, b: int, c: int) -> MPoly:
    """``prod (1-q^{i+j+k-1}) / (1-q^{i+j+k-2})`` over the box, as a polynomial."""
    if min(a, b, c) <= 0:
        return ONE
    nums, dens = _box_hooks(a, b, c)
    num = [1]
    for h in nums:
        num = _series_mul(num, _one_minus_q_power(h))
    den = [1]
    for h in dens:
        den = _series_mul(den, _one_minus_q_power(h))
    coeffs = _exact_divide(num, den)
    return MPoly.from_qt({(i, 0): cf for i, cf in enumerate(coeffs)})


def macmahon_count(a: int, b: int, c: int) -> int:
    """``|PP(a, b, c)|``: the box product at ``q = 1``, as a ratio of integers."""
    if min(a, b, c) <= 0:
        return 1
    nums, dens = _box_hooks(a, b, c)
    top = 1
    for h in nums:
        top *= h
    bottom = 1
    for h in dens:
        bottom *= h
    count, rem = divmod(top, bottom)
    if rem:
        raise InexactDivisionError(f"box count for {(a, b, c)} is not an integer")
    return count


def stanley_product_truncated(a: int, b: int, n: int) -> MPoly:
    """``prod_{i<=a, j<=b} (1 - t q^{i+j-1})^{-1}`` up to ``q``-degree ``n``."""
    result = ONE
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            h = i + j - 1
            series = MPoly.from_qt({(h * m, m): 1 for m in range(n // h + 1)})
            result = (result * series).truncate(Q, n)
    return result


def stanley_truncated(a: int, b: int, n: int) -> tuple[MPoly, MPoly]:
    """Enumeration side and product side, both cut at ``q``-degree ``n``.

    Heights above ``n`` would already force volume above ``n``, so
    ``PP(a, b, n)`` carries every term of ``PP(a, b, infinity)`` up to degree ``n``.
    """
    lhs = gf_volume_trace(a, b, n).poly.truncate(Q, n)
    return lhs, stanley_product_truncated(a, b, n)


# -- corollaries ---------------------------------------------------------------


def fixed_trace_sides(lam: Sequence[int], a: int, b: int, c: int) -> tuple[MPoly, MPoly]:
    """``s_lam(q..q^a) s_lam(t, tq, .., tq^{b-1})`` and the trace-vector-restricted sum."""
    lam = cc.Partition(lam)
    lhs = schur_via_det(lam, xs(a)).substitute(theorem_specialization) * schur_via_det(
        lam, zs(b)
    ).substitute(theorem_specialization)
    counts: Counter = Counter()
    for rows in cc.enumerate_pp_rows(a, b, c):
        diag = tuple(rows[i][i] for i in range(min(a, b)) if rows[i][i])
        if diag == tuple(lam):
            vol, tr, _, _ = cc.fast_stats(rows)
            counts[(vol, tr)] += 1
    return lhs, MPoly.from_qt(counts)


def fixed_trace_check(lam: Sequence[int], a: int, b: int, c: int) -> bool:
    lhs, rhs = fixed_trace_sides(lam, a, b, c)
    return lhs == rhs


def volume_via_det(a: int, b: int, c: int) -> MPoly:
    return lgv_determinant(Box(a, b, c)).substitute(volume_specialization)


def volume_via_det_check(a: int, b: int, c: int) -> bool:
    vt = gf_volume_trace(a, b, c).poly.substitute({Q: q, T: ONE})
    return volume_via_det(a, b, c) == vt


def symmetry_check(a: int, b: int, c: int) -> bool:
    p = joint_gf(a, b, c)
    return p.swap(Q, T) == p


def asymmetry_witness(p: MPoly) -> tuple[tuple[int, int], int, int] | None:
    """First ``(m, n)`` with ``[q^m t^n] != [q^n t^m]``, with both coefficients."""
    table = p.qt_table()
    for (m, n) in sorted(table):
        if table[(m, n)] != table.get((n, m), 0):
            return (m, n), table[(m, n)], table.get((n, m), 0)
    return None


def boxes_upto(maxbox: Sequence[int], start: int = 1) -> Iterator[tuple[int, int, int]]:
    """Boxes inside ``maxbox`` ordered by ``a + b + c``, then lexicographically."""
    ranges = [range(start, m + 1) for m in maxbox]
    yield from sorted(product(*ranges), key=lambda bx: (sum(bx), bx))


def search_asymmetry(maxbox: Sequence[int]):
    """First box whose joint (volume, corner-hook) distribution is not q<->t symmetric.

    Returns ``(box, witness, checked)`` where ``checked`` lists the symmetric
    boxes scanned before it; ``box`` and ``witness`` are ``None`` when every
    box is symmetric.
    """
    checked = []
    for box in boxes_upto(maxbox):
        w = asymmetry_witness(joint_gf(*box))
        if w is not None:
            return box, w, checked
        checked.append(box)
    return None, None, checked


# -- ordinary partitions ----------------------------------------------------------


def partition_gf_area_durfee(m: int, n: int) -> MPoly:
    counts = Counter((sum(lam), cc.durfee(lam)) for lam in cc.enumerate_partitions(m, n))
    return MPoly.from_qt(counts)


def partition_gf_cohook_corners(m: int, n: int) -> MPoly:
    counts = Counter(
        (cc.cohook_area(lam), cc.corner_count(lam)) for lam in cc.enumerate_partitions(m, n)
    )
    return MPoly.from_qt(counts)


def partition_equidistribution(m: int, n: int) -> bool:
    return partition_gf_area_durfee(m, n) == partition_gf_cohook_corners(m, n)


def pq_counts(nmax: int) -> tuple[dict, dict]:
    """``p(n, k)`` by (area, Durfee side) and ``q(n, k)`` by (cohook area, corners), ``n <= nmax``.

    Only partitions with the relevant statistic at most ``nmax`` are generated:
    by size for ``p`` and by corner sets with bounded cohook sum for ``q``.
    """
    p_table: Counter = Counter()
    for lam in cc.partitions_up_to(nmax):
        p_table[(sum(lam), cc.durfee(lam))] += 1
    q_table: Counter = Counter()
    for lam in cc.partitions_by_cohook_area(nmax):
        q_table[(cc.cohook_area(lam), cc.corner_count(lam))] += 1
    return dict(p_table), dict(q_table)


# -- Schur / Grothendieck sums -------------------------------------------------


def schur_cauchy_sum(a: int, b: int, c: int) -> MPoly:
    """``sum s_lam(x_a) s_lam(z_b)`` over ``lam`` in the ``min(a, b) x c`` box."""
    return poly_sum(
        schur_via_det(lam, xs(a)) * schur_via_det(lam, zs(b))
        for lam in cc.enumerate_partitions(min(a, b), c)
    )


def grothendieck_sum(a: int, b: int, c: int) -> MPoly:
    """``sum g_mu(x_a; z_b)`` over ``mu`` in the ``b x c`` box."""
    return poly_sum(grothendieck_via_corners(mu, a, b) for mu in cc.enumerate_partitions(b, c))


def cauchy_product_truncated(a: int, b: int, degree: int) -> MPoly:
    """``prod 1/(1 - x_i z_j)`` keeping total degree at most ``degree``."""
    result = ONE
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            xz = x(i) * z(j)
            series = poly_sum(xz ** m for m in range(degree // 2 + 1))
            result = (result * series).truncate_degree(degree)
    return result


def triangle_sides(a: int, b: int, c: int) -> tuple[MPoly, MPoly, MPoly]:
    """Schur sum, Grothendieck sum, and Cauchy product cut at total degree ``2c``.

    The first two are returned untruncated; compare the third against either
    one cut at the same degree.
    """
    return schur_cauchy_sum(a, b, c), grothendieck_sum(a, b, c), cauchy_product_truncated(a, b, 2 * c)


def triangle_check(a: int, b: int, c: int) -> bool:
    s_sum, g_sum, cauchy = triangle_sides(a, b, c)
    return s_sum == g_sum and s_sum.truncate_degree(2 * c) == cauchy

