"""Verification suites behind ``cornerhook verify``.

Each suite yields :class:`CheckResult` records in a fixed order; the report
prints one ``CHECK <name> box=<...> PASS|FAIL [diff=<poly>]`` line per record.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import product
from typing import Callable, Iterator, NamedTuple, Sequence

from . import combcore as cc
from . import genfun as gfn
from . import lgv
from .polyring import ONE, ZERO, MPoly, Q, T, poly_sum, q
from .symfunc import (
    grothendieck_via_corners,
    grothendieck_via_det,
    is_symmetric,
    schur_via_det,
    schur_via_tableaux,
    xs,
    zs,
)


class CheckResult(NamedTuple):
    name: str
    box: tuple[int, ...]
    ok: bool
    diff: MPoly | None = None

    def line(self) -> str:
        box = ",".join(str(v) for v in self.box)
        out = f"CHECK {self.name} box={box} {'PASS' if self.ok else 'FAIL'}"
        if not self.ok and self.diff is not None and not self.diff.is_zero():
            out += f" diff={self.diff}"
        return out


def _equal(name: str, box, lhs: MPoly, rhs: MPoly) -> CheckResult:
    diff = lhs - rhs
    return CheckResult(name, tuple(box), diff.is_zero(), diff)


def _boxes(maxbox: Sequence[int], start: int = 1) -> Iterator[tuple[int, ...]]:
    return product(*(range(start, m + 1) for m in maxbox))


# -- suites ------------------------------------------------------------------


def suite_equi(maxbox=(4, 4, 4)) -> Iterator[CheckResult]:
    for box in _boxes(maxbox, start=0):
        ok, diff = gfn.check_equidistribution(*box)
        yield CheckResult("equidistribution", box, ok, diff)

    pi = cc.PlanePartition.from_rows([[3, 3, 1], [3, 2, 1], [3, 2, 0], [1, 0, 0]], box=(4, 3, 3))
    st = cc.pp_stats(pi)
    expected_corners = {(1, 2, 3), (2, 3, 1), (3, 1, 3), (3, 2, 2), (3, 2, 1), (4, 1, 1)}
    ok = (
        (st.volume, st.trace, st.cor, st.cornerhook) == (19, 5, 6, 21)
        and set(st.corner_set) == expected_corners
        and cc.side_shape(pi) == (3, 3, 1)
    )
    yield CheckResult("worked-example", pi.box, ok)

    a, b, cmax = 2, 2, max(maxbox[2], 5)
    for c in range(1, cmax + 1):
        p = gfn.joint_gf(a, b, c)
        yield _equal("joint-symmetry", (a, b, c), p, p.swap(Q, T))

    found, _, _ = gfn.search_asymmetry((3, 3, 3))
    yield CheckResult("asymmetry-exists", (3, 3, 3), found is not None)


def suite_lgv(maxbox=(3, 3, 3)) -> Iterator[CheckResult]:
    for box in _boxes(maxbox):
        B = lgv.Box(*box)
        a, b, c = box
        ok = all(
            lgv.pairwise_enumerator(i, j, B) == lgv.pairwise_formula(i, j, B)
            for i in range(1, c + 1)
            for j in range(1, c + 1)
        )
        yield CheckResult("pairwise-enumerator", box, ok)

        D = lgv.lgv_determinant(B)
        systems = list(lgv.enumerate_systems(B))
        yield _equal("nonintersecting-sum", box, lgv.nonintersecting_sum(B), D)

        if max(box) <= 2:
            yield _equal("signed-all-systems", box, lgv.signed_enumerator_bruteforce(B), D)

        yield _equal("schur-sum", box, gfn.schur_cauchy_sum(a, b, c), D)
        yield _equal("grothendieck-sum", box, gfn.grothendieck_sum(a, b, c), D)

        by_lam: dict = defaultdict(list)
        by_mu: dict = defaultdict(list)
        for s in systems:
            lam, floor_w, wall_w = lgv.split_at_axis(s)
            by_lam[lam].append(floor_w * wall_w)
            by_mu[lgv.first_left_edge_shape(s)].append(s.weight())
        ok = all(
            poly_sum(ws) == schur_via_det(lam, zs(b)) * schur_via_det(lam, xs(a))
            for lam, ws in by_lam.items()
        )
        yield CheckResult("axis-split-grouping", box, ok)
        ok = all(
            poly_sum(ws) == grothendieck_via_corners(mu, a, b) for mu, ws in by_mu.items()
        )
        yield CheckResult("first-left-edge-grouping", box, ok)

        ok = len(systems) == gfn.macmahon_count(a, b, c)
        for s in systems:
            pi = lgv.system_to_pp(s)
            if lgv.pp_to_system(pi) != s:
                ok = False
                break
            for k, p in enumerate(s.paths, start=1):
                vol, d = lgv.level_weight_specialized(pi.level(k))
                spec = lgv.path_weight(p).substitute(lgv.theorem_specialization)
                if spec != MPoly.from_qt({(vol, d): 1}):
                    ok = False
        yield CheckResult("path-pp-bijection", box, ok)


def suite_schur(maxbox=(3, 3, 4)) -> Iterator[CheckResult]:
    m, n, nv = maxbox
    for count in range(nv + 1):
        ok, diff = True, None
        for lam in cc.enumerate_partitions(m, n):
            det_side = schur_via_det(lam, xs(count))
            tab_side = schur_via_tableaux(lam, xs(count))
            if det_side != tab_side or not is_symmetric(det_side, xs(count)):
                ok, diff = False, det_side - tab_side
                break
        yield CheckResult("schur-det-vs-tableaux", (m, n, count), ok, diff)


def suite_groth(maxbox=(3, 3, 3)) -> Iterator[CheckResult]:
    amax, bmax, cmax = maxbox
    for a, b in product(range(1, amax + 1), range(1, bmax + 1)):
        ok, diff = True, None
        for lam in cc.enumerate_partitions(b, cmax):
            if lam and lam[0] > a:
                continue
            lhs = grothendieck_via_det(lam, a, b)
            rhs = grothendieck_via_corners(lam, a, b)
            if lhs != rhs:
                ok, diff = False, lhs - rhs
                break
        yield CheckResult("grothendieck-det-vs-corners", (a, b, cmax), ok, diff)


def suite_macmahon(maxbox=(4, 4, 4)) -> Iterator[CheckResult]:
    for box in _boxes(maxbox):
        vt = gfn.gf_volume_trace(*box).poly
        at_t1 = vt.substitute({Q: q, T: ONE})
        ok = at_t1 == gfn.macmahon_product(*box) and vt.evaluate({Q: 1, T: 1}) == gfn.macmahon_count(*box)
        yield CheckResult("macmahon-product", box, ok, at_t1 - gfn.macmahon_product(*box))


def suite_stanley(maxbox=(3, 3, 6)) -> Iterator[CheckResult]:
    amax, bmax, n = maxbox
    for a, b in product(range(1, amax + 1), range(1, bmax + 1)):
        lhs, rhs = gfn.stanley_truncated(a, b, n)
        yield _equal("stanley-truncated", (a, b, n), lhs, rhs)


def suite_fixed_trace(maxbox=(3, 3, 3)) -> Iterator[CheckResult]:
    for box in _boxes(maxbox):
        a, b, c = box
        ok = True
        total = ZERO
        for lam in cc.enumerate_partitions(min(a, b), c):
            lhs, rhs = gfn.fixed_trace_sides(lam, a, b, c)
            ok = ok and lhs == rhs
            total = total + rhs
        yield CheckResult("fixed-trace", box, ok)
        yield _equal("fixed-trace-total", box, total, gfn.gf_volume_trace(a, b, c).poly)
        yield CheckResult("volume-via-det", box, gfn.volume_via_det_check(a, b, c))


def suite_partition_equi(maxbox=(8, 8, 12)) -> Iterator[CheckResult]:
    mmax, nmax, pmax = maxbox
    for m, n in product(range(0, mmax + 1), range(0, nmax + 1)):
        lhs = gfn.partition_gf_area_durfee(m, n)
        rhs = gfn.partition_gf_cohook_corners(m, n)
        yield _equal("partition-equidistribution", (m, n), lhs, rhs)

    box = list(cc.enumerate_partitions(mmax, nmax))
    images = set()
    ok = True
    for lam in box:
        mu = cc.phi(lam)
        images.add(mu)
        ok = ok and (
            cc.cohook_area(mu) == sum(lam)
            and cc.corner_count(mu) == cc.durfee(lam)
            and len(mu) <= mmax
            and (not mu or mu[0] <= nmax)
            and cc.phi_inverse(mu) == lam
        )
    yield CheckResult("phi-bijection", (mmax, nmax), ok and len(images) == len(box))

    lam = (6, 5, 3, 3)
    mu = cc.phi(lam)
    ok = (
        cc.to_frobenius(lam) == ((6, 4, 1), (4, 3, 2))
        and mu == (6, 6, 4, 1)
        and set(cc.corners(mu)) == {(4, 1), (3, 4), (2, 6)}
        and cc.cohook_area(lam) == 18
        and cc.phi_inverse(mu) == lam
    )
    yield CheckResult("phi-example", (6, 4), ok)

    p_table, q_table = gfn.pq_counts(pmax)
    yield CheckResult("p-equals-q", (pmax,), p_table == q_table)


def suite_triangle(maxbox=(3, 3, 3)) -> Iterator[CheckResult]:
    for box in _boxes(maxbox):
        a, b, c = box
        s_sum, g_sum, cauchy = gfn.triangle_sides(a, b, c)
        yield _equal("schur-vs-grothendieck", box, s_sum, g_sum)
        yield _equal("cauchy-truncated", box, s_sum.truncate_degree(2 * c), cauchy)


SUITES: dict[str, tuple[Callable[..., Iterator[CheckResult]], tuple[int, ...]]] = {
    "equi": (suite_equi, (4, 4, 4)),
    "lgv": (suite_lgv, (3, 3, 3)),
    "schur": (suite_schur, (3, 3, 4)),
    "groth": (suite_groth, (3, 3, 3)),
    "macmahon": (suite_macmahon, (4, 4, 4)),
    "stanley": (suite_stanley, (3, 3, 6)),
    "fixed-trace": (suite_fixed_trace, (3, 3, 3)),
    "partition-equi": (suite_partition_equi, (8, 8, 12)),
    "triangle": (suite_triangle, (3, 3, 3)),
}


def resolve_max(suite: str, override: Sequence[int] | None) -> tuple[int, ...]:
    """Merge a user ``--max`` into a suite default, position by position."""
    default = SUITES[suite][1]
    if not override:
        return default
    override = tuple(override)
    return override[: len(default)] + default[len(override):]


def run(suite: str, maxbox: Sequence[int] | None = None) -> Iterator[CheckResult]:
    names = list(SUITES) if suite == "all" else [suite]
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
        fn, _ = SUITES[name]
        yield from fn(resolve_max(name, maxbox))
