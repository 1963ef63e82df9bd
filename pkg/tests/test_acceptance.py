"""Acceptance criteria, one test each.

Every test prints an ``ACCEPTANCE <n> <name>: PASS|FAIL`` line straight to the
terminal (capture is bypassed), then asserts.
"""

import subprocess
import sys
from fractions import Fraction
from itertools import product

import pytest

from cornerhook import combcore as cc
from cornerhook import genfun as gfn
from cornerhook import lgv
from cornerhook.polyring import ONE, ZERO, MPoly, Q, T, q
from cornerhook.symfunc import (
    grothendieck_via_corners,
    grothendieck_via_det,
    schur_via_det,
    schur_via_tableaux,
    xs,
)


@pytest.fixture
def report(capsys):
    def _report(n, name, ok):
        with capsys.disabled():
            print(f"\nACCEPTANCE {n:>2} {name}: {'PASS' if ok else 'FAIL'}")
        assert ok

    return _report


def product_count(a, b, c):
    r = Fraction(1)
    for i, j, k in product(range(1, a + 1), range(1, b + 1), range(1, c + 1)):
        r *= Fraction(i + j + k - 1, i + j + k - 2)
    return r


def boxes(top, start=1):
    return list(product(range(start, top + 1), repeat=3))


def test_01_equidistribution(report):
    ok = all(gfn.check_equidistribution(*box)[0] for box in boxes(4, start=0))
    largest = gfn.gf_volume_trace(4, 4, 4).poly.evaluate({Q: 1, T: 1})
    ok = ok and largest == product_count(4, 4, 4) == 232848
    report(1, "volume/trace equals corner-hook/corners for a,b,c <= 4", ok)


def test_02_worked_example(report):
    pi = cc.PlanePartition.from_rows([[3, 3, 1], [3, 2, 1], [3, 2, 0], [1, 0, 0]])
    st = cc.pp_stats(pi)
    corners = {(1, 2, 3), (2, 3, 1), (3, 1, 3), (3, 2, 2), (3, 2, 1), (4, 1, 1)}
    ok = (st.volume, st.trace, st.cor, st.cornerhook) == (19, 5, 6, 21)
    ok = ok and len(st.corner_set) == 6 and set(st.corner_set) == corners
    report(2, "worked example statistics and corners", ok)


def test_03_schur(report):
    ok = all(
        schur_via_det(lam, xs(n)) == schur_via_tableaux(lam, xs(n))
        for n in range(0, 5)
        for lam in cc.enumerate_partitions(3, 3)
    )
    report(3, "Schur determinant equals filling sum", ok)


def test_04_grothendieck(report):
    ok = True
    for a, b in product(range(1, 4), repeat=2):
        for lam in cc.enumerate_partitions(b, 3):
            if lam and lam[0] > a:
                continue
            ok = ok and grothendieck_via_det(lam, a, b) == grothendieck_via_corners(lam, a, b)
    report(4, "Grothendieck determinant equals corner sum", ok)


def test_05_pairwise_paths(report):
    ok = all(
        lgv.pairwise_enumerator(i, j, lgv.Box(*box)) == lgv.pairwise_formula(i, j, lgv.Box(*box))
        for box in boxes(3)
        for i in range(1, box[2] + 1)
        for j in range(1, box[2] + 1)
    )
    report(5, "single-path sums equal the elementary-sum formula", ok)


def test_06_lgv(report):
    ok = all(
        lgv.nonintersecting_sum(lgv.Box(*box)) == lgv.lgv_determinant(lgv.Box(*box))
        for box in boxes(3)
    )
    ok = ok and all(
        lgv.signed_enumerator_bruteforce(lgv.Box(*box)) == lgv.lgv_determinant(lgv.Box(*box))
        for box in boxes(2)
    )
    report(6, "nonintersecting and signed path sums equal the determinant", ok)


def test_07_schur_grothendieck_sums(report):
    ok = True
    for box in boxes(3):
        D = lgv.lgv_determinant(lgv.Box(*box))
        ok = ok and gfn.schur_cauchy_sum(*box) == D == gfn.grothendieck_sum(*box)
    report(7, "Schur sum and Grothendieck sum equal the determinant", ok)


def test_08_bijection(report):
    ok = True
    for box in boxes(3):
        pps = list(cc.enumerate_pp(*box))
        ok = ok and len(pps) == product_count(*box)
        for pi in pps:
            s = lgv.pp_to_system(pi)
            ok = ok and s.is_nonintersecting() and lgv.system_to_pp(s) == pi
            for k, path in enumerate(s.paths, start=1):
                lam = pi.level(k)
                w = lgv.path_weight(path).substitute(lgv.theorem_specialization)
                ok = ok and w == MPoly.from_qt({(sum(lam), cc.durfee(lam)): 1})
    report(8, "paths to plane partitions round trip with the weight law", ok)


def test_09_fixed_trace(report):
    ok = True
    for a, b, c in boxes(3):
        total = ZERO
        for lam in cc.enumerate_partitions(min(a, b), c):
            lhs, rhs = gfn.fixed_trace_sides(lam, a, b, c)
            ok = ok and lhs == rhs
            total = total + rhs
        ok = ok and total == gfn.gf_volume_trace(a, b, c).poly
    report(9, "fixed trace vector identity and its sum", ok)


def test_10_volume_determinant(report):
    ok = True
    for box in boxes(3):
        vol = gfn.volume_via_det(*box)
        ok = ok and vol == gfn.gf_volume_trace(*box).poly.substitute({Q: q, T: ONE})
        ok = ok and vol.evaluate({Q: 1}) == product_count(*box)
    ok = ok and gfn.volume_via_det(2, 2, 2).evaluate({Q: 1}) == 20
    report(10, "specialized determinant is the volume generating function", ok)


def test_11_product_formulas(report):
    ok = all(
        gfn.macmahon_product(*box) == gfn.gf_volume_trace(*box).poly.substitute({Q: q, T: ONE})
        for box in boxes(4)
    )
    for a, b in product(range(1, 4), repeat=2):
        lhs, rhs = gfn.stanley_truncated(a, b, 6)
        ok = ok and lhs == rhs
    report(11, "box product and truncated trace product", ok)


def test_12_joint_symmetry(report):
    ok = all(gfn.symmetry_check(2, 2, c) for c in range(1, 6))
    found, witness, _ = gfn.search_asymmetry((3, 3, 3))
    ok = ok and found is not None and witness[1] != witness[2]
    report(12, "joint symmetry on 2x2 boxes and an asymmetric box exists", ok)


def test_13_partitions(report):
    p_table, q_table = gfn.pq_counts(12)
    ok = p_table == q_table and sum(v for (n, _), v in p_table.items() if n == 12) == 77
    ok = ok and all(gfn.partition_equidistribution(m, n) for m, n in product(range(9), repeat=2))
    lams = list(cc.enumerate_partitions(8, 8))
    images = set()
    for lam in lams:
        mu = cc.phi(lam)
        images.add(mu)
        ok = ok and (
            cc.cohook_area(mu) == sum(lam)
            and cc.corner_count(mu) == cc.durfee(lam)
            and len(mu) <= 8
            and (not mu or mu[0] <= 8)
            and cc.phi_inverse(mu) == lam
        )
    ok = ok and len(images) == len(lams)
    lam = (6, 5, 3, 3)
    ok = ok and cc.to_frobenius(lam) == ((6, 4, 1), (4, 3, 2))
    ok = ok and cc.phi(lam) == (6, 6, 4, 1)
    ok = ok and set(cc.corners(cc.phi(lam))) == {(4, 1), (3, 4), (2, 6)}
    report(13, "area/Durfee versus cohook/corners and the bijection", ok)


def test_14_determinism(report):
    cmd = [sys.executable, "-m", "cornerhook", "verify", "--suite", "all"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    ok = first.returncode == 0 and first.stdout and first.stdout == second.stdout
    ok = ok and b"FAIL" not in first.stdout
    report(14, "verify --suite all is byte-identical across runs", bool(ok))
