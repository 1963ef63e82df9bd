from collections import defaultdict
from itertools import product

import pytest

from cornerhook import combcore as cc
from cornerhook import lgv
from cornerhook.genfun import macmahon_count
from cornerhook.polyring import ONE, ZERO, poly_sum, q, t, x, z
from cornerhook.symfunc import elementary, grothendieck_via_corners, schur_via_det, xs, zs

FIG3 = lgv.PathSystem(
    lgv.Box(4, 3, 4),
    (
        lgv.LatticePath(1, "LLF", "UURR"),
        lgv.LatticePath(2, "LFL", "RURU"),
        lgv.LatticePath(3, "FLF", "UURU"),
        lgv.LatticePath(4, "FFF", "UUUU"),
    ),
)

SMALL = [lgv.Box(*bx) for bx in product(range(1, 4), repeat=3)]


def e_sum(i, j, a, b):
    return poly_sum(elementary(k, zs(b)) * elementary(j - i + k, xs(a)) for k in range(b + 1))


def test_fig3_weights():
    weights = [lgv.path_weight(p) for p in FIG3.paths]
    assert weights == [z(3) * z(2) * x(3) * x(4), z(3) * z(1) * x(1) * x(3), z(2) * x(3), ONE]
    assert all(p.sink == p.source for p in FIG3.paths)
    assert FIG3.is_nonintersecting()
    assert lgv.path_weight(lgv.LatticePath(1, "FF", "UUU")) == ONE


def test_fig3_is_enumerated():
    assert FIG3 in set(lgv.enumerate_systems(FIG3.box))


def test_path_serialization():
    p = FIG3.paths[0]
    assert str(p) == "1->1:FLOOR=LLF;WALL=UURR"
    assert lgv.parse_path(str(p)) == p
    assert str(lgv.LatticePath(2, "FLFL", "URRU")) == "2->2:FLOOR=FLFL;WALL=URRU"
    with pytest.raises(ValueError):
        lgv.parse_path("1->2:FLOOR=F;WALL=U")


def test_vertices_and_step_identity():
    p = FIG3.paths[0]
    assert p.vertices()[0] == (1, 0, 3)
    assert p.vertices()[-1] == (1, 4, 0)
    assert p.axis_x == -1
    for box in SMALL:
        for i, j in product(range(1, box.c + 1), repeat=2):
            for path in lgv.paths_between(i, j, box):
                assert path.floor.count("L") - path.wall.count("R") == i - j
                assert path.vertices()[-1] == (j, box.a, 0)


def test_pairwise_degenerate():
    box = lgv.Box(0, 0, 3)
    assert lgv.pairwise_enumerator(2, 2, box) == ONE
    assert lgv.pairwise_enumerator(1, 2, box) == ZERO
    assert lgv.pairwise_formula(2, 2, box) == ONE


def test_pairwise_vanishes_when_shift_exceeds_a():
    box = lgv.Box(2, 3, 5)
    assert lgv.pairwise_enumerator(1, 4, box) == ZERO
    assert lgv.pairwise_formula(1, 4, box) == ZERO
    assert lgv.pairwise_enumerator(1, 3, box) != ZERO


@pytest.mark.parametrize("box", SMALL)
def test_pairwise_matches_e_sum(box):
    for i, j in product(range(1, box.c + 1), repeat=2):
        assert lgv.pairwise_enumerator(i, j, box) == e_sum(i, j, box.a, box.b)


def test_lgv_determinant_small():
    assert lgv.lgv_determinant(lgv.Box(2, 2, 0)) == ONE
    box = lgv.Box(2, 3, 1)
    assert lgv.lgv_determinant(box) == lgv.pairwise_enumerator(1, 1, box)


@pytest.mark.parametrize("box", SMALL)
def test_nonintersecting_sum_is_determinant(box):
    assert lgv.nonintersecting_sum(box) == lgv.lgv_determinant(box)


def test_degenerate_systems():
    systems = list(lgv.enumerate_systems(lgv.Box(0, 0, 3)))
    assert len(systems) == 1
    assert systems[0].weight() == ONE
    assert len(list(lgv.enumerate_systems(lgv.Box(2, 2, 0)))) == 1


@pytest.mark.parametrize("box", [lgv.Box(*bx) for bx in product(range(1, 3), repeat=3)])
def test_signed_bruteforce(box):
    signed = lgv.signed_enumerator_bruteforce(box)
    assert signed == lgv.lgv_determinant(box)
    assert signed - lgv.nonintersecting_sum(box) == ZERO


def test_signed_bruteforce_c1_and_limit():
    box = lgv.Box(2, 2, 1)
    assert lgv.signed_enumerator_bruteforce(box) == lgv.pairwise_enumerator(1, 1, box)
    with pytest.raises(lgv.SizeLimitError):
        lgv.signed_enumerator_bruteforce(lgv.Box(3, 2, 2))


def test_nonintersecting_twist_is_identity():
    for s in lgv.enumerate_systems(lgv.Box(2, 2, 3)):
        assert s.twist == (1, 2, 3)
        assert s.sign() == 1


def test_split_at_axis():
    trivial = lgv.PathSystem(lgv.Box(2, 2, 2), (lgv.LatticePath(1, "FF", "UU"), lgv.LatticePath(2, "FF", "UU")))
    assert lgv.split_at_axis(trivial)[0] == ()
    lam, floor_w, wall_w = lgv.split_at_axis(FIG3)
    assert lam == (3, 2)
    assert cc.conjugate(lam) == (2, 2, 1)
    assert floor_w * wall_w == FIG3.weight()
    assert floor_w == z(3) ** 2 * z(2) ** 2 * z(1)


def test_first_left_edge_shape():
    trivial = lgv.PathSystem(lgv.Box(1, 1, 1), (lgv.LatticePath(1, "F", "U"),))
    assert lgv.first_left_edge_shape(trivial) == ()
    mu = lgv.first_left_edge_shape(FIG3)
    assert cc.conjugate(mu) == (3, 3, 2)


@pytest.mark.parametrize("box", [lgv.Box(*bx) for bx in product(range(1, 3), repeat=3)])
def test_groupings(box):
    by_lam, by_mu = defaultdict(list), defaultdict(list)
    for s in lgv.enumerate_systems(box):
        lam, fw, ww = lgv.split_at_axis(s)
        assert len(lam) <= min(box.a, box.b) and (not lam or lam[0] <= box.c)
        by_lam[lam].append(fw * ww)
        by_mu[lgv.first_left_edge_shape(s)].append(s.weight())
    for lam, ws in by_lam.items():
        assert poly_sum(ws) == schur_via_det(lam, zs(box.b)) * schur_via_det(lam, xs(box.a))
    for mu, ws in by_mu.items():
        assert len(mu) <= box.b
        assert poly_sum(ws) == grothendieck_via_corners(mu, box.a, box.b)


def test_system_to_pp_trivial_and_fig3():
    trivial = lgv.PathSystem(lgv.Box(2, 2, 2), (lgv.LatticePath(1, "FF", "UU"), lgv.LatticePath(2, "FF", "UU")))
    assert lgv.system_to_pp(trivial).rows == ((0, 0), (0, 0))
    pi = lgv.system_to_pp(FIG3)
    assert pi.box == (4, 3, 4)
    assert pi.level(1) == (3, 3, 2, 2)
    assert lgv.pp_to_system(pi) == FIG3


def _spec(v):
    return q ** v.index if v.kind == "x" else t * q ** (v.index - 1)


def test_fig3_specialized_weight():
    w = lgv.path_weight(FIG3.paths[0]).substitute(_spec)
    assert w == t**2 * q**10
    lam = lgv.system_to_pp(FIG3).level(1)
    assert (sum(lam), cc.durfee(lam)) == (10, 2)


@pytest.mark.parametrize("box", SMALL + [lgv.Box(0, 2, 2), lgv.Box(2, 0, 1)])
def test_bijection_roundtrip_and_weight_law(box):
    systems = list(lgv.enumerate_systems(box))
    assert len(systems) == macmahon_count(*box)
    pps = set()
    for s in systems:
        pi = lgv.system_to_pp(s)
        pps.add(pi)
        assert lgv.pp_to_system(pi) == s
        for k, p in enumerate(s.paths, start=1):
            lam = pi.level(k)
            assert lgv.path_weight(p).substitute(_spec) == q ** sum(lam) * t ** cc.durfee(lam)
        vol, tr, _, _ = cc.fast_stats(pi.rows)
        assert s.weight().substitute(_spec) == q**vol * t**tr
    assert pps == set(cc.enumerate_pp(*box))
    for pi in cc.enumerate_pp(*box):
        assert lgv.pp_to_system(pi).is_nonintersecting()
