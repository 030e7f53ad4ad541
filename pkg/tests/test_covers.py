import itertools
import math
import random
from fractions import Fraction

import pytest

from ffcovers.covers import (
    KummerCurve,
    PlaneCurve,
    check_bounds,
    count_affine_points,
    count_affine_points_bruteforce,
    count_plane_points,
    count_smooth_model_points,
    fermat_curve,
    g1p_unique_sufficient,
    genus_paper,
    genus_tame,
    hermitian_curve,
    parse_curve,
    ramification_indices,
)
from ffcovers.errors import Imprimitive, ParseError, RootsNotRational, UnsupportedModel, WildCover
from ffcovers.ffield import field_of_size, make_field
from ffcovers.verify import bound_suite_curves, random_tame_primitive_curve

F5 = make_field(5)


def curve(ctx, n, mults, scale=1):
    return KummerCurve(ctx, n, tuple(zip(ctx.elements(), mults)), scale)


def test_curve_invariants():
    with pytest.raises(ValueError):
        KummerCurve(F5, 2, ((1, 1), (1, 2)))
    with pytest.raises(ValueError):
        KummerCurve(F5, 2, ((1, 0),))
    with pytest.raises(ValueError):
        KummerCurve(F5, 2, ())
    c = curve(F5, 4, [2, 1, 3])
    assert c.s == 3 and c.total_degree == 6 and c.primitivity == 1 and c.is_tame


def test_parse_and_spec_roundtrip():
    c = parse_curve(F5, "y^2 = x (x-1) (x+1)")
    assert c.cover_degree == 2
    assert sorted((r.code, d) for r, d in c.branch) == [(0, 1), (1, 1), (4, 1)]
    assert parse_curve(F5, c.spec()) == c
    F9 = make_field(3, 2)
    d = parse_curve(F9, "y^3 = 2*(x-[1,1])^2 (x-3^2:[0,1])")
    assert d.scale == 2 and parse_curve(F9, d.spec()) == d
    with pytest.raises(ParseError):
        parse_curve(F5, "y = x")
    with pytest.raises(ParseError):
        parse_curve(F5, "y^2 = x + 1")


def test_ramification_examples():
    r = ramification_indices(curve(F5, 4, [2]))
    assert r.indices == (2,)
    assert ramification_indices(curve(F5, 3, [1])).indices == (3,)
    r = ramification_indices(curve(F5, 2, [1, 3]))
    assert r.e_inf == 1 and r.infinity_unramified
    r = ramification_indices(curve(F5, 3, [1, 1]))
    assert r.e_inf == 3 and not r.infinity_unramified


def test_genus_paper_examples():
    assert genus_paper(curve(F5, 3, [1, 1, 1])) == 1
    assert genus_paper(curve(F5, 2, [1, 1])) == 0
    assert genus_paper(curve(F5, 2, [1, 1, 1])) == Fraction(1, 2)


def test_genus_tame_examples():
    assert genus_tame(curve(F5, 2, [1, 1, 1])) == 1
    c = curve(F5, 3, [1, 1, 1])
    assert genus_tame(c) == genus_paper(c) == 1
    assert genus_tame(curve(F5, 2, [1, 1])) == 0
    with pytest.raises(WildCover):
        genus_tame(curve(F5, 5, [1, 1]))
    with pytest.raises(Imprimitive):
        genus_tame(curve(F5, 4, [2, 2]))


def _hyperelliptic_genus(s):
    # y^2 = squarefree of degree s: g = floor((s - 1) / 2)
    return (s - 1) // 2


@pytest.mark.parametrize("s", range(1, 7))
def test_genus_tame_hyperelliptic_closed_form(s):
    ctx = make_field(7)
    assert genus_tame(curve(ctx, 2, [1] * s)) == _hyperelliptic_genus(s)


@pytest.mark.parametrize("seed", range(5))
def test_genus_agreement_on_random_curves(seed):
    rng = random.Random(seed)
    for _ in range(40):
        c = random_tame_primitive_curve(rng)
        assert all(math.gcd(c.cover_degree, d) == 1 for _, d in c.branch)
        assert c.total_degree % c.cover_degree == 0
        assert genus_tame(c) == genus_paper(c)


def _double_loop(c, ctx):
    # evaluate y^n and f(x) directly over the base field
    f = c.poly()
    return sum(1 for x in ctx for y in ctx if y**c.cover_degree == f(x))


def test_affine_count_examples():
    c = parse_curve(F5, "y^2 = x (x-1) (x+1)")
    assert _double_loop(c, F5) == 7
    assert count_affine_points(c) == 7
    F3 = make_field(3)
    c = parse_curve(F3, "y^2 = x")
    assert _double_loop(c, F3) == count_affine_points(c) == 3
    # n = 1 is the graph of a function
    c = KummerCurve(F5, 1, ((2, 3), (4, 1)))
    assert count_affine_points(c) == 5


def _curves_for_affine_property():
    out = []
    for q in (2, 3, 4, 5, 7, 8, 9):
        ctx = field_of_size(q)
        for n in (1, 2, 3, 4):
            for mults in ([1], [1, 1], [2, 1], [1, 1, 1], [3, 1, 2]):
                if len(mults) <= q:
                    out.append(curve(ctx, n, mults, ctx.gen() if ctx.gen() else 1))
    return out


@pytest.mark.parametrize("c", _curves_for_affine_property(), ids=lambda c: f"q{c.ctx.q}:{c.spec()}")
def test_affine_count_matches_double_loop(c):
    rs = [r for r in (1, 2) if c.ctx.q**r <= 81]
    for r in rs:
        assert count_affine_points(c, r) == count_affine_points_bruteforce(c, r)
    assert count_affine_points(c) == _double_loop(c, c.ctx)


def test_parallel_count_matches_serial():
    c = parse_curve(make_field(5), "y^3 = x (x-1) (x-2)")
    assert count_affine_points(c, 6, workers=3) == count_affine_points(c, 6, workers=1)


def test_smooth_model_examples():
    c = parse_curve(F5, "y^2 = x (x-1) (x+1)")
    assert count_smooth_model_points(c) == 8
    c = parse_curve(F5, "y^2 = x (x-1) (x-2) (x-3)")
    affine = _double_loop(c, F5)
    assert count_smooth_model_points(c) == affine + 2
    with pytest.raises(UnsupportedModel):
        count_smooth_model_points(parse_curve(F5, "y^2 = x^2 (x-1)"))
    with pytest.raises(UnsupportedModel):
        count_smooth_model_points(parse_curve(F5, "y^4 = x (x-1)"))


def test_smooth_model_matches_plane_model_for_genus_one():
    # y^2 = x^3 - x is a smooth plane cubic: y^2 z = x^3 - x z^2
    for q in (3, 5, 7, 9, 11, 13):
        if q % 2 == 0:
            continue
        ctx = field_of_size(q)
        c = parse_curve(ctx, "y^2 = x (x-1) (x+1)")
        plane = PlaneCurve(ctx, {(0, 2, 1): 1, (3, 0, 0): -1, (1, 0, 2): 1})
        for r in (1, 2):
            if q**r <= 169:
                assert count_smooth_model_points(c, r) == count_plane_points(plane, r)


def test_plane_count_examples():
    F4 = make_field(2, 2)
    assert count_plane_points(hermitian_curve(F4, 2)) == 9
    for q in (2, 3, 4, 5):
        ctx = field_of_size(q)
        assert count_plane_points(PlaneCurve(ctx, {(1, 0, 0): 1})) == q + 1
    F3 = make_field(3)
    assert count_plane_points(PlaneCurve(F3, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})) == 4


def test_plane_curve_validation():
    with pytest.raises(ValueError):
        PlaneCurve(F5, {(2, 0, 0): 1, (0, 1, 0): 1})
    with pytest.raises(ValueError):
        PlaneCurve(F5, {(2, 0, 0): 5})
    c = PlaneCurve(F5, {(1, 1, 0): 2, (0, 0, 2): 1})
    assert PlaneCurve.from_json(F5, c.to_json()) == c
    assert c.degree == 2


def test_hermitian_is_maximal():
    for q0 in (2, 3):
        ctx = field_of_size(q0 * q0)
        n = count_plane_points(hermitian_curve(ctx, q0))
        assert n == q0**3 + 1
        rep = check_bounds(n, q0 * (q0 - 1) // 2, q0 * q0)
        assert rep.is_maximal and rep.ihara_ok


def test_bounds_examples():
    rep = check_bounds(9, 1, 4)
    assert rep.is_maximal and rep.ihara_ok and rep.hasse_weil_ok and rep.weil_q2_ok
    for q in (2, 3, 4, 5, 7, 9):
        rep = check_bounds(q + 1, 0, q)
        assert rep.hasse_weil_ok
    # equality sits exactly at floor(2 g sqrt q)
    for g, q in ((1, 5), (2, 7), (3, 9), (4, 2)):
        top = q + 1 + math.isqrt(4 * g * g * q)
        assert check_bounds(top, g, q).hasse_weil_ok
        assert not check_bounds(top + 1, g, q).hasse_weil_ok
    assert check_bounds(5, 1, 5).weil_q2_ok is None
    assert check_bounds(5, 1, 5).ihara_ok is None


def test_stohr_voloch_flag():
    assert check_bounds(9, 1, 4, plane_degree=3).stohr_voloch_ok
    # the q0 = 3 Hermitian quartic exceeds (2g - 2 + (q + 2) d) / 2 = 24
    assert check_bounds(28, 3, 9, plane_degree=4).stohr_voloch_ok is False


def test_ihara_violation_detected():
    # a hypothetical maximal count with genus above q0(q0 - 1)/2
    rep = check_bounds(1 + 9 + 2 * 3 * 4, 4, 9)
    assert rep.is_maximal and rep.ihara_ok is False


def test_g1p_examples():
    assert g1p_unique_sufficient(2, 2)
    assert not g1p_unique_sufficient(3, 2)
    assert not g1p_unique_sufficient(2, 1)
    assert g1p_unique_sufficient(3, 4)


def test_fermat_examples():
    F4 = make_field(2, 2)
    k, plane = fermat_curve(F4, 3, 3)
    assert count_plane_points(plane) == 9
    assert count_smooth_model_points(k) == 9
    k1, _ = fermat_curve(F4, 1, 3)
    assert genus_tame(k1) == 0
    F9 = make_field(3, 2)
    k, plane = fermat_curve(F9, 4, 4)
    assert count_plane_points(plane) == 28 == 1 + 9 + 2 * 3 * genus_tame(k)
    with pytest.raises(RootsNotRational):
        fermat_curve(F9, 5, 2)


@pytest.mark.parametrize("c", bound_suite_curves(), ids=lambda c: f"q{c.ctx.q}:{c.spec()}")
def test_hasse_weil_property(c):
    g = genus_tame(c)
    q = c.ctx.q
    assert check_bounds(count_smooth_model_points(c, 1), g, q).hasse_weil_ok
    rep = check_bounds(count_smooth_model_points(c, 2), g, q * q)
    assert rep.hasse_weil_ok and rep.weil_q2_ok


def test_genus_tame_domain_is_nonnegative_integer():
    ctx = make_field(7)
    for n in range(1, 7):
        for s in range(1, 5):
            for ds in itertools.combinations_with_replacement(range(1, n + 1), s):
                if math.gcd(n, *ds) == 1:
                    g = genus_tame(curve(ctx, n, list(ds)))
                    assert isinstance(g, int) and g >= 0
