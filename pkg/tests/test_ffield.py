import itertools

import pytest
from hypothesis import given, strategies as st

from ffcovers.errors import (
    DegreeZero,
    DivisionByZero,
    IncompatibleFields,
    MixedContexts,
    NotIrreducible,
    NotPrime,
)
from ffcovers.ffield import (
    MINUS_INFINITY,
    FieldCtx,
    Poly,
    embed,
    enumerate_field,
    frobenius,
    make_field,
    nth_power_root_count,
    parse_element,
)

SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)]


def fields(max_q):
    return [make_field(p, n) for p, n in SMALL_FIELDS if p**n <= max_q]


def test_make_field_prime():
    F5 = make_field(5, 1)
    assert F5.q == 5 and F5.modulus == (0, 1)


def test_make_field_f4_modulus_is_only_irreducible_quadratic():
    # exhaustive over the 4 monic quadratics over F_2: only x^2+x+1 has no root
    irreducible = [
        (c0, c1, 1) for c0, c1 in itertools.product(range(2), repeat=2)
        if all((c0 + c1 * x + x * x) % 2 for x in range(2))
    ]
    assert irreducible == [(1, 1, 1)]
    assert make_field(2, 2).modulus == (1, 1, 1)


def test_make_field_errors():
    with pytest.raises(NotPrime):
        make_field(4, 1)
    with pytest.raises(DegreeZero):
        make_field(3, 0)
    with pytest.raises(NotIrreducible):
        FieldCtx(3, 2, (2, 0, 1))  # x^2 - 1


def test_make_field_is_deterministic():
    assert make_field(3, 3) == FieldCtx(3, 3)
    assert make_field(3, 3).modulus == FieldCtx(3, 3).modulus
    # a cubic is irreducible iff it has no root; first root-free tail in constant-first order
    first = next(
        t + (1,) for t in itertools.product(range(3), repeat=3)
        if all((t[0] + t[1] * x + t[2] * x * x + x**3) % 3 for x in range(3))
    )
    assert make_field(3, 3).modulus == first == (1, 0, 2, 1)


def test_contexts_compare_by_value():
    assert FieldCtx(2, 2) == make_field(2, 2)
    assert hash(FieldCtx(2, 2)) == hash(make_field(2, 2))


def test_basic_arithmetic_examples():
    F7 = make_field(7)
    assert F7(3).inverse() == 5
    assert F7(3) / F7(3) == 1
    F5 = make_field(5)
    assert F5(2) ** 4 == 1
    F4 = make_field(2, 2)
    t = F4.gen()
    assert t * t == t + 1


def test_division_by_zero_and_mixed_contexts():
    F7 = make_field(7)
    with pytest.raises(DivisionByZero):
        F7.zero.inverse()
    with pytest.raises(DivisionByZero):
        F7(1) / F7(0)
    with pytest.raises(MixedContexts):
        F7(1) + make_field(5)(1)


def test_negative_exponent():
    F9 = make_field(3, 2)
    a = F9.gen()
    assert a**-1 == a.inverse()
    assert a**-3 * a**3 == 1


@pytest.mark.parametrize("ctx", fields(16), ids=repr)
def test_field_axioms_exhaustive(ctx):
    els = ctx.elements()
    zero, one = ctx.zero, ctx.one
    for a in els:
        assert a + zero == a and a * one == a
        assert a + (-a) == zero
        if a:
            assert a * a.inverse() == one
        for b in els:
            assert a + b == b + a and a * b == b * a
            for c in els:
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c


def _naive_mul(ctx, a, b):
    # schoolbook product of coefficient vectors reduced by the modulus
    p, n, m = ctx.p, ctx.n, ctx.modulus
    prod = [0] * (2 * n)
    for i, x in enumerate(a.coeffs):
        for j, y in enumerate(b.coeffs):
            prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(2 * n - 1, n - 1, -1):
        c = prod[k]
        if c:
            for i in range(n + 1):
                prod[k - n + i] = (prod[k - n + i] - c * m[i]) % p
    return ctx.from_coeffs(prod[:n])


@pytest.mark.parametrize("ctx", fields(27), ids=repr)
def test_table_multiplication_matches_schoolbook(ctx):
    for a in ctx.elements():
        for b in ctx.elements():
            assert a * b == _naive_mul(ctx, a, b)


@pytest.mark.parametrize("p,n", [(2, 1), (3, 1), (2, 2), (7, 1), (2, 3), (3, 2), (2, 4), (5, 2), (7, 2)])
def test_frobenius_fixed_point_law(p, n):
    ctx = make_field(p, n)
    for a in ctx.elements():
        assert a**ctx.q == a
        if a:
            assert a ** (ctx.q - 1) == 1


def test_frobenius_examples():
    F4 = make_field(2, 2)
    t = F4.gen()
    assert frobenius(t) == t + 1
    F7 = make_field(7)
    assert all(frobenius(a) == a for a in F7)
    F27 = make_field(3, 3)
    for a in F27:
        b = a
        for _ in range(3):
            b = frobenius(b)
        assert b == a


def test_enumerate_field():
    assert [a.code for a in enumerate_field(make_field(2))] == [0, 1]
    assert len(enumerate_field(make_field(2, 2))) == 4
    F9 = enumerate_field(make_field(3, 2))
    assert len(F9) == len(set(F9)) == 9
    # prime subfield first
    assert [int(a) for a in F9[:3]] == [0, 1, 2]


EMBED_PAIRS = [((2, 1), (2, 2)), ((2, 2), (2, 4)), ((3, 1), (3, 2)), ((2, 1), (2, 3)), ((3, 2), (3, 4))]


@pytest.mark.parametrize("src,dst", EMBED_PAIRS)
def test_embed_is_injective_ring_homomorphism(src, dst):
    S, T = make_field(*src), make_field(*dst)
    images = [embed(a, T) for a in S]
    assert len(set(images)) == S.q
    assert embed(S.one, T) == T.one
    for a in S:
        for b in S:
            assert embed(a + b, T) == embed(a, T) + embed(b, T)
            assert embed(a * b, T) == embed(a, T) * embed(b, T)


def test_embed_examples():
    assert embed(make_field(2).one, make_field(2, 2)) == 1
    with pytest.raises(IncompatibleFields):
        embed(make_field(3, 2).gen(), make_field(2, 2))
    with pytest.raises(IncompatibleFields):
        embed(make_field(2, 2).gen(), make_field(2, 3))


def test_embed_uses_first_root_in_enumeration_order():
    F4, F16 = make_field(2, 2), make_field(2, 4)
    roots = [r for r in F16 if r * r + r + 1 == 0]
    assert embed(F4.gen(), F16) == min(roots)


def _brute_root_count(c, n):
    return sum(1 for y in c.ctx if y**n == c)


def test_nth_power_root_count_examples():
    F7 = make_field(7)
    assert _brute_root_count(F7(1), 3) == 3
    assert nth_power_root_count(F7(1), 3) == 3
    assert {y.code for y in F7 if y**3 == 1} == {1, 2, 4}
    assert nth_power_root_count(F7(3), 3) == _brute_root_count(F7(3), 3) == 0
    assert nth_power_root_count(make_field(3, 2).zero, 5) == 1


@pytest.mark.parametrize("ctx", fields(16), ids=repr)
@pytest.mark.parametrize("n", range(1, 7))
def test_nth_power_root_count_sums_to_q_and_matches_brute_force(ctx, n):
    counts = [nth_power_root_count(c, n) for c in ctx]
    assert counts == [_brute_root_count(c, n) for c in ctx]
    assert sum(counts) == ctx.q


def test_serialize_and_parse_roundtrip():
    F9 = make_field(3, 2)
    for a in F9:
        assert parse_element(F9, a.serialize()) == a
    F7 = make_field(7)
    assert F7(5).serialize() == 5
    assert parse_element(F7, "-1") == 6
    assert make_field(2, 2).gen().serialize() == "2^2:[0,1]"


# -- polynomials ------------------------------------------------------------------

def test_zero_polynomial_degree_is_sentinel():
    F5 = make_field(5)
    z = Poly(F5, [0, 0])
    assert z.degree is MINUS_INFINITY
    assert z.degree < 0 and z.degree < -(10**9)
    with pytest.raises(TypeError):
        z.degree + 1
    assert Poly(F5, [3]).degree == 0


def test_roots_of_x3_minus_x_over_f5():
    F5 = make_field(5)
    x = Poly.x(F5)
    roots = (x**3 - x).roots_in_field()
    assert {r.code: m for r, m in roots.items()} == {0: 1, 1: 1, 4: 1}


def test_roots_with_multiplicity():
    F7 = make_field(7)
    f = Poly.from_roots(F7, [2, 2, 2, 5])
    assert {r.code: m for r, m in f.roots_in_field().items()} == {2: 3, 5: 1}


def test_is_irreducible_examples():
    F2 = make_field(2)
    assert Poly(F2, [1, 1, 1]).is_irreducible()
    assert not Poly(F2, [1, 0, 1]).is_irreducible()
    F3 = make_field(3)
    assert Poly(F3, [1, 0, 1]).is_irreducible()


@pytest.mark.parametrize("p,deg", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)])
def test_irreducible_count_matches_necklace_formula(p, deg):
    # number of monic irreducibles of degree d over F_p: (1/d) sum_{k|d} mu(k) p^(d/k)
    def mobius(k):
        out, m, f = 1, k, 2
        while f * f <= m:
            if m % f == 0:
                m //= f
                if m % f == 0:
                    return 0
                out = -out
            f += 1
        return -out if m > 1 else out

    expected = sum(mobius(k) * p ** (deg // k) for k in range(1, deg + 1) if deg % k == 0) // deg
    F = make_field(p)
    got = sum(
        Poly(F, list(tail) + [1]).is_irreducible() for tail in itertools.product(range(p), repeat=deg)
    )
    assert got == expected


def test_is_squarefree():
    F3 = make_field(3)
    assert not Poly.from_roots(F3, [1, 1]).is_squarefree()
    assert Poly.from_roots(F3, [0, 1, 2]).is_squarefree()
    # x^3 - 1 = (x - 1)^3 in characteristic 3
    assert not Poly(F3, [-1, 0, 0, 1]).is_squarefree()


def test_gcd_is_monic_common_factor():
    F7 = make_field(7)
    f = Poly.from_roots(F7, [1, 2, 3]) * 3
    g = Poly.from_roots(F7, [2, 3, 6]) * 5
    assert f.gcd(g) == Poly.from_roots(F7, [2, 3])


def test_divmod_reconstructs():
    F9 = make_field(3, 2)
    t = F9.gen()
    f = Poly(F9, [t, 1, t + 1, 2, 1])
    g = Poly(F9, [1, t, 1])
    quot, rem = divmod(f, g)
    assert quot * g + rem == f
    assert rem.degree < g.degree


def test_horner_matches_naive_evaluation():
    F13 = make_field(13)
    f = Poly(F13, [4, 0, 7, 1, 12])
    for x in F13:
        naive = sum((c * x**i for i, c in enumerate(f.coeffs)), F13.zero)
        assert f(x) == naive


def test_poly_mixed_contexts():
    with pytest.raises(MixedContexts):
        Poly(make_field(5), [1, 1]) + Poly(make_field(7), [1])


@given(st.integers(0, 48), st.integers(0, 48), st.integers(-60, 60))
def test_power_laws_in_f49(a, b, e):
    F49 = make_field(7, 2)
    x, y = F49.from_code(a), F49.from_code(b)
    if x and y:
        assert (x * y) ** e == x**e * y**e
    assert (x + y) ** 7 == x**7 + y**7
