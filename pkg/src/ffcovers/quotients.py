"""Invariant monomials and fixed-point data for the three kinds of automorphism
of the curve y^m = 1 - x^(q-1).

Case A: (x, y) -> (a x, a^-1 y), a in F_q^*           (split torus)
Case B: (x, y) -> (a x, a^q y),  a in F_{q^2}^* \\ F_q^* (non-split torus)
Case C: (x, y) -> (x + y, y)                           (unipotent)

On monomials the diagonal maps act by a scalar, so invariance of x^i y^j is
decided on exponents: the scalar lambda^i mu^j must be 1 for every admissible
parameter.  The unipotent substitution is kept only for its action on P^1.
"""

import math
import re
from dataclasses import dataclass

from .errors import NotMonomialStable, ParseError
from .ffield import embed, make_field, prime_power
from .pgl import PGLElement, fixed_points as pgl_fixed_points, orbits_on_p1, p1_label, subgroup_closure

CASES = ("A", "B", "C")


@dataclass(frozen=True)
class LaurentMonomial:
    i: int
    j: int
    coeff: int = 1

    def __post_init__(self):
        if abs(self.i) > 10**6 or abs(self.j) > 10**6:
            raise ValueError("exponent out of range")

    def __str__(self):
        return f"x^{self.i}*y^{self.j}"

    @classmethod
    def parse(cls, text):
        m = re.fullmatch(r"\s*x\^\(?(-?\d+)\)?\s*\*\s*y\^\(?(-?\d+)\)?\s*", text)
        if not m:
            raise ParseError(f"monomial must look like 'x^i*y^j', got {text!r}")
        return cls(int(m.group(1)), int(m.group(2)))


@dataclass(frozen=True)
class MonomialMap:
    """Diagonal map (x, y) -> (lam x, mu y), or the unipotent substitution."""

    kind: str
    lam: object = None
    mu: object = None

    def __post_init__(self):
        if self.kind not in ("diagonal", "unipotent"):
            raise ValueError(f"unknown map kind {self.kind!r}")
        if self.kind == "diagonal" and (not self.lam or not self.mu):
            raise ValueError("diagonal map needs nonzero lam and mu")

    @classmethod
    def diagonal(cls, lam, mu):
        return cls("diagonal", lam, mu)

    @classmethod
    def unipotent(cls):
        return cls("unipotent")

    def on_point(self, x, y):
        if self.kind == "unipotent":
            return x + y, y
        return self.lam * x, self.mu * y


def apply(mapv, m):
    """Return ``(scalar, m)`` with mapv(x^i y^j) = scalar * x^i y^j."""
    if mapv.kind == "unipotent":
        raise NotMonomialStable("x -> x + y does not send monomials to monomials")
    return mapv.lam**m.i * mapv.mu**m.j, m


def is_invariant(mapv, m):
    scalar, _ = apply(mapv, m)
    return scalar == 1


# -- parameter families ------------------------------------------------------

def case_a_parameters(ctx):
    return ctx.nonzero()


def case_b_parameters(ctx):
    """Elements of F_{q^2}^* outside F_q^*, in the enumeration order of F_{q^2}."""
    ext = make_field(ctx.p, 2 * ctx.n)
    q = ctx.q
    return [a for a in ext.nonzero() if a**q != a]


def case_maps(case, ctx):
    if case == "A":
        return [MonomialMap.diagonal(a, a.inverse()) for a in case_a_parameters(ctx)]
    if case == "B":
        return [MonomialMap.diagonal(a, a**ctx.q) for a in case_b_parameters(ctx)]
    if case == "C":
        return [MonomialMap.unipotent()]
    raise ValueError(f"unknown case {case!r}")


def invariant_under_case(case, ctx, m):
    """Invariance of ``m`` for every admissible parameter of the case."""
    return all(is_invariant(f, m) for f in case_maps(case, ctx))


def named_invariants(q):
    return {
        "mu": LaurentMonomial(q - 1, 0),
        "tau": LaurentMonomial(1, 1),
        "gamma": LaurentMonomial(q * q - 1, 0),
        "delta": LaurentMonomial(-q, 1),
    }


# -- action on P^1(F_q) ------------------------------------------------------

def _restrict(x, ctx):
    """Preimage of ``x`` under the embedding ctx -> x.ctx."""
    for y in ctx.elements():
        if embed(y, x.ctx) == x:
            return y
    raise ValueError(f"{x} does not lie in {ctx!r}")


def pgl_form(case, ctx, a=None):
    """Element of PGL(2, q) realizing the case on P^1(F_q).

    Case B uses the companion matrix of the minimal polynomial of ``a`` over
    F_q, the F_q-rational conjugate of diag(a, a^q).
    """
    if case == "A":
        return PGLElement(ctx, a, 0, 0, a.inverse())
    if case == "B":
        q = ctx.q
        norm = _restrict(a ** (q + 1), ctx)
        trace = _restrict(a + a**q, ctx)
        return PGLElement(ctx, 0, -norm, 1, trace)
    if case == "C":
        return PGLElement(ctx, 1, 1, 0, 1)
    raise ValueError(f"unknown case {case!r}")


def fixed_points(case, ctx, a=None):
    return pgl_fixed_points(pgl_form(case, ctx, a))


def admissible_parameters(case, ctx):
    """Case A excludes a = +-1, whose image in PGL(2, q) is the identity."""
    if case == "A":
        return [a for a in ctx.nonzero() if a * a != 1]
    if case == "B":
        return case_b_parameters(ctx)
    return [None]


def fixed_point_counts(ctx):
    """Case -> sorted set of fixed-point counts over all admissible parameters."""
    out = {}
    for case in CASES:
        counts = {len(fixed_points(case, ctx, a)) for a in admissible_parameters(case, ctx)}
        out[case] = sorted(counts)
    return out


def invariance_checks(ctx):
    inv = named_invariants(ctx.q)
    return {
        "A": {name: invariant_under_case("A", ctx, inv[name]) for name in ("mu", "tau")},
        "B": {name: invariant_under_case("B", ctx, inv[name]) for name in ("gamma", "delta")},
    }


# -- the curve y^m = 1 - x^(q-1) -------------------------------------------------

def fermat_points(ctx, m):
    """Affine points of y^m = 1 - x^(q-1) over ctx."""
    e = ctx.q - 1
    ym = {}
    for y in ctx.elements():
        ym.setdefault(y**m, []).append(y)
    return [(x, y) for x in ctx.elements() for y in ym.get(1 - x**e, [])]


def _orbits_of_cyclic(mapv, points):
    pts = set(points)
    seen = set()
    orbits = []
    for pt in points:
        if pt in seen:
            continue
        orbit = [pt]
        nxt = mapv.on_point(*pt)
        while nxt != pt:
            assert nxt in pts, "map does not preserve the point set"
            orbit.append(nxt)
            nxt = mapv.on_point(*nxt)
        seen |= set(orbit)
        orbits.append(orbit)
    return orbits


def _multiplicative_order(a):
    k, x = 1, a
    while x != 1:
        x = x * a
        k += 1
    return k


def curve_invariance_report(q0, m):
    """Invariance, fixed-point and orbit data for y^m = 1 - x^(q-1) over F_q, q = q0^2."""
    ctx = make_field(*prime_power(q0 * q0))
    q = ctx.q
    points = fermat_points(ctx, m)

    # curve automorphisms of type A need a^m = 1 as well as a in F_q^*
    k = math.gcd(m, q - 1)
    a = ctx.primitive_element() ** ((q - 1) // k)
    map_a = MonomialMap.diagonal(a, a.inverse())
    orbits_a = _orbits_of_cyclic(map_a, points)
    order_a = _multiplicative_order(a)
    assert all(order_a % len(o) == 0 for o in orbits_a)

    b = case_b_parameters(ctx)[0]
    map_b = MonomialMap.diagonal(b, b**q)
    b_preserves = b ** (q - 1) == 1 and (b**q) ** m == 1
    group_b = subgroup_closure([pgl_form("B", ctx, b)])
    p1_orbits_b = orbits_on_p1(group_b)
    group_a = subgroup_closure([pgl_form("A", ctx, a)]) if a * a != 1 else None

    return {
        "q0": q0,
        "q": q,
        "m": m,
        "curve": f"y^{m} = 1 - x^{q - 1}",
        "affine_points": len(points),
        "invariance": invariance_checks(ctx),
        "fixed_point_counts": fixed_point_counts(ctx),
        "case_A": {
            "a": a.serialize(),
            "map_order": order_a,
            "pgl_order": len(group_a) if group_a is not None else 1,
            "orbit_count": len(orbits_a),
            "orbit_sizes": sorted(len(o) for o in orbits_a),
        },
        "case_B": {
            "a": b.serialize(),
            "map": [str(map_b.lam), str(map_b.mu)],
            "preserves_curve": b_preserves,
            "pgl_order": len(group_b),
            "p1_orbit_count": len(p1_orbits_b),
            "p1_orbits": [[p1_label(z) for z in o] for o in p1_orbits_b],
        },
        "case_C": {
            "fixed_points": [p1_label(z) for z in fixed_points("C", ctx)],
            "monomial_stable": False,
        },
    }

