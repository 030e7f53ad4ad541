"""Superelliptic (Kummer) covers y^n = c * prod (x - rho_i)^{d_i} of the x-line.

Covers ramification, genus, point counts over F_{q^r}, plane-curve counts and
the classical upper bounds on the number of rational points.
"""

import math
import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    Imprimitive,
    ParseError,
    RootsNotRational,
    TooLarge,
    UnsupportedModel,
    WildCover,
)
from .ffield import FieldCtx, Poly, embed, make_field, nth_power_root_count, parse_element
from .projective import enumerate_proj

COUNT_LIMIT = 10**7
WORKERS_ENV = "FFCOVERS_WORKERS"


@dataclass(frozen=True)
class KummerCurve:
    """The affine curve y^n = scale * prod_i (x - rho_i)^{d_i} over ``ctx``.

    ``branch`` is a tuple of ``(rho_i, d_i)`` pairs with distinct roots.
    """

    ctx: FieldCtx
    cover_degree: int
    branch: tuple
    scale: object = None

    def __post_init__(self):
        if self.cover_degree < 1:
            raise ValueError("cover degree must be positive")
        branch = tuple((self.ctx(r), int(d)) for r, d in self.branch)
        if not branch:
            raise ValueError("at least one branch root is required")
        roots = [r for r, _ in branch]
        if len(set(roots)) != len(roots):
            raise ValueError("branch roots must be pairwise distinct")
        if any(d < 1 for _, d in branch):
            raise ValueError("multiplicities must be positive")
        object.__setattr__(self, "branch", branch)
        scale = self.ctx.one if self.scale is None else self.ctx(self.scale)
        if not scale:
            raise ValueError("scale must be nonzero")
        object.__setattr__(self, "scale", scale)

    @property
    def s(self):
        return len(self.branch)

    @property
    def total_degree(self):
        return sum(d for _, d in self.branch)

    @property
    def is_tame(self):
        return math.gcd(self.cover_degree, self.ctx.p) == 1

    @property
    def primitivity(self):
        return math.gcd(self.cover_degree, *(d for _, d in self.branch))

    def poly(self):
        f = Poly(self.ctx, [self.scale])
        for r, d in self.branch:
            f = f * Poly(self.ctx, [-r, 1]) ** d
        return f

    def spec(self):
        parts = []
        for r, d in self.branch:
            lit = r.serialize()
            factor = "x" if not r else f"(x-{lit})"
            parts.append(factor if d == 1 else f"{factor}^{d}")
        head = "" if self.scale == 1 else f"{self.scale.serialize()}*"
        return f"y^{self.cover_degree} = {head}{' '.join(parts)}"

    @classmethod
    def parse(cls, ctx, text):
        return parse_curve(ctx, text)


_FACTOR = re.compile(r"\(\s*x\s*([+-])\s*([^()]+?)\s*\)(?:\s*\^\s*(\d+))?|\bx\b(?:\s*\^\s*(\d+))?")


def parse_curve(ctx, text):
    """Parse ``y^N = [c*](x-R1)^D1 (x-R2)^D2 ...``; a bare ``x`` is the root 0."""
    m = re.fullmatch(r"\s*y\s*\^\s*(\d+)\s*=\s*(.+?)\s*", text)
    if not m:
        raise ParseError(f"curve must look like 'y^N = (x-R)^D ...', got {text!r}")
    n = int(m.group(1))
    rhs = m.group(2)
    scale = ctx.one
    sm = re.match(r"\s*(-?\d+|(?:\d+\^\d+:)?\[[^\]]*\])\s*\*", rhs)
    if sm:
        scale = parse_element(ctx, sm.group(1))
        rhs = rhs[sm.end():]
    branch = {}
    pos = 0
    for fm in _FACTOR.finditer(rhs):
        if rhs[pos:fm.start()].strip(" *"):
            raise ParseError(f"unexpected text {rhs[pos:fm.start()]!r} in curve spec")
        pos = fm.end()
        if fm.group(2) is not None:
            root = parse_element(ctx, fm.group(2))
            if fm.group(1) == "+":
                root = -root
            d = int(fm.group(3) or 1)
        else:
            root, d = ctx.zero, int(fm.group(4) or 1)
        branch[root] = branch.get(root, 0) + d
    if rhs[pos:].strip(" *"):
        raise ParseError(f"unexpected text {rhs[pos:]!r} in curve spec")
    if not branch:
        raise ParseError("no branch factors found")
    return KummerCurve(ctx, n, tuple(branch.items()), scale)


@dataclass(frozen=True)
class Ramification:
    indices: tuple
    e_inf: int
    infinity_unramified: bool
    # the alternative condition sum(d_i) = 0 mod q, reported alongside
    sum_zero_mod_q: bool


def ramification_indices(curve):
    n = curve.cover_degree
    e = tuple(n // math.gcd(n, d) for _, d in curve.branch)
    e_inf = n // math.gcd(n, curve.total_degree)
    return Ramification(e, e_inf, e_inf == 1, curve.total_degree % curve.ctx.q == 0)


def genus_paper(curve):
    """(n - 1)(s - 2) / 2 exactly, including non-integer values."""
    return Fraction((curve.cover_degree - 1) * (curve.s - 2), 2)


def genus_tame(curve):
    """Riemann-Hurwitz genus of a tame, primitive Kummer cover, with the place at
    infinity contributing n - gcd(n, sum d_i)."""
    n = curve.cover_degree
    if not curve.is_tame:
        raise WildCover(f"p = {curve.ctx.p} divides the cover degree {n}")
    if curve.primitivity != 1:
        raise Imprimitive(f"gcd(n, d_1, ..., d_s) = {curve.primitivity}")
    two_g_minus_2 = -2 * n + sum(n - math.gcd(n, d) for _, d in curve.branch)
    two_g_minus_2 += n - math.gcd(n, curve.total_degree)
    assert two_g_minus_2 % 2 == 0 and two_g_minus_2 >= -2, two_g_minus_2
    return two_g_minus_2 // 2 + 1


def _extension(ctx, r):
    if r < 1:
        raise ValueError("r must be positive")
    return make_field(ctx.p, ctx.n * r)


def _embedded_poly(curve, ext):
    return Poly(ext, [embed(c, ext) for c in curve.poly().coeffs])


def _count_chunk(args):
    p, n, modulus, fcodes, cover_degree, start, stop = args
    ext = FieldCtx(p, n, modulus)
    f = Poly(ext, [ext.from_code(c) for c in fcodes])
    return sum(nth_power_root_count(f(ext.from_code(x)), cover_degree) for x in range(start, stop))


def count_affine_points(curve, r=1, workers=None):
    """Affine points of the curve over F_{q^r}, summing n-th root counts of f(x)."""
    ext = _extension(curve.ctx, r)
    if ext.q > COUNT_LIMIT:
        raise TooLarge(f"F_{ext.q} too large to enumerate")
    f = _embedded_poly(curve, ext)
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1"))
    if workers <= 1 or ext.q < 4096:
        return sum(nth_power_root_count(f(x), curve.cover_degree) for x in ext.elements())
    step = -(-ext.q // workers)
    fcodes = [c.code for c in f.coeffs]
    jobs = [
        (ext.p, ext.n, ext.modulus, fcodes, curve.cover_degree, lo, min(lo + step, ext.q))
        for lo in range(0, ext.q, step)
    ]
    with ProcessPoolExecutor(workers) as pool:
        return sum(pool.map(_count_chunk, jobs))


def count_affine_points_bruteforce(curve, r=1):
    """Double loop over (x, y) in F_{q^r}^2; the oracle for count_affine_points."""
    ext = _extension(curve.ctx, r)
    if ext.q**2 > COUNT_LIMIT:
        raise TooLarge(f"F_{ext.q}^2 too large to enumerate")
    f = _embedded_poly(curve, ext)
    n = curve.cover_degree
    elems = ext.elements()
    ypow = [y**n for y in elems]
    return sum(1 for x in elems for yn in ypow if yn == f(x))


def count_smooth_model_points(curve, r=1):
    """Points of the smooth projective model over F_{q^r} in the two cases where
    the fiber over infinity is read off directly."""
    n = curve.cover_degree
    if any(d != 1 for _, d in curve.branch):
        raise UnsupportedModel("repeated branch multiplicities make the affine model singular")
    if not curve.is_tame:
        raise UnsupportedModel("wild covers are not handled")
    affine = count_affine_points(curve, r)
    sd = curve.total_degree
    if math.gcd(n, sd) == 1:
        return affine + 1
    if sd % n == 0:
        ext = _extension(curve.ctx, r)
        # the fiber over infinity is {v : v^n = scale}
        return affine + nth_power_root_count(embed(curve.scale, ext), n)
    raise UnsupportedModel(f"1 < gcd(n, sum d_i) = {math.gcd(n, sd)} < n")


@dataclass(frozen=True)
class PlaneCurve:
    """Projective plane curve F(x, y, z) = 0; ``terms`` maps exponent triples to
    coefficients."""

    ctx: FieldCtx
    terms: tuple

    def __post_init__(self):
        items = {}
        for exps, c in (self.terms.items() if isinstance(self.terms, dict) else self.terms):
            exps = tuple(int(e) for e in exps)
            if len(exps) != 3 or min(exps) < 0:
                raise ValueError(f"bad exponent triple {exps}")
            items[exps] = items.get(exps, self.ctx.zero) + self.ctx(c)
        items = {e: c for e, c in items.items() if c}
        if not items:
            raise ValueError("the zero polynomial does not define a curve")
        degrees = {sum(e) for e in items}
        if len(degrees) != 1:
            raise ValueError("polynomial is not homogeneous")
        object.__setattr__(self, "terms", tuple(sorted(items.items())))

    @property
    def degree(self):
        return sum(self.terms[0][0])

    def __call__(self, pt):
        x, y, z = pt
        acc = None
        for (i, j, k), c in self.terms:
            term = c * x**i * y**j * z**k
            acc = term if acc is None else acc + term
        return acc

    def over(self, ext):
        return PlaneCurve(ext, tuple((e, embed(c, ext)) for e, c in self.terms))

    def to_json(self):
        return [[list(e), c.serialize()] for e, c in self.terms]

    @classmethod
    def from_json(cls, ctx, data):
        return cls(ctx, tuple((tuple(e), parse_element(ctx, c)) for e, c in data))


def count_plane_points(curve, r=1):
    ext = _extension(curve.ctx, r)
    if ext.q**2 + ext.q + 1 > COUNT_LIMIT:
        raise TooLarge(f"P^2(F_{ext.q}) too large to enumerate")
    lifted = curve.over(ext)
    return sum(1 for pt in enumerate_proj(ext, 2) if not lifted(pt.coords))


def hermitian_curve(ctx, q0):
    e = q0 + 1
    return PlaneCurve(ctx, (((e, 0, 0), 1), ((0, e, 0), 1), ((0, 0, e), 1)))


def fermat_curve(ctx, n, m):
    """Both models of y^m + x^n = 1 over ``ctx``.

    Returns ``(kummer, plane)``; ``kummer`` is ``y^m = -prod (x - zeta)`` over the
    n-th roots of unity and needs all of them in the field.
    """
    top = max(n, m)
    plane = PlaneCurve(ctx, (((n, 0, top - n), 1), ((0, m, top - m), 1), ((0, 0, top), -1)))
    if math.gcd(n, ctx.p) != 1 or (ctx.q - 1) % n:
        raise RootsNotRational(f"x^{n} = 1 does not split into distinct roots over F_{ctx.q}")
    roots = [z for z in ctx.nonzero() if z**n == 1]
    kummer = KummerCurve(ctx, m, tuple((z, 1) for z in roots), -ctx.one)
    return kummer, plane


def _isqrt_exact(q):
    r = math.isqrt(q)
    return r if r * r == q else None


@dataclass
class BoundReport:
    N: int
    g: int
    q: int
    plane_degree: object = None

    @property
    def hasse_weil_ok(self):
        excess = self.N - self.q - 1
        return excess <= 0 or excess * excess <= 4 * self.g * self.g * self.q

    @property
    def stohr_voloch_ok(self):
        if self.plane_degree is None:
            return None
        return 2 * self.N <= 2 * self.g - 2 + (self.q + 2) * self.plane_degree

    @property
    def weil_q2_ok(self):
        q0 = _isqrt_exact(self.q)
        if q0 is None:
            return None
        return self.N <= 1 + self.q + 2 * q0 * self.g

    @property
    def is_maximal(self):
        q0 = _isqrt_exact(self.q)
        return q0 is not None and self.N == 1 + self.q + 2 * q0 * self.g

    @property
    def ihara_ok(self):
        if not self.is_maximal:
            return None
        q0 = _isqrt_exact(self.q)
        return 2 * self.g <= q0 * (q0 - 1)

    def to_dict(self):
        return {
            "N": self.N,
            "g": self.g,
            "q": self.q,
            "plane_degree": self.plane_degree,
            "hasse_weil_ok": self.hasse_weil_ok,
            "stohr_voloch_ok": self.stohr_voloch_ok,
            "weil_q2_ok": self.weil_q2_ok,
            "is_maximal": self.is_maximal,
            "ihara_ok": self.ihara_ok,
        }


def check_bounds(N, g, q, plane_degree=None):
    if N < 0 or g < 0:
        raise ValueError("N and g must be non-negative")
    return BoundReport(N, g, q, plane_degree)


def g1p_unique_sufficient(p, g):
    """2 <= p <= g/2 + 1, compared exactly."""
    return 2 <= p and 2 * p <= g + 2
