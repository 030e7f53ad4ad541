"""PGL(2, q) acting on the projective line by Moebius transformations."""

import enum
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import MixedContexts, NotClosed, OutOfRange, TooLarge

PGL_LIMIT = 32
CLOSURE_LIMIT = 10**5


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def p1_points(ctx):
    """F_q in enumeration order followed by the point at infinity."""
    return ctx.elements() + [INF]


def _p1_key(z):
    return (1, 0) if z is INF else (0, z.code)


def p1_label(z):
    return "inf" if z is INF else z.serialize()


@dataclass(frozen=True)
class PGLElement:
    """Scalar class of [[a, b], [c, d]]; stored with its first nonzero entry
    (scan order a, b, c, d) equal to 1."""

    ctx: object
    a: object
    b: object
    c: object
    d: object

    def __post_init__(self):
        ctx = self.ctx
        a, b, c, d = (ctx(x) for x in (self.a, self.b, self.c, self.d))
        if not a * d - b * c:
            raise ValueError("matrix is singular")
        lead = next(x for x in (a, b, c, d) if x)
        if lead != 1:
            inv = lead.inverse()
            a, b, c, d = a * inv, b * inv, c * inv, d * inv
        for name, val in zip("abcd", (a, b, c, d)):
            object.__setattr__(self, name, val)

    @classmethod
    def identity(cls, ctx):
        return cls(ctx, 1, 0, 0, 1)

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def key(self):
        return tuple(x.code for x in self.entries)

    def __eq__(self, other):
        if not isinstance(other, PGLElement):
            return NotImplemented
        return self.ctx == other.ctx and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __lt__(self, other):
        return self.key() < other.key()

    def __mul__(self, other):
        if self.ctx != other.ctx:
            raise MixedContexts("elements of different groups")
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return PGLElement(self.ctx, a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self):
        return PGLElement(self.ctx, self.d, -self.b, -self.c, self.a)

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def is_identity(self):
        return not self.b and not self.c and self.a == self.d

    def order(self):
        k, x = 1, self
        while not x.is_identity():
            x = x * self
            k += 1
        return k

    def __call__(self, z):
        return act(self, z)

    def __str__(self):
        return "[[{}, {}], [{}, {}]]".format(*self.entries)

    def serialize(self):
        return [x.serialize() for x in self.entries]


def act(A, z):
    """z -> (a z + b) / (c z + d) with the usual conventions at infinity."""
    if z is INF:
        return INF if not A.c else A.a / A.c
    if z.ctx != A.ctx:
        raise MixedContexts("point and element over different fields")
    den = A.c * z + A.d
    if not den:
        return INF
    return (A.a * z + A.b) / den


def enumerate_pgl(ctx):
    """All q^3 - q normalized elements, sorted by entry codes."""
    if ctx.q > PGL_LIMIT:
        raise TooLarge(f"PGL(2,{ctx.q}) enumeration is limited to q <= {PGL_LIMIT}")
    elems = ctx.elements()
    zero, one = ctx.zero, ctx.one
    out = []
    for c in ctx.nonzero():
        for d in elems:
            out.append(PGLElement(ctx, zero, one, c, d))
    for b in elems:
        for c in elems:
            for d in elems:
                if d - b * c:
                    out.append(PGLElement(ctx, one, b, c, d))
    return sorted(out)


class ElementClass(str, enum.Enum):
    IDENTITY = "Identity"
    SPLIT = "Split"
    NONSPLIT = "NonSplit"
    UNIPOTENT = "Unipotent"


def fixed_points(A):
    return [z for z in p1_points(A.ctx) if act(A, z) == z]


def classify_by_fixed_points(A):
    n = len(fixed_points(A))
    if n == A.ctx.q + 1:
        return ElementClass.IDENTITY
    return {2: ElementClass.SPLIT, 1: ElementClass.UNIPOTENT, 0: ElementClass.NONSPLIT}[n]


def classify_by_char_poly(A):
    """Classification from the roots of lambda^2 - tr(A) lambda + det(A) in F_q."""
    if A.is_identity():
        return ElementClass.IDENTITY
    tr, det = A.trace(), A.det()
    roots = [x for x in A.ctx.elements() if not x * x - tr * x + det]
    return {2: ElementClass.SPLIT, 1: ElementClass.UNIPOTENT, 0: ElementClass.NONSPLIT}[len(roots)]


def classify(A):
    by_fix = classify_by_fixed_points(A)
    by_poly = classify_by_char_poly(A)
    assert by_fix == by_poly, (str(A), by_fix, by_poly)
    return by_fix


def subgroup_closure(generators, ctx=None):
    """Subgroup generated by ``generators`` (breadth-first over right multiplication)."""
    gens = list(generators)
    if not gens:
        if ctx is None:
            raise ValueError("need a field context for the trivial group")
        return frozenset([PGLElement.identity(ctx)])
    ctx = gens[0].ctx
    ident = PGLElement.identity(ctx)
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                if len(seen) > CLOSURE_LIMIT:
                    raise TooLarge(f"subgroup exceeds {CLOSURE_LIMIT} elements")
                queue.append(y)
    q = ctx.q
    assert (q**3 - q) % len(seen) == 0, "Lagrange violated"
    return frozenset(seen)


def affine_subgroup(ctx):
    """The stabilizer of infinity: z -> a z + b, of order q^2 - q."""
    if ctx.q > PGL_LIMIT:
        raise TooLarge(f"limited to q <= {PGL_LIMIT}")
    zero = ctx.zero
    return frozenset(
        PGLElement(ctx, ctx.one, b, zero, d) for b in ctx.elements() for d in ctx.nonzero()
    )


def is_closed(group):
    group = set(group)
    return all(g * h in group for g in group for h in group)


def is_abelian(group):
    group = list(group)
    return all(g * h == h * g for i, g in enumerate(group) for h in group[i + 1:])


def orbits_on_p1(subgroup):
    """Orbits of a subgroup on P^1(F_q), each sorted, listed by smallest point.

    The orbit-stabilizer relation is asserted for every orbit.
    """
    group = list(subgroup)
    if not group:
        raise NotClosed("empty set is not a group")
    if not is_closed(group):
        raise NotClosed("set is not closed under composition")
    ctx = group[0].ctx
    seen = set()
    orbits = []
    for z in p1_points(ctx):
        if z in seen:
            continue
        orbit = {act(g, z) for g in group}
        stab = sum(1 for g in group if act(g, z) == z)
        assert len(orbit) * stab == len(group), "orbit-stabilizer violated"
        seen |= orbit
        orbits.append(sorted(orbit, key=_p1_key))
    return orbits


def triangle_is_hyperbolic(r, s, t):
    """1/r + 1/s + 1/t < 1 for the triangle group <x,y,z | x^r = y^s = z^t = xyz = 1>."""
    if min(r, s, t) < 2:
        raise OutOfRange("triangle group exponents must be at least 2")
    return Fraction(1, r) + Fraction(1, s) + Fraction(1, t) < 1


def _is_square(x):
    return x ** ((x.ctx.q - 1) // 2) == 1 if x.ctx.p != 2 else True


def psl_elements(ctx):
    """Image of SL(2, q) in PGL(2, q): classes whose determinant is a square."""
    return [A for A in enumerate_pgl(ctx) if _is_square(A.det())]


def psl_order(q_or_ctx):
    from .ffield import field_of_size

    ctx = field_of_size(q_or_ctx) if isinstance(q_or_ctx, int) else q_or_ctx
    return len(psl_elements(ctx))


def pgl_order(ctx):
    return len(enumerate_pgl(ctx))
