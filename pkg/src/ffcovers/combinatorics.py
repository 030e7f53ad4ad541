"""Stirling numbers, falling factorials and the census of covers y^d = f(x).

The census keeps two numbers apart: the closed-form count built from falling
factorials divided by q^2 - q (``cover_count_formula``), and an exhaustive
orbit count of monic polynomials under x -> ax + b (``census_covers_oracle``).
Neither is assumed to equal the other.
"""

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import OutOfRange, TooLarge
from .ffield import Poly

CENSUS_LIMIT = 10**7
ORACLE_LIMIT = 10**6


@lru_cache(maxsize=None)
def stirling_unsigned(n, k):
    """Unsigned Stirling number of the first kind, c(n, k)."""
    if n < 0 or k < 0 or k > n:
        raise OutOfRange(f"need 0 <= k <= n, got n={n}, k={k}")
    if n == 0:
        return 1
    if k == 0:
        return 0
    below = stirling_unsigned(n - 1, k) if k <= n - 1 else 0
    return stirling_unsigned(n - 1, k - 1) + (n - 1) * below


def stirling_signed(n, k):
    return (-1) ** (n - k) * stirling_unsigned(n, k)


def falling_factorial(q, k):
    if k < 0:
        raise OutOfRange("k must be non-negative")
    out = 1
    for i in range(k):
        out *= q - i
    return out


def check_stirling_identity(q, n):
    """Whether (q)_n == sum_k s(n, k) q^k holds exactly."""
    return falling_factorial(q, n) == sum(stirling_signed(n, k) * q**k for k in range(n + 1))


def stirling_table(n_max):
    """Rows ``[n, c(n,0), ..., c(n,n)]`` for n = 0..n_max."""
    return [[n] + [stirling_unsigned(n, k) for k in range(n + 1)] for n in range(n_max + 1)]


def cover_count_formula(q, n):
    """(sum_{k=1}^{n} (q)_k) / (q^2 - q) as an exact rational."""
    if q < 2:
        raise OutOfRange("q must be at least 2")
    if n < 0:
        raise OutOfRange("n must be non-negative")
    return Fraction(sum(falling_factorial(q, k) for k in range(1, n + 1)), q * q - q)


def falling_factorial_claim(q, n):
    """The alternative closed form (q - 2)_n, reported next to the formula above."""
    return falling_factorial(q - 2, n)


def _monic_polys(ctx, n):
    elems = ctx.elements()
    one = ctx.one
    for tail in itertools.product(elems, repeat=n):
        yield Poly(ctx, tail + (one,))


def _distinct_roots_in_field(f, elems):
    return sum(1 for r in elems if not f(r))


def census_polys_by_distinct_roots(ctx, n):
    """Exhaustive table k -> number of monic degree-n polynomials over F_q with
    exactly k distinct roots in F_q."""
    if n < 0:
        raise OutOfRange("degree must be non-negative")
    if ctx.q**n > CENSUS_LIMIT:
        raise TooLarge(f"{ctx.q}^{n} polynomials exceeds {CENSUS_LIMIT}")
    elems = ctx.elements()
    table = {k: 0 for k in range(min(n, ctx.q) + 1)}
    for f in _monic_polys(ctx, n):
        table[_distinct_roots_in_field(f, elems)] += 1
    return table


def affine_substitute(f, a, b):
    """Monic normalization of f(a x + b)."""
    ctx = f.ctx
    lin = Poly(ctx, [b, a])
    acc = Poly(ctx)
    for c in reversed(f.coeffs):
        acc = acc * lin + c
    return acc.monic()


@dataclass
class CensusReport:
    q: int
    cover_degree: int
    poly_degree: int
    formula_value: Fraction
    oracle_value: int
    burnside_value: Fraction
    falling_factorial_claim: int
    by_root_count: dict = field(default_factory=dict)
    orbit_sizes: list = field(default_factory=list)

    @property
    def consistent(self):
        return (
            self.burnside_value == self.oracle_value
            and sum(c for _, c in self.by_root_count.values()) == self.q**self.poly_degree
            and sum(self.orbit_sizes) == self.q**self.poly_degree
        )

    def to_dict(self):
        return {
            "q": self.q,
            "cover_degree": self.cover_degree,
            "poly_degree": self.poly_degree,
            "formula_value": self.formula_value,
            "oracle_value": self.oracle_value,
            "burnside_value": self.burnside_value,
            "falling_factorial_claim": self.falling_factorial_claim,
            "by_root_count": {
                str(k): {"falling_factorial": ff, "count": c}
                for k, (ff, c) in sorted(self.by_root_count.items())
            },
            "orbit_sizes": sorted(self.orbit_sizes),
            "consistent": self.consistent,
        }


def census_covers_oracle(ctx, d, n):
    """Count classes of covers y^d = f(x), f monic of degree n, up to x -> ax + b.

    The orbit partition is computed directly and cross-checked with Burnside's
    lemma; a mismatch raises AssertionError.  ``d`` does not enter the orbit
    count (only the affine x-action is quotiented) and is recorded as given.
    """
    q = ctx.q
    if n < 0:
        raise OutOfRange("degree must be non-negative")
    if q**n > ORACLE_LIMIT:
        raise TooLarge(f"{q}^{n} polynomials exceeds {ORACLE_LIMIT}")
    group = [(a, b) for a in ctx.nonzero() for b in ctx.elements()]
    polys = list(_monic_polys(ctx, n))
    elems = ctx.elements()

    seen = set()
    orbit_sizes = []
    fixed_total = 0
    roots = {}
    for f in polys:
        roots_f = _distinct_roots_in_field(f, elems)
        roots[roots_f] = roots.get(roots_f, 0) + 1
        images = set()
        for a, b in group:
            g = affine_substitute(f, a, b)
            images.add(g)
            if g == f:
                fixed_total += 1
        if f not in seen:
            seen |= images
            orbit_sizes.append(len(images))

    burnside = Fraction(fixed_total, len(group))
    if burnside != len(orbit_sizes):
        raise AssertionError(f"Burnside count {burnside} != orbit count {len(orbit_sizes)}")

    by_root = {k: (falling_factorial(q, k), roots.get(k, 0)) for k in range(min(n, q) + 1)}
    return CensusReport(
        q=q,
        cover_degree=d,
        poly_degree=n,
        formula_value=cover_count_formula(q, n),
        oracle_value=len(orbit_sizes),
        burnside_value=burnside,
        falling_factorial_claim=falling_factorial_claim(q, n),
        by_root_count=by_root,
        orbit_sizes=orbit_sizes,
    )


def binomial_distinct_roots(q, n):
    """Monic degree-n polynomials with n distinct roots in F_q: C(q, n) = (q)_n / n!."""
    return math.comb(q, n)
