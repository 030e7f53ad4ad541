"""Points and lines of projective spaces over finite fields."""

import itertools
from dataclasses import dataclass

from .errors import MixedContexts, OutOfRange


@dataclass(frozen=True)
class ProjPoint:
    """A point of P^dim(F_q), stored as its representative whose first nonzero
    coordinate is 1."""

    ctx: object
    coords: tuple

    def __post_init__(self):
        if not any(self.coords):
            raise ValueError("the zero vector is not a projective point")
        lead = next(c for c in self.coords if c)
        if lead != 1:
            inv = lead.inverse()
            object.__setattr__(self, "coords", tuple(c * inv for c in self.coords))

    @classmethod
    def of(cls, ctx, *coords):
        return cls(ctx, tuple(ctx(c) for c in coords))

    @property
    def dim(self):
        return len(self.coords) - 1

    def __str__(self):
        return "(" + ":".join(str(c) for c in self.coords) + ")"


# A line of P^2 is the projective point of its dual coefficients (a0:a1:a2),
# i.e. the set {x : a0 x0 + a1 x1 + a2 x2 = 0}.
Line = ProjPoint


def enumerate_proj(ctx, dim):
    """All points of P^dim(F_q), lexicographic over normalized coordinate tuples."""
    if dim < 0:
        raise OutOfRange("dimension must be non-negative")
    elems = ctx.elements()
    zero, one = ctx.zero, ctx.one
    out = []
    # leading-1 position from the right end first keeps the tuple order lexicographic
    for lead in range(dim, -1, -1):
        head = (zero,) * lead + (one,)
        for tail in itertools.product(elems, repeat=dim - lead):
            out.append(ProjPoint(ctx, head + tail))
    return out


def count_proj(ctx, dim):
    return len(enumerate_proj(ctx, dim))


def incident(point, line):
    if point.ctx != line.ctx:
        raise MixedContexts("point and line live over different fields")
    if len(point.coords) != len(line.coords):
        raise ValueError("point and line dimensions differ")
    acc = point.ctx.zero
    for a, x in zip(line.coords, point.coords):
        acc = acc + a * x
    return not acc


def lines_in_plane(ctx):
    return enumerate_proj(ctx, 2)


def points_on_line(line, points=None):
    if points is None:
        points = enumerate_proj(line.ctx, 2)
    return [pt for pt in points if incident(pt, line)]
