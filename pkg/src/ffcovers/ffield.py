"""Finite fields F_p and F_{p^n} with univariate polynomials over them.

An element of F_{p^n} = F_p[t]/(m(t)) is stored as an integer code
``c_0 + c_1 p + ... + c_{n-1} p^{n-1}`` where ``c_i`` are the coefficients of
its representative polynomial in ``t``.  Enumeration order is code order, so
the prime subfield F_p always comes first (0, 1, ..., p-1).

Multiplication in extension fields goes through exp/log tables built once per
context from a primitive element, which keeps the brute-force counting loops
elsewhere in the package fast enough at desk scale.
"""

import functools
import itertools
import math

from .errors import (
    DegreeZero,
    DivisionByZero,
    IncompatibleFields,
    MixedContexts,
    NotIrreducible,
    NotPrime,
    ParseError,
    TooLarge,
)

MAX_FIELD_SIZE = 10**5


def is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def prime_power(q):
    """Return ``(p, n)`` with ``q == p**n``, or raise NotPrime."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = next(f for f in itertools.count(2) if q % f == 0)
    n, r = 0, q
    while r % p == 0:
        r //= p
        n += 1
    if r != 1:
        raise NotPrime(f"{q} is not a prime power")
    return p, n


# -- dense polynomials over F_p as int lists (constant term first) ----------

def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(_fp_trim(a)) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
    return a


def _fp_is_irreducible(m, p):
    # trial division by every monic polynomial of degree 1..deg/2
    deg = len(m) - 1
    if deg < 1:
        return False
    for k in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=k):
            if not _fp_mod(m, list(tail) + [1], p):
                return False
    return True


class FieldCtx:
    """The field F_{p^n} = F_p[t]/(modulus).

    ``modulus`` is the coefficient tuple of a monic irreducible polynomial of
    degree ``n``, constant term first.  Contexts compare by value.
    """

    def __init__(self, p, n=1, modulus=None):
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if n < 1:
            raise DegreeZero("extension degree must be at least 1")
        if modulus is None:
            modulus = _smallest_irreducible(p, n)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise NotIrreducible(f"modulus must be monic of degree {n}")
        if not _fp_is_irreducible(list(modulus), p):
            raise NotIrreducible(f"{modulus} is reducible over F_{p}")
        self.p = p
        self.n = n
        self.modulus = modulus
        self.q = p**n
        if self.q > MAX_FIELD_SIZE:
            raise TooLarge(f"field of size {self.q} exceeds desk scale")
        self._exp = None
        self._log = None

    # value semantics
    def _key(self):
        return (self.p, self.n, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __getstate__(self):
        return {"p": self.p, "n": self.n, "modulus": self.modulus, "q": self.q,
                "_exp": None, "_log": None}

    def __repr__(self):
        if self.n == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.n}, modulus={list(self.modulus)})"

    def __len__(self):
        return self.q

    def __iter__(self):
        return iter(self.elements())

    def __call__(self, value):
        """Coerce an integer (its image under Z -> F_p) or element into the field."""
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise MixedContexts(f"{value!r} is not in {self!r}")
            return value
        return FieldElement(self, int(value) % self.p)

    # construction helpers
    def from_code(self, code):
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range for {self!r}")
        return FieldElement(self, code)

    def from_coeffs(self, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) > self.n:
            raise ValueError(f"too many coefficients for degree {self.n} field")
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + int(c) % self.p
        return FieldElement(self, code)

    def gen(self):
        """The class of ``t`` (equal to 0 when n == 1, since the modulus is ``x``)."""
        if self.n == 1:
            return FieldElement(self, (-self.modulus[0]) % self.p)
        return FieldElement(self, self.p)

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    def elements(self):
        return [FieldElement(self, c) for c in range(self.q)]

    def nonzero(self):
        return [FieldElement(self, c) for c in range(1, self.q)]

    # code-level arithmetic
    def digits(self, code):
        out = []
        for _ in range(self.n):
            code, r = divmod(code, self.p)
            out.append(r)
        return tuple(out)

    def _undigits(self, ds):
        code = 0
        for c in reversed(ds):
            code = code * self.p + c
        return code

    def _add(self, a, b):
        if self.n == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        da, db = self.digits(a), self.digits(b)
        return self._undigits([(x + y) % p for x, y in zip(da, db)])

    def _neg(self, a):
        if self.n == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self._undigits([(-x) % self.p for x in self.digits(a)])

    def _raw_mul(self, a, b):
        p = self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.n - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        r = _fp_mod(prod, list(self.modulus), p)
        return self._undigits(r + [0] * (self.n - len(r)))

    def _tables(self):
        if self._exp is None:
            q = self.q
            for g in range(2, q):
                exp = [1]
                x = g
                while x != 1:
                    exp.append(x)
                    x = self._raw_mul(x, g)
                if len(exp) == q - 1:
                    break
            log = [0] * q
            for i, x in enumerate(exp):
                log[x] = i
            self._exp, self._log = exp, log
        return self._exp, self._log

    def _mul(self, a, b):
        if self.n == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        exp, log = self._tables()
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def _inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.n == 1:
            return pow(a, -1, self.p)
        exp, log = self._tables()
        return exp[(-log[a]) % (self.q - 1)]

    def primitive_element(self):
        if self.n == 1:
            for g in range(1, self.p):
                if _order_mod(g, self.p) == self.p - 1:
                    return FieldElement(self, g)
        exp, _ = self._tables()
        return FieldElement(self, exp[1] if self.q > 2 else 1)


def _order_mod(g, p):
    k, x = 1, g % p
    while x != 1:
        x = x * g % p
        k += 1
    return k


@functools.lru_cache(maxsize=None)
def _smallest_irreducible(p, n):
    if n == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=n):
        m = list(tail) + [1]
        if _fp_is_irreducible(m, p):
            return tuple(m)
    raise AssertionError("an irreducible polynomial of every degree exists")


@functools.lru_cache(maxsize=None)
def make_field(p, n=1):
    """The field F_{p^n} whose modulus is the lexicographically smallest monic
    irreducible of degree ``n`` (coefficient tuples compared constant term first)."""
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise DegreeZero("extension degree must be at least 1")
    return FieldCtx(p, n)


def field_of_size(q):
    p, n = prime_power(q)
    return make_field(p, n)


@functools.total_ordering
class FieldElement:
    """Immutable element of a :class:`FieldCtx`."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx, code):
        self.ctx = ctx
        self.code = code

    @property
    def coeffs(self):
        return self.ctx.digits(self.code)

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise MixedContexts(f"{self.ctx!r} vs {other.ctx!r}")
            return other.code
        if isinstance(other, int):
            return other % self.ctx.p
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx._add(self.code, b))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx._neg(self.code))

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx._add(self.code, self.ctx._neg(b)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx._mul(self.code, b))

    __rmul__ = __mul__

    def inverse(self):
        return FieldElement(self.ctx, self.ctx._inv(self.code))

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx._mul(self.code, self.ctx._inv(b)))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if e < 0:
            base, e = self.inverse().code, -e
        else:
            base = self.code
        ctx = self.ctx
        result = 1
        while e:
            if e & 1:
                result = ctx._mul(result, base)
            base = ctx._mul(base, base)
            e >>= 1
        return FieldElement(ctx, result)

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.code == other.code and self.ctx == other.ctx
        if isinstance(other, int):
            return self.code == other % self.ctx.p
        return NotImplemented

    def __lt__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.code < other.code

    def __hash__(self):
        return hash((self.ctx.q, self.code))

    def __int__(self):
        if self.code >= self.ctx.p:
            raise ValueError(f"{self} is not in the prime subfield")
        return self.code

    def is_prime_subfield(self):
        return self.code < self.ctx.p

    def __repr__(self):
        return f"FieldElement({self})"

    def __str__(self):
        if self.ctx.n == 1:
            return str(self.code)
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            coef = "" if c == 1 and i else str(c)
            terms.append(coef + mono)
        return "+".join(terms) or "0"

    def serialize(self):
        """``p^n:[c0,c1,...]`` for extension fields, a bare int for prime fields."""
        if self.ctx.n == 1:
            return self.code
        return f"{self.ctx.p}^{self.ctx.n}:[{','.join(map(str, self.coeffs))}]"


def frobenius(a):
    return a ** a.ctx.p


def enumerate_field(ctx):
    return ctx.elements()


@functools.lru_cache(maxsize=None)
def _embedding_image(source, target):
    if source.p != target.p or target.n % source.n:
        raise IncompatibleFields(f"cannot embed {source!r} into {target!r}")
    if source.n == 1:
        return target.one
    for r in target.elements():
        acc = target.zero
        for c in reversed(source.modulus):
            acc = acc * r + c
        if not acc:
            return r
    raise AssertionError("an irreducible of degree dividing n has roots in F_{p^n}")


def embed(a, target):
    """Image of ``a`` under F_{p^n} -> F_{p^{nm}}, sending t to the first root of
    the source modulus in the target's enumeration order."""
    r = _embedding_image(a.ctx, target)
    acc = target.zero
    for c in reversed(a.coeffs):
        acc = acc * r + c
    return acc


def nth_power_root_count(c, n):
    """Number of ``y`` in the field of ``c`` with ``y**n == c``."""
    if n < 1:
        raise ValueError("n must be positive")
    if not c:
        return 1
    q = c.ctx.q
    g = math.gcd(n, q - 1)
    return g if c ** ((q - 1) // g) == 1 else 0


# -- polynomials over a FieldCtx --------------------------------------------

class _MinusInfinity:
    """Degree of the zero polynomial: below every integer, refuses arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return self is not other

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return self is other

    def __repr__(self):
        return "-inf"


MINUS_INFINITY = _MinusInfinity()


class Poly:
    """Univariate polynomial over a field, coefficients constant term first."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs=()):
        cs = [ctx(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls, ctx):
        return cls(ctx, [0, 1])

    @classmethod
    def from_roots(cls, ctx, roots):
        f = cls(ctx, [1])
        for r in roots:
            f = f * cls(ctx, [-ctx(r), 1])
        return f

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    def is_zero(self):
        return not self.coeffs

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.ctx.zero

    def _check(self, other):
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise MixedContexts(f"{self.ctx!r} vs {other.ctx!r}")
            return other
        return Poly(self.ctx, [other])

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(self.ctx, [x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly(self.ctx)
        out = [self.ctx.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return Poly(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = Poly(self.ctx, [1])
        for _ in range(e):
            out = out * self
        return out

    def __divmod__(self, other):
        other = self._check(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv_lead = other.lead.inverse()
        quot = [self.ctx.zero] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            c = rem[-1] * inv_lead
            shift = len(rem) - 1 - db
            quot[shift] = c
            for i, b in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - c * b
            rem.pop()
            while rem and not rem[-1]:
                rem.pop()
        return Poly(self.ctx, quot), Poly(self.ctx, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        """Horner evaluation at a field element."""
        acc = self.ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return Poly(self.ctx, [c * i for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if self.is_zero():
            return self
        inv = self.lead.inverse()
        return Poly(self.ctx, [c * inv for c in self.coeffs])

    def gcd(self, other):
        a, b = self, self._check(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def is_squarefree(self):
        if self.is_zero():
            return False
        return self.gcd(self.derivative()).degree == 0

    def roots_in_field(self):
        """Map each root in the base field to its multiplicity."""
        if self.is_zero():
            raise ValueError("every element is a root of the zero polynomial")
        roots = {}
        for r in self.ctx.elements():
            f, m = self, 0
            lin = Poly(self.ctx, [-r, 1])
            while True:
                quot, rem = divmod(f, lin)
                if not rem.is_zero():
                    break
                f, m = quot, m + 1
            if m:
                roots[r] = m
        return roots

    def is_irreducible(self):
        """Trial division by every monic polynomial of degree up to deg/2."""
        d = self.degree
        if d is MINUS_INFINITY or d < 1:
            return False
        elems = self.ctx.elements()
        for k in range(1, d // 2 + 1):
            for tail in itertools.product(elems, repeat=k):
                if (self % Poly(self.ctx, list(tail) + [1])).is_zero():
                    return False
        return True

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                coef = "" if c == 1 and i else f"({c})" if self.ctx.n > 1 else str(c)
                terms.append(coef + mono)
        return "Poly(" + " + ".join(terms) + ")"


def parse_element(ctx, text):
    """Read a field-element literal.

    Accepted forms: an integer (its image in the prime subfield), a coefficient
    list ``[c0,c1,...]``, or the serialized form ``p^n:[c0,c1,...]``.
    """
    s = str(text).strip()
    if ":" in s:
        head, s = s.split(":", 1)
        try:
            p, n = (int(v) for v in head.split("^"))
        except ValueError:
            raise ParseError(f"bad field tag {head!r}") from None
        if (p, n) != (ctx.p, ctx.n):
            raise MixedContexts(f"literal for GF({p}^{n}) used in {ctx!r}")
    try:
        if s.startswith("["):
            inner = s.strip("[]").strip()
            return ctx.from_coeffs([int(v) for v in inner.split(",")] if inner else [])
        return ctx(int(s))
    except ValueError:
        raise ParseError(f"bad field element literal {text!r}") from None
