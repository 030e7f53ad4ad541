"""Zeta functions of curves from point counts.

Z(t) = exp(sum_r N_r t^r / r) = P(t) / ((1 - t)(1 - q t)) with P(t) of degree
2g.  Writing P(t) = prod (1 - alpha_i t), the power sums of the inverse roots
are S_r = q^r + 1 - N_r and Newton's identities give the coefficients of P.
Everything here is exact except :func:`weil_magnitude_check`.
"""

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import NonIntegerCoefficient, NumericalFailure


@dataclass(frozen=True)
class ZetaNumerator:
    q: int
    g: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(b) for b in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) != 2 * self.g + 1:
            raise ValueError(f"expected {2 * self.g + 1} coefficients, got {len(coeffs)}")
        if coeffs[0] != 1:
            raise ValueError("P(0) must be 1")
        if not satisfies_functional_equation(self.q, self.g, coeffs):
            raise ValueError(f"{coeffs} violates b_(2g-i) = q^(g-i) b_i")

    def __call__(self, t):
        return sum(b * t**i for i, b in enumerate(self.coeffs))

    def __str__(self):
        terms = []
        for i, b in enumerate(self.coeffs):
            if b:
                terms.append(f"{b}" if i == 0 else f"{b}*t" if i == 1 else f"{b}*t^{i}")
        return " + ".join(terms)


def satisfies_functional_equation(q, g, coeffs):
    return all(coeffs[2 * g - i] == q ** (g - i) * coeffs[i] for i in range(g + 1))


def _power_sums(coeffs, upto):
    # S_k = -k b_k - sum_{j=1}^{k-1} S_j b_{k-j}, with b_k = 0 beyond the degree
    b = list(coeffs) + [0] * max(0, upto + 1 - len(coeffs))
    sums = [None]
    for k in range(1, upto + 1):
        sums.append(-k * b[k] - sum(sums[j] * b[k - j] for j in range(1, k)))
    return sums


def fit_numerator(q, g, counts):
    """Recover P(t) from N_1..N_g; the top half follows from the functional equation."""
    counts = list(counts)
    if len(counts) != g:
        raise ValueError(f"need exactly g = {g} counts, got {len(counts)}")
    if any(n < 0 for n in counts):
        raise ValueError("point counts must be non-negative")
    sums = [q**r + 1 - n for r, n in enumerate(counts, start=1)]
    b = [Fraction(1)]
    for k in range(1, g + 1):
        b.append(-sum(sums[j - 1] * b[k - j] for j in range(1, k + 1)) / k)
    for i, bi in enumerate(b):
        if bi.denominator != 1:
            raise NonIntegerCoefficient(f"b_{i} = {bi} is not an integer")
    b = [int(x) for x in b]
    full = b + [q ** (g - i) * b[i] for i in range(g - 1, -1, -1)]
    return ZetaNumerator(q, g, tuple(full))


def predict_count(zn, r):
    if r < 1:
        raise ValueError("r must be positive")
    return zn.q**r + 1 - _power_sums(zn.coeffs, r)[r]


def predicted_counts(zn, upto):
    sums = _power_sums(zn.coeffs, upto)
    return {r: zn.q**r + 1 - sums[r] for r in range(1, upto + 1)}


def _exp_series(log_coeffs, order):
    # E = exp(L): k e_k = sum_{j=1}^k j c_j e_{k-j}
    e = [Fraction(1)]
    for k in range(1, order + 1):
        e.append(sum(j * log_coeffs[j] * e[k - j] for j in range(1, k + 1)) / k)
    return e


def zeta_series_from_counts(counts, order):
    log_coeffs = [Fraction(0)] + [Fraction(n, r) for r, n in enumerate(counts[:order], start=1)]
    return _exp_series(log_coeffs, order)


def zeta_series_from_numerator(zn, order):
    q = zn.q
    # 1/((1-t)(1-qt)) = sum_k (1 + q + ... + q^k) t^k
    denom = [sum(q**i for i in range(k + 1)) for k in range(order + 1)]
    b = list(zn.coeffs) + [0] * (order + 1)
    return [Fraction(sum(b[i] * denom[k - i] for i in range(k + 1))) for k in range(order + 1)]


def series_consistency(zn, counts, order):
    """Compare exp(sum N_r t^r / r) with P(t)/((1-t)(1-qt)) through t^order."""
    if order > len(counts):
        raise ValueError("order exceeds the number of supplied counts")
    return zeta_series_from_counts(list(counts), order) == zeta_series_from_numerator(zn, order)


def _qdivmod(f, g):
    # polynomials over Q as coefficient lists, highest degree first
    f = list(f)
    out = []
    while len(f) >= len(g):
        c = f[0] / g[0]
        out.append(c)
        for i, gi in enumerate(g):
            f[i] -= c * gi
        f.pop(0)
    while f and f[0] == 0:
        f.pop(0)
    return out, f


def _qsub(f, g):
    n = max(len(f), len(g))
    out = [x - y for x, y in zip([0] * (n - len(f)) + f, [0] * (n - len(g)) + g)]
    while out and out[0] == 0:
        out.pop(0)
    return out


def _qgcd(f, g):
    while g:
        f, g = g, _qdivmod(f, g)[1]
    return [c / f[0] for c in f]


def _squarefree_parts(coeffs):
    """Yun's algorithm: [(a_1, 1), (a_2, 2), ...] with f = c * prod a_i^i."""
    f = [Fraction(c) for c in coeffs]
    deriv = [c * (len(f) - 1 - i) for i, c in enumerate(f[:-1])]
    a = _qgcd(f, deriv)
    b = _qdivmod(f, a)[0]
    c = _qdivmod(deriv, a)[0]
    parts, k = [], 1
    while len(b) > 1:
        bd = [x * (len(b) - 1 - i) for i, x in enumerate(b[:-1])]
        d = _qsub(c, bd)
        a = _qgcd(b, d) if d else [c_ / b[0] for c_ in b]
        if len(a) > 1:
            parts.append((a, k))
        b = _qdivmod(b, a)[0]
        c = _qdivmod(d, a)[0] if d else [Fraction(0)]
        k += 1
    return parts


def inverse_roots(zn, dps=50):
    """Numerical inverse roots alpha_i of P (roots of t^{2g} P(1/t)).

    P is split into squarefree parts over Q first; repeated roots are common
    (maximal curves) and stall the simultaneous iteration otherwise.
    """
    if zn.g == 0:
        return []
    roots = []
    with mpmath.workdps(dps):
        for part, mult in _squarefree_parts(zn.coeffs):
            coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in part]
            try:
                found = [mpmath.mpf(-coeffs[1] / coeffs[0])] if len(part) == 2 else \
                    mpmath.polyroots(coeffs, maxsteps=200, extraprec=4 * dps)
            except mpmath.libmp.libhyper.NoConvergence as exc:
                raise NumericalFailure(str(exc)) from exc
            roots.extend(found * mult)
    return roots


def weil_magnitude_check(zn, tolerance=1e-9):
    """Whether every inverse root has absolute value within ``tolerance``
    (relative) of sqrt(q)."""
    if zn.g < 1:
        raise ValueError("genus must be at least 1")
    roots = inverse_roots(zn)
    with mpmath.workdps(50):
        target = mpmath.sqrt(zn.q)
        return all(abs(abs(a) - target) <= tolerance * target for a in roots)
