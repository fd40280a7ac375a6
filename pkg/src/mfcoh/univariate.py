"""Dense univariate polynomials over Q (coefficient lists, lowest degree first).

Used for eliminants and characteristic polynomials, where everything is
univariate and a dense representation is both simpler and faster.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import InputError
from .poly import PolyRing, Polynomial

T_RING = PolyRing(("t",))


def trim(a):
    a = [Fraction(c) for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def from_poly(p: Polynomial):
    if p.ring.nvars != 1:
        raise InputError("expected a univariate polynomial")
    deg = max((e[0] for e in p.terms), default=-1)
    out = [Fraction(0)] * (deg + 1)
    for (k,), c in p.terms.items():
        out[k] = c
    return out


def to_poly(a, ring: PolyRing = T_RING) -> Polynomial:
    return Polynomial(ring, {(k,): c for k, c in enumerate(a) if c})


def degree(a) -> int:
    return len(trim(a)) - 1


def monic(a):
    a = trim(a)
    if not a:
        return a
    lc = a[-1]
    return [c / lc for c in a]


def mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def divmod_(a, b):
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lb = b[-1]
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] / lb
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] -= c * y
        r = trim(r)
    return trim(q), r


def gcd(a, b):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_(a, b)[1]
    return monic(a)


def derivative(a):
    return trim([k * c for k, c in enumerate(a)][1:])


def squarefree_part(a):
    a = trim(a)
    if len(a) <= 1:
        return monic(a)
    g = gcd(a, derivative(a))
    return monic(divmod_(a, g)[0])


def shift(a, c):
    """Coefficients of ``a(t + c)``."""
    c = Fraction(c)
    out = [Fraction(0)] * len(a)
    for k, ak in enumerate(a):
        if ak:
            for j in range(k + 1):
                out[j] += ak * comb(k, j) * c ** (k - j)
    return trim(out)


def evaluate(a, x):
    v = Fraction(0)
    for c in reversed(a):
        v = v * x + c
    return v


def divides_power(d, a, max_power=None):
    """True iff ``d`` divides some power of ``a`` (checks up to ``deg d``)."""
    d = trim(d)
    if len(d) <= 1:
        return True
    power = [Fraction(1)]
    for _ in range(max_power or len(d)):
        power = divmod_(mul(power, a), d)[1]
        if not power:
            return True
    return False


def factor(a):
    """Irreducible factorization over Q: list of ``(monic factor, multiplicity)``."""
    import sympy

    a = trim(a)
    if len(a) <= 1:
        return []
    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t**k for k, c in enumerate(a))
    _, factors = sympy.factor_list(sympy.Poly(expr, t, domain="QQ"))
    out = []
    for fac, mult in factors:
        coeffs = [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in reversed(fac.all_coeffs())]
        out.append((monic(coeffs), int(mult)))
    out.sort(key=lambda fm: (len(fm[0]), [(c.numerator, c.denominator) for c in fm[0]]))
    return out


def split_rational(a):
    """Rational roots with multiplicity, and the remaining nonlinear irreducible factors."""
    roots, others = [], []
    for fac, mult in factor(a):
        if len(fac) == 2:
            roots.append((-fac[0], mult))
        else:
            others.append((fac, mult))
    roots.sort()
    return roots, others


def to_str(a, var="t") -> str:
    return str(to_poly(a, PolyRing((var,))))
