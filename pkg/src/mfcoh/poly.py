"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is an immutable map from exponent tuples to nonzero
``Fraction`` coefficients, living in a :class:`PolyRing` that fixes the
variable names and a default monomial order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .errors import (
    InputError,
    PolynomialSyntaxError,
    RingMismatchError,
    UnknownVariableError,
)

Monomial = tuple  # tuple[int, ...] of length ring.nvars

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def _grevlex_key(exp):
    return (sum(exp),) + tuple(-e for e in reversed(exp))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order, realised as a sort key of plain integers.

    Keys are tuples of ints so that negating every component reverses the
    order; the Groebner engine relies on that for its max-heaps.
    """

    kind: str = "grevlex"
    weights: tuple = ()
    block: int = 0
    lex_block: bool = False  # lex rather than grevlex on the eliminated block

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "weighted", "block"):
            raise InputError(f"unknown monomial order {self.kind!r}")
        if self.kind == "weighted" and (
            not self.weights or any(int(w) != w or w <= 0 for w in self.weights)
        ):
            raise InputError("weighted order needs positive integer weights")
        if self.kind == "block" and self.block < 0:
            raise InputError("block size must be nonnegative")

    def key(self, exp) -> tuple:
        if self.kind == "grevlex":
            return _grevlex_key(exp)
        if self.kind == "lex":
            return tuple(exp)
        if self.kind == "weighted":
            return (sum(w * e for w, e in zip(self.weights, exp)),) + _grevlex_key(exp)
        k = self.block
        head = tuple(exp[:k]) if self.lex_block else _grevlex_key(exp[:k])
        return head + _grevlex_key(exp[k:])

    def __str__(self):
        if self.kind == "weighted":
            return "weighted(" + ",".join(map(str, self.weights)) + ")"
        if self.kind == "block":
            return f"elimination-block({self.block})"
        return self.kind


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def weighted(weights: Sequence[int]) -> MonomialOrder:
    return MonomialOrder("weighted", weights=tuple(int(w) for w in weights))


def elimination(k: int, lex_block: bool = False) -> MonomialOrder:
    """Block order eliminating the first ``k`` variables (grevlex in each block by default)."""
    return MonomialOrder("block", block=k, lex_block=lex_block)


@dataclass(frozen=True)
class PolyRing:
    variables: tuple
    order: MonomialOrder = GREVLEX
    _index: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        names = tuple(self.variables)
        object.__setattr__(self, "variables", names)
        for v in names:
            if not isinstance(v, str) or not _IDENT.match(v):
                raise InputError(f"invalid variable name {v!r}")
        if len(set(names)) != len(names):
            raise InputError(f"duplicate variable names in {names}")
        if self.order.kind == "weighted" and len(self.order.weights) != len(names):
            raise InputError("weight vector length must match the number of variables")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(names)})

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError(f"unknown variable {name!r} in ring {self.variables}") from None

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.variables, order)

    # constructors

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: c})

    def monomial(self, exp, c=1) -> "Polynomial":
        if len(exp) != self.nvars:
            raise InputError("exponent vector length does not match ring arity")
        return Polynomial(self, {tuple(exp): c})

    def var(self, name: str) -> "Polynomial":
        i = self.index(name)
        return self.monomial(tuple(int(j == i) for j in range(self.nvars)))

    def gens(self) -> tuple:
        return tuple(self.var(v) for v in self.variables)

    def parse(self, src: str) -> "Polynomial":
        return parse_polynomial(src, self)

    def __call__(self, src) -> "Polynomial":
        if isinstance(src, Polynomial):
            return src
        if isinstance(src, str):
            return parse_polynomial(src, self)
        return self.constant(src)

    def __str__(self):
        return "QQ[" + ",".join(self.variables) + "]"


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as an exact rational coefficient")


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to Fractions."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping = (), _trusted=False):
        self.ring = ring
        if _trusted:
            self.terms = terms
        else:
            clean = {}
            n = ring.nvars
            for exp, c in dict(terms).items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != n or any(e < 0 for e in exp):
                    raise InputError(f"bad exponent vector {exp} for ring of arity {n}")
                c = _coerce(c)
                if c:
                    clean[exp] = clean.get(exp, 0) + c
                    if not clean[exp]:
                        del clean[exp]
            self.terms = clean
        self._hash = None

    # basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, var: str) -> int:
        i = self.ring.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def variables_used(self) -> tuple:
        used = set()
        for e in self.terms:
            used.update(i for i, a in enumerate(e) if a)
        return tuple(v for i, v in enumerate(self.ring.variables) if i in used)

    def sorted_terms(self, order: MonomialOrder | None = None):
        key = (order or self.ring.order).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder | None = None):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        key = (order or self.ring.order).key
        return max(self.terms, key=key)

    def leading_coefficient(self, order: MonomialOrder | None = None) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        return self * (1 / self.leading_coefficient(order))

    # arithmetic

    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring.variables != self.ring.variables:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return Polynomial(self.ring, terms, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.ring.zero()
            return Polynomial(self.ring, {e: c * other for e, c in self.terms.items()}, _trusted=True)
        other = self._check(other)
        if other is NotImplemented:
            return other
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = terms.get(e, 0) + c1 * c2
                if v:
                    terms[e] = v
                else:
                    terms.pop(e, None)
        return Polynomial(self.ring, terms, _trusted=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise InputError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, exp, c=1) -> "Polynomial":
        c = _coerce(c)
        if not c:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(e, exp)): v * c for e, v in self.terms.items()},
            _trusted=True,
        )

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.terms == (self.ring.constant(other).terms)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.variables == other.ring.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.variables, frozenset(self.terms.items())))
        return self._hash

    # calculus and evaluation

    def diff(self, var: str) -> "Polynomial":
        i = self.ring.index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                terms[ne] = c * e[i]
        return Polynomial(self.ring, terms, _trusted=True)

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return evaluate_at_point(self, point)

    def subs(self, values: Mapping[str, "Polynomial | int | Fraction"]) -> "Polynomial":
        """Substitute variables by polynomials of the same ring (or constants)."""
        images = []
        for v in self.ring.variables:
            img = values.get(v)
            images.append(self.ring.var(v) if img is None else self.ring(img))
        return self.compose(images, self.ring)

    def compose(self, images: Sequence["Polynomial"], target: PolyRing) -> "Polynomial":
        """Ring map sending the i-th variable to ``images[i]`` in ``target``."""
        if len(images) != self.ring.nvars:
            raise InputError("need one image per variable")
        cache = {}

        def power(i, k):
            if (i, k) not in cache:
                cache[(i, k)] = images[i] ** k
            return cache[(i, k)]

        result = target.zero()
        for e, c in self.terms.items():
            term = target.constant(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def to_ring(self, target: PolyRing) -> "Polynomial":
        """Re-embed into a ring whose variables contain ours (matched by name)."""
        idx = [target.index(v) for v in self.ring.variables]
        terms = {}
        n = target.nvars
        for e, c in self.terms.items():
            ne = [0] * n
            for j, a in zip(idx, e):
                ne[j] = a
            terms[tuple(ne)] = c
        return Polynomial(target, terms, _trusted=True)

    # printing

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, {self.ring.variables})"


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial) -> str:
    """Render ``p`` in the input grammar so that parsing round-trips."""
    if not p.terms:
        return "0"
    names = p.ring.variables
    pieces = []
    for exp, c in p.sorted_terms():
        factors = []
        for name, k in zip(names, exp):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        mag = abs(c)
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_coeff(mag) + "*" + "*".join(factors)
        pieces.append(("-" if c < 0 else "+", body))
    head_sign, head = pieces[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# parser

_NUMBER = re.compile(r"\d+")
_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def _tokenize(src: str):
    tokens = []
    pos = 0
    while pos < len(src):
        ch = src[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _NUMBER.match(src, pos)
        if m:
            tokens.append(("num", m.group(), pos))
            pos = m.end()
            continue
        m = _NAME.match(src, pos)
        if m:
            tokens.append(("ident", m.group(), pos))
            pos = m.end()
            continue
        if ch not in "+-*^/()":
            raise PolynomialSyntaxError(f"unexpected character {ch!r}", src, pos)
        tokens.append(("op", ch, pos))
        pos += 1
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src, ring):
        self.src = src
        self.ring = ring
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise PolynomialSyntaxError(msg, self.src, tok[2])

    def expect(self, op):
        tok = self.peek()
        if tok[0] != "op" or tok[1] != op:
            self.fail(f"expected {op!r}")
        return self.take()

    def poly(self):
        negate = False
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "-":
            self.take()
            negate = True
        result = self.term()
        if negate:
            result = -result
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                t = self.term()
                result = result + t if tok[1] == "+" else result - t
            else:
                return result

    def term(self):
        result = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            result = result * self.factor()
        return result

    def factor(self):
        base = self.base()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            exp = self.peek()
            if exp[0] != "num":
                self.fail("expected a natural-number exponent")
            self.take()
            return base ** int(exp[1])
        return base

    def base(self):
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            value = Fraction(int(tok[1]))
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/":
                self.take()
                den = self.peek()
                if den[0] != "num":
                    raise PolynomialSyntaxError("malformed rational: missing denominator", self.src, den[2])
                self.take()
                if int(den[1]) == 0:
                    raise PolynomialSyntaxError("malformed rational: zero denominator", self.src, den[2])
                value /= int(den[1])
            return self.ring.constant(value)
        if tok[0] == "ident":
            self.take()
            if tok[1] not in self.ring.variables:
                raise UnknownVariableError(
                    f"unknown variable {tok[1]!r} at position {tok[2]} (ring {self.ring.variables})"
                )
            return self.ring.var(tok[1])
        if tok[0] == "op" and tok[1] == "(":
            self.take()
            inner = self.poly()
            self.expect(")")
            return inner
        if tok[0] == "end":
            self.fail("unexpected end of input")
        self.fail(f"unexpected token {tok[1]!r}")


def parse_polynomial(src: str, ring: PolyRing) -> Polynomial:
    if not isinstance(src, str):
        raise InputError("polynomial source must be a string")
    parser = _Parser(src, ring)
    result = parser.poly()
    if parser.peek()[0] != "end":
        parser.fail(f"unexpected token {parser.peek()[1]!r}")
    return result


def identifiers_in(src: str) -> list:
    """Identifiers occurring in ``src``, in natural sort order (x2 < x10)."""
    names = set(re.findall(r"[A-Za-z][A-Za-z0-9_]*", src))

    def natural(s):
        return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", s)]

    return sorted(names, key=natural)


def ring_from_sources(sources: Iterable[str], order: MonomialOrder = GREVLEX) -> PolyRing:
    names = identifiers_in(" ".join(sources))
    return PolyRing(tuple(names), order)


# operations on single polynomials

def partial_derivative(p: Polynomial, var: str) -> Polynomial:
    return p.diff(var)


def evaluate_at_point(p: Polynomial, point: Sequence) -> Fraction:
    if len(point) != p.ring.nvars:
        raise InputError(f"point has {len(point)} coordinates, ring has {p.ring.nvars}")
    pt = [_coerce(a) if not isinstance(a, Fraction) else a for a in point]
    total = Fraction(0)
    for e, c in p.terms.items():
        v = c
        for a, k in zip(pt, e):
            if k:
                v *= a ** k
        total += v
    return total


def divmod_poly(p: Polynomial, divisor: Polynomial, order: MonomialOrder | None = None):
    """Multivariate division by a single polynomial: ``p = q*divisor + r``."""
    if divisor.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    order = order or p.ring.order
    lm = divisor.leading_monomial(order)
    lc = divisor.terms[lm]
    q = {}
    r = {}
    rest = p
    while rest.terms:
        m = rest.leading_monomial(order)
        c = rest.terms[m]
        if all(a >= b for a, b in zip(m, lm)):
            shift = tuple(a - b for a, b in zip(m, lm))
            q[shift] = q.get(shift, 0) + c / lc
            rest = rest - divisor.mul_monomial(shift, c / lc)
        else:
            r[m] = c
            rest = rest - p.ring.monomial(m, c)
    return Polynomial(p.ring, q), Polynomial(p.ring, r)


def exact_quotient(p: Polynomial, divisor: Polynomial) -> Polynomial:
    q, r = divmod_poly(p, divisor)
    if r:
        raise ValueError(f"{divisor} does not divide {p}")
    return q


def is_quasi_homogeneous(p: Polynomial):
    """Positive integer weights making every term of ``p`` the same degree.

    Returns ``(weights, degree)`` with primitive integer weights, or ``None``.
    Variables absent from ``p`` get weight 1.
    """
    if p.is_zero():
        raise InputError("zero polynomial has no weights")
    exps = list(p.terms)
    n = p.ring.nvars
    used = [i for i in range(n) if any(e[i] for e in exps)]
    if not used:
        return (1,) * n, 0
    if any(sum(e) == 0 for e in exps):
        # a nonzero constant term forces degree 0, impossible for positive weights
        return None
    # unknowns: weights of used variables; degree normalised to 1
    rows = [[Fraction(e[i]) for i in used] + [Fraction(1)] for e in exps]
    from .linalg import rref

    reduced, pivots = rref(rows)
    k = len(used)
    for row in reduced:
        if all(v == 0 for v in row[:k]) and row[k] != 0:
            return None
    free = [j for j in range(k) if j not in pivots]
    solution = _positive_solution(reduced, pivots, free, k)
    if solution is None:
        return None
    denom = reduce(lcm, (w.denominator for w in solution), 1)
    ints = [int(w * denom) for w in solution]
    g = reduce(gcd, ints)
    ints = [w // g for w in ints]
    degree = sum(w * exps[0][i] for w, i in zip(ints, used))
    weights = [1] * n
    for j, i in enumerate(used):
        weights[i] = ints[j]
    return tuple(weights), degree


def _positive_solution(reduced, pivots, free, k):
    def solve(free_values):
        w = [Fraction(0)] * k
        for j, v in zip(free, free_values):
            w[j] = v
        for row, pc in zip(reduced, pivots):
            w[pc] = row[k] - sum(row[j] * w[j] for j in free)
        return w

    if not free:
        w = solve([])
        return w if all(v > 0 for v in w) else None
    # interior point of the positive part of the solution set via an LP
    import numpy as np
    from scipy.optimize import linprog

    nf = len(free)
    # variables: free weights (nf) and slack s; maximise s
    A_ub, b_ub = [], []
    for j in range(nf):
        row = [0.0] * (nf + 1)
        row[j] = -1.0
        row[nf] = 1.0
        A_ub.append(row)
        b_ub.append(0.0)
    for row, pc in zip(reduced, pivots):
        # pivot weight = rhs - sum(row[f] * free_f) >= s
        coeffs = [float(row[j]) for j in free] + [1.0]
        A_ub.append(coeffs)
        b_ub.append(float(row[k]))
    res = linprog(
        c=[0.0] * nf + [-1.0],
        A_ub=np.array(A_ub),
        b_ub=np.array(b_ub),
        bounds=[(0, None)] * nf + [(None, 1.0)],
    )
    if not res.success or res.x[-1] <= 1e-9:
        return None
    for denom_limit in (10, 100, 1000, 10**6):
        guess = [Fraction(float(v)).limit_denominator(denom_limit) for v in res.x[:nf]]
        w = solve(guess)
        if all(v > 0 for v in w):
            return w
    return None
