"""Groebner bases for ideals and for submodules of free modules.

One Buchberger engine serves both cases: a polynomial is a module element
supported in component 0. Module monomials are pairs ``(position, exponents)``
ordered position-over-term (default) or term-over-position. Pairs are pruned
with the Gebauer-Moeller criteria and selected by sugar degree.
"""

from __future__ import annotations

import contextvars
import heapq
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

from .errors import BudgetExceededError, InputError, OrderMismatchError, RingMismatchError
from .poly import GREVLEX, MonomialOrder, PolyRing, Polynomial, elimination

EMPTY = "empty"
INFINITE = "infinite"


# S-pair budget

class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.spent = 0

    def spend(self):
        self.spent += 1
        if self.limit is not None and self.spent > self.limit:
            raise BudgetExceededError(self.limit)


_budget = contextvars.ContextVar("spair_budget", default=None)


@contextmanager
def spair_budget(limit):
    """Cap the number of S-pairs processed by every computation in the block."""
    token = _budget.set(_Budget(limit))
    try:
        yield _budget.get()
    finally:
        _budget.reset(token)


# engine

class _Engine:
    def __init__(self, order: MonomialOrder, module_order: str = "pot", product_criterion=True):
        if module_order not in ("pot", "top"):
            raise InputError(f"unknown module order {module_order!r}")
        self.order = order
        self.pot = module_order == "pot"
        self.product_criterion = product_criterion
        self._keys = {}
        self._nkeys = {}

    def key(self, m):
        k = self._keys.get(m)
        if k is None:
            tk = self.order.key(m[1])
            k = ((-m[0],) + tk) if self.pot else (tk + (-m[0],))
            self._keys[m] = k
        return k

    def nkey(self, m):
        k = self._nkeys.get(m)
        if k is None:
            k = tuple(-v for v in self.key(m))
            self._nkeys[m] = k
        return k

    def lm(self, f):
        return max(f, key=self.key)

    def monic(self, f):
        lm = self.lm(f)
        c = f[lm]
        if c != 1:
            inv = 1 / c
            f = {m: v * inv for m, v in f.items()}
        return lm, f

    def primitive(self, f):
        """Integer multiple of ``f`` with coprime coefficients and positive leading one."""
        den = lcm(*(c.denominator for c in f.values()))
        ints = {m: int(c * den) for m, c in f.items()}
        g = gcd(*ints.values())
        if ints[self.lm(ints)] < 0:
            g = -g
        return {m: c // g for m, c in ints.items()}

    def reduce_ff(self, f, basis):
        """Fraction-free full reduction by primitive integer ``basis`` entries.

        The result is a nonzero rational multiple of the remainder, made primitive.
        """
        if not f:
            return {}
        p = self.primitive(f)
        heap = [(self.nkey(m), m) for m in p]
        heapq.heapify(heap)
        out = {}
        divisors = [(b[0][0], b[0][1], b) for b in basis]
        steps = 0
        while heap:
            _, m = heapq.heappop(heap)
            c = p.pop(m, None)
            if c is None:
                continue
            pos, exp = m
            g = None
            for bpos, bexp, b in divisors:
                if bpos == pos and all(a >= e for a, e in zip(exp, bexp)):
                    g = b
                    break
            if g is None:
                out[m] = c
                continue
            glm, gterms = g
            a = gterms[glm]
            d = gcd(a, c)
            ma, mc = a // d, c // d
            if ma != 1:
                for k in p:
                    p[k] *= ma
                for k in out:
                    out[k] *= ma
            shift = tuple(x - e for x, e in zip(exp, glm[1]))
            for gm, gc in gterms.items():
                if gm == glm:
                    continue
                nm = (gm[0], tuple(x + s for x, s in zip(gm[1], shift)))
                delta = -mc * gc
                v = p.get(nm)
                if v is None:
                    p[nm] = delta
                    heapq.heappush(heap, (self.nkey(nm), nm))
                else:
                    v += delta
                    if v:
                        p[nm] = v
                    else:
                        del p[nm]
            steps += 1
            if steps % 8 == 0 and (p or out):
                g = gcd(*p.values(), *out.values())
                if g > 1:
                    p = {k: v // g for k, v in p.items()}
                    out = {k: v // g for k, v in out.items()}
        if not out:
            return {}
        return self.primitive(out)

    def reduce(self, f, basis):
        """Full reduction of ``f`` (dict) by monic ``basis`` entries ``(lm, terms)``."""
        p = dict(f)
        heap = [(self.nkey(m), m) for m in p]
        heapq.heapify(heap)
        out = {}
        divisors = [(b[0][0], b[0][1], b) for b in basis]
        while heap:
            _, m = heapq.heappop(heap)
            c = p.pop(m, None)
            if c is None:
                continue
            pos, exp = m
            g = None
            for bpos, bexp, b in divisors:
                if bpos == pos and all(a >= e for a, e in zip(exp, bexp)):
                    g = b
                    break
            if g is None:
                out[m] = c
                continue
            glm, gterms = g
            shift = tuple(a - e for a, e in zip(exp, glm[1]))
            for gm, gc in gterms.items():
                if gm == glm:
                    continue
                nm = (gm[0], tuple(a + s for a, s in zip(gm[1], shift)))
                delta = -c * gc
                v = p.get(nm)
                if v is None:
                    p[nm] = delta
                    heapq.heappush(heap, (self.nkey(nm), nm))
                else:
                    v += delta
                    if v:
                        p[nm] = v
                    else:
                        del p[nm]
        return out

    @staticmethod
    def _lcm(a, b):
        return (a[0], tuple(max(x, y) for x, y in zip(a[1], b[1])))

    @staticmethod
    def _divides(a, b):
        return a[0] == b[0] and all(x <= y for x, y in zip(a[1], b[1]))

    @staticmethod
    def _disjoint(a, b):
        return not any(x and y for x, y in zip(a[1], b[1]))

    def _spoly_ff(self, fa, fb, lcm_):
        (la, ta), (lb, tb) = fa, fb
        ca, cb = ta[la], tb[lb]
        d = gcd(ca, cb)
        ka, kb = cb // d, ca // d
        sa = tuple(x - y for x, y in zip(lcm_[1], la[1]))
        sb = tuple(x - y for x, y in zip(lcm_[1], lb[1]))
        out = {}
        for m, c in ta.items():
            out[(m[0], tuple(x + y for x, y in zip(m[1], sa)))] = ka * c
        for m, c in tb.items():
            nm = (m[0], tuple(x + y for x, y in zip(m[1], sb)))
            v = out.get(nm, 0) - kb * c
            if v:
                out[nm] = v
            else:
                out.pop(nm, None)
        return out

    def _update(self, polys, sugar, G, B, hi):
        h = polys[hi][0]
        disjoint_ok = self.product_criterion
        C = [g for g in G if polys[g][0][0] == h[0]]
        D = []
        while C:
            g1 = C.pop(0)
            l1 = self._lcm(h, polys[g1][0])
            if disjoint_ok and self._disjoint(h, polys[g1][0]):
                D.append(g1)
                continue
            if not any(self._divides(self._lcm(h, polys[g2][0]), l1) for g2 in C + D):
                D.append(g1)
        E = [g for g in D if not (disjoint_ok and self._disjoint(h, polys[g][0]))]
        newB = []
        for pair in B:
            a, b, lcm = pair[2], pair[3], pair[4]
            if (
                self._divides(h, lcm)
                and self._lcm(polys[a][0], h) != lcm
                and self._lcm(polys[b][0], h) != lcm
            ):
                continue
            newB.append(pair)
        for g in E:
            lcm = self._lcm(polys[g][0], h)
            deg = sum(lcm[1])
            s = max(
                sugar[g] + deg - sum(polys[g][0][1]),
                sugar[hi] + deg - sum(h[1]),
            )
            newB.append((s, self.key(lcm), g, hi, lcm))
        newG = [g for g in G if not self._divides(h, polys[g][0])] + [hi]
        return newG, newB

    @staticmethod
    def _sugar_of(f):
        return max(sum(m[1]) for m in f)

    def groebner(self, gens):
        """Reduced Groebner basis (list of monic ``(lm, terms)``) of the elements ``gens``."""
        budget = _budget.get()
        polys, sugar = [], []
        G, B = [], []
        for f in gens:
            f = {m: Fraction(c) for m, c in f.items() if c}
            if not f:
                continue
            r = self.reduce_ff(f, [polys[i] for i in G])
            if not r:
                continue
            polys.append((self.lm(r), r))
            sugar.append(self._sugar_of(f))
            G, B = self._update(polys, sugar, G, B, len(polys) - 1)
        while B:
            best = min(range(len(B)), key=lambda i: B[i][:2])
            s, _, a, b, lcm_ = B.pop(best)
            if budget is not None:
                budget.spend()
            sp = self._spoly_ff(polys[a], polys[b], lcm_)
            if not sp:
                continue
            r = self.reduce_ff(sp, [polys[i] for i in G])
            if not r:
                continue
            polys.append((self.lm(r), r))
            sugar.append(s)
            G, B = self._update(polys, sugar, G, B, len(polys) - 1)
        basis = [polys[i] for i in G]
        reduced = []
        for i, (lm, terms) in enumerate(basis):
            others = basis[:i] + basis[i + 1:]
            r = self.reduce_ff(terms, others)
            reduced.append(self.monic({m: Fraction(c) for m, c in r.items()}))
        reduced.sort(key=lambda b: self.key(b[0]))
        return reduced


# conversions

def _poly_to_elem(p: Polynomial):
    return {(0, e): c for e, c in p.terms.items()}


def _vec_to_elem(v):
    out = {}
    for i, p in enumerate(v):
        for e, c in p.terms.items():
            out[(i, e)] = c
    return out


def _elem_to_poly(ring, f):
    return Polynomial(ring, {m[1]: c for m, c in f.items()}, _trusted=True)


def _elem_to_vec(ring, rank, f):
    comps = [{} for _ in range(rank)]
    for (i, e), c in f.items():
        comps[i][e] = c
    return tuple(Polynomial(ring, t, _trusted=True) for t in comps)


def _same_ring(a: PolyRing, b: PolyRing):
    if a.variables != b.variables:
        raise RingMismatchError(f"{a} vs {b}")


# bases

@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced, monic Groebner basis of an ideal, sorted by leading monomial."""

    ring: PolyRing
    order: MonomialOrder
    polys: tuple

    def leading_monomials(self):
        return tuple(p.leading_monomial(self.order) for p in self.polys)

    def is_unit(self):
        return any(p.is_constant() and p for p in self.polys)

    def _engine(self):
        return _Engine(self.order)

    def reduce(self, p: Polynomial) -> Polynomial:
        _same_ring(self.ring, p.ring)
        eng = self._engine()
        basis = [eng.monic(_poly_to_elem(g)) for g in self.polys]
        return _elem_to_poly(p.ring, eng.reduce(_poly_to_elem(p), basis))

    def __contains__(self, p):
        return not self.reduce(p)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)


@dataclass(frozen=True)
class ModuleGroebnerBasis:
    ring: PolyRing
    rank: int
    order: MonomialOrder
    module_order: str
    vectors: tuple

    def _engine(self):
        return _Engine(self.order, self.module_order, product_criterion=self.rank == 1)

    def leading_monomials(self):
        eng = self._engine()
        return tuple(eng.lm(_vec_to_elem(v)) for v in self.vectors)

    def reduce(self, v) -> tuple:
        if len(v) != self.rank:
            raise InputError("vector length does not match the free module rank")
        eng = self._engine()
        basis = [eng.monic(_vec_to_elem(g)) for g in self.vectors]
        return _elem_to_vec(self.ring, self.rank, eng.reduce(_vec_to_elem(v), basis))

    def __contains__(self, v):
        return not any(self.reduce(v))

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)


class Ideal:
    """Ideal of a polynomial ring, with write-once cached Groebner bases."""

    def __init__(self, ring: PolyRing, generators: Sequence = ()):
        gens = []
        for g in generators:
            g = ring(g)
            _same_ring(ring, g.ring)
            gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb = {}

    def groebner_basis(self, order: MonomialOrder | None = None) -> GroebnerBasis:
        order = order or self.ring.order
        gb = self._gb.get(order)
        if gb is None:
            eng = _Engine(order)
            reduced = eng.groebner([_poly_to_elem(g) for g in self.generators])
            polys = tuple(_elem_to_poly(self.ring, t) for _, t in reduced)
            gb = GroebnerBasis(self.ring, order, polys)
            self._gb[order] = gb
        return gb

    def reduce(self, p: Polynomial) -> Polynomial:
        return self.groebner_basis().reduce(self.ring(p))

    def __contains__(self, p):
        return not self.reduce(p)

    def is_unit(self) -> bool:
        return self.groebner_basis().is_unit()

    def is_zero(self) -> bool:
        return not any(self.generators)

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(g in self for g in other.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring.variables != other.ring.variables:
            return False
        return self.groebner_basis().polys == other.groebner_basis(self.ring.order).polys

    def __hash__(self):
        return hash((self.ring.variables, self.groebner_basis().polys))

    def __add__(self, other):
        if isinstance(other, Ideal):
            _same_ring(self.ring, other.ring)
            return Ideal(self.ring, self.generators + other.generators)
        return Ideal(self.ring, self.generators + tuple(self.ring(g) for g in other))

    def __mul__(self, other: "Ideal"):
        _same_ring(self.ring, other.ring)
        return Ideal(self.ring, [a * b for a in self.generators for b in other.generators])

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.generators) + ")"


class Submodule:
    """Submodule of the free module ``ring^free_rank`` given by generator vectors."""

    def __init__(self, ring: PolyRing, free_rank: int, generators: Sequence = (), module_order: str = "pot"):
        if free_rank < 1:
            raise InputError("free rank must be positive")
        if module_order not in ("pot", "top"):
            raise InputError(f"unknown module order {module_order!r}")
        gens = []
        for v in generators:
            v = tuple(ring(c) for c in v)
            if len(v) != free_rank:
                raise InputError(f"generator of length {len(v)} in a free module of rank {free_rank}")
            gens.append(v)
        self.ring = ring
        self.free_rank = free_rank
        self.generators = tuple(gens)
        self.module_order = module_order
        self._gb = {}

    def groebner_basis(self, order: MonomialOrder | None = None) -> ModuleGroebnerBasis:
        order = order or self.ring.order
        gb = self._gb.get(order)
        if gb is None:
            eng = _Engine(order, self.module_order, product_criterion=self.free_rank == 1)
            reduced = eng.groebner([_vec_to_elem(v) for v in self.generators])
            vecs = tuple(_elem_to_vec(self.ring, self.free_rank, t) for _, t in reduced)
            gb = ModuleGroebnerBasis(self.ring, self.free_rank, order, self.module_order, vecs)
            self._gb[order] = gb
        return gb

    def reduce(self, v):
        return self.groebner_basis().reduce(tuple(self.ring(c) for c in v))

    def __contains__(self, v):
        return not any(self.reduce(v))

    def is_zero(self):
        return not any(any(c for c in v) for v in self.generators)

    def __eq__(self, other):
        if not isinstance(other, Submodule):
            return NotImplemented
        return (
            self.ring.variables == other.ring.variables
            and self.free_rank == other.free_rank
            and all(v in other for v in self.generators)
            and all(v in self for v in other.generators)
        )

    __hash__ = None

    def __repr__(self):
        body = ", ".join("(" + ", ".join(map(str, v)) + ")" for v in self.generators)
        return f"Submodule(rank={self.free_rank}: {body})"


# public operations

def groebner_basis(obj, order: MonomialOrder | None = None):
    """Reduced Groebner basis of an :class:`Ideal` or :class:`Submodule`."""
    return obj.groebner_basis(order)


def normal_form(p, basis, order: MonomialOrder | None = None):
    """Remainder of a polynomial (or vector) on division by a Groebner basis."""
    if order is not None and order != basis.order:
        raise OrderMismatchError(f"basis computed for {basis.order}, asked for {order}")
    return basis.reduce(p)


def _reordered_ring(ring: PolyRing, first: Sequence[str]):
    rest = [v for v in ring.variables if v not in first]
    return PolyRing(tuple(first) + tuple(rest), elimination(len(first), lex_block=True))


def elimination_ideal(I: Ideal, keep: Sequence[str]) -> Ideal:
    """``I`` intersected with the subring on ``keep`` (block elimination order)."""
    for v in keep:
        I.ring.index(v)
    keep = [v for v in I.ring.variables if v in set(keep)]
    drop = [v for v in I.ring.variables if v not in set(keep)]
    big = _reordered_ring(I.ring, drop)
    J = Ideal(big, [g.to_ring(big) for g in I.generators])
    gb = J.groebner_basis()
    sub = PolyRing(tuple(keep), GREVLEX)
    k = len(drop)
    kept = []
    for g in gb.polys:
        if all(not any(e[:k]) for e in g.terms):
            kept.append(Polynomial(sub, {e[k:]: c for e, c in g.terms.items()}, _trusted=True))
    return Ideal(sub, kept)


def _fresh_name(ring: PolyRing, stem: str) -> str:
    name = stem
    i = 0
    while name in ring.variables:
        i += 1
        name = f"{stem}{i}"
    return name


def intersection(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I.ring, J.ring)
    t = _fresh_name(I.ring, "t")
    big = PolyRing((t,) + I.ring.variables, elimination(1))
    tv = big.var(t)
    gens = [tv * f.to_ring(big) for f in I.generators]
    gens += [(1 - tv) * g.to_ring(big) for g in J.generators]
    E = elimination_ideal(Ideal(big, gens), I.ring.variables)
    return Ideal(I.ring, [g.to_ring(I.ring) for g in E.generators])


def ideal_quotient(I: Ideal, J: Ideal) -> Ideal:
    """``I : J`` as the intersection of the quotients by each generator of ``J``."""
    _same_ring(I.ring, J.ring)
    result = None
    for h in J.generators:
        if not h:
            continue
        syz = syzygies([[h] + list(I.generators)])
        q = Ideal(I.ring, [v[0] for v in syz.generators])
        result = q if result is None else intersection(result, q)
    if result is None:
        return Ideal(I.ring, [1])
    return result


def saturation(I: Ideal, J: Ideal, max_iterations: int = 4) -> Ideal:
    """``I : J^infinity`` by iterated quotients, falling back to Rabinowitsch."""
    _same_ring(I.ring, J.ring)
    current = I
    for _ in range(max_iterations):
        nxt = ideal_quotient(current, J)
        if nxt == current:
            return Ideal(I.ring, nxt.groebner_basis().polys)
        current = nxt
    return _saturation_rabinowitsch(I, J)


def _saturation_rabinowitsch(I: Ideal, J: Ideal) -> Ideal:
    result = None
    for h in J.generators:
        if not h:
            continue
        y = _fresh_name(I.ring, "y")
        big = PolyRing((y,) + I.ring.variables, elimination(1))
        gens = [f.to_ring(big) for f in I.generators] + [1 - big.var(y) * h.to_ring(big)]
        E = elimination_ideal(Ideal(big, gens), I.ring.variables)
        part = Ideal(I.ring, [g.to_ring(I.ring) for g in E.generators])
        result = part if result is None else intersection(result, part)
    if result is None:
        return Ideal(I.ring, [1])
    return result


def _independent_dimension(lead_exps, n):
    supports = {frozenset(i for i, a in enumerate(e) if a) for e in lead_exps}
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            Sset = set(S)
            if not any(sup <= Sset for sup in supports):
                return size
    return 0


def krull_dimension(I: Ideal):
    """Dimension of V(I) from the leading-term ideal; ``"empty"`` iff 1 is in I."""
    gb = I.groebner_basis(GREVLEX if I.ring.order.kind != "grevlex" else I.ring.order)
    if gb.is_unit():
        return EMPTY
    lead = [p.leading_monomial(gb.order) for p in gb.polys]
    return _independent_dimension(lead, I.ring.nvars)


@dataclass(frozen=True)
class Staircase:
    """Standard monomials of a quotient; ``standard`` is ``None`` when infinite.

    For submodules the monomials are ``(position, exponents)`` pairs.
    """

    leading_monomials: tuple
    standard: tuple | None
    free_rank: int = 1

    @property
    def finite(self) -> bool:
        return self.standard is not None

    @property
    def dimension(self):
        return len(self.standard) if self.standard is not None else INFINITE


def _component_staircase(lead_exps, n, key):
    if any(not any(e) for e in lead_exps):
        return ()
    for i in range(n):
        if not any(e[i] and not any(a for j, a in enumerate(e) if j != i) for e in lead_exps):
            return None
    seen = set()
    frontier = [(0,) * n]
    while frontier:
        m = frontier.pop()
        if m in seen:
            continue
        if any(all(a >= b for a, b in zip(m, e)) for e in lead_exps):
            continue
        seen.add(m)
        for i in range(n):
            frontier.append(m[:i] + (m[i] + 1,) + m[i + 1:])
    return tuple(sorted(seen, key=key))


def quotient_basis(I: Ideal) -> Staircase:
    gb = I.groebner_basis()
    lead = tuple(p.leading_monomial(gb.order) for p in gb.polys)
    std = _component_staircase(lead, I.ring.nvars, gb.order.key)
    return Staircase(lead, std)


def module_staircase(N: Submodule) -> Staircase:
    gb = N.groebner_basis()
    lead = gb.leading_monomials()
    out = []
    for pos in range(N.free_rank):
        comp = [e for (p, e) in lead if p == pos]
        std = _component_staircase(comp, N.ring.nvars, gb.order.key)
        if std is None:
            return Staircase(lead, None, N.free_rank)
        out.extend((pos, e) for e in std)
    return Staircase(lead, tuple(out), N.free_rank)


def module_quotient_dimension(N: Submodule):
    """``dim_Q F/N`` for ``F`` the ambient free module, or ``"infinite"``."""
    return module_staircase(N).dimension


def syzygies(matrix, modulo: Sequence[Polynomial] = (), ring: PolyRing | None = None, ncols: int | None = None) -> Submodule:
    """Kernel of the map given by ``matrix`` (rows of polynomials).

    With ``modulo`` the kernel is taken over ``ring/(modulo)``: the result
    consists of lifts ``v`` with ``matrix @ v`` in ``(modulo) * F``.
    Generators come from a position-over-term Groebner basis of the graph
    module ``(column_j, e_j)``.
    """
    rows = [list(r) for r in matrix]
    if ring is None:
        if not rows or not rows[0]:
            raise InputError("pass ring= for an empty matrix")
        ring = rows[0][0].ring
    q = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    if q == 0:
        raise InputError("syzygies of a map out of the zero module")
    p = len(rows)
    if any(len(r) != q for r in rows):
        raise InputError("ragged matrix")
    zero = ring.zero()
    if p == 0:
        return Submodule(ring, q, [[ring.one() if k == j else zero for k in range(q)] for j in range(q)])
    gens = []
    for j in range(q):
        col = [ring(rows[i][j]) for i in range(p)]
        gens.append(col + [ring.one() if k == j else zero for k in range(q)])
    for g in modulo:
        g = ring(g)
        if not g:
            continue
        for i in range(p):
            gens.append([g if k == i else zero for k in range(p)] + [zero] * q)
    graph = Submodule(ring, p + q, gens, "pot")
    gb = graph.groebner_basis()
    eng = gb._engine()
    kernel = []
    for v in gb.vectors:
        lm = eng.lm(_vec_to_elem(v))
        if lm[0] >= p:
            kernel.append(v[p:])
    return Submodule(ring, q, kernel, "pot")


class Lifter:
    """Express elements of a submodule in terms of its generators.

    Uses the graph module ``(g_j, e_j)``: reducing ``(v, 0)`` to ``(0, -a)``
    certifies ``v = sum a_j g_j``.
    """

    def __init__(self, ring: PolyRing, generators: Sequence, rank: int | None = None):
        gens = [tuple(ring(c) for c in (g if isinstance(g, (list, tuple)) else [g])) for g in generators]
        self.ring = ring
        self.rank = rank if rank is not None else (len(gens[0]) if gens else 1)
        self.count = len(gens)
        zero = ring.zero()
        graph = []
        for j, g in enumerate(gens):
            graph.append(list(g) + [ring.one() if k == j else zero for k in range(self.count)])
        self._module = Submodule(ring, self.rank + self.count, graph, "pot")
        self._gb = self._module.groebner_basis() if graph else None

    def lift(self, v):
        """Cofactors ``a`` with ``v = sum a_j g_j``, or ``None`` if ``v`` is not a member."""
        if not isinstance(v, (list, tuple)):
            v = [v]
        v = [self.ring(c) for c in v]
        if self._gb is None:
            return [] if not any(v) else None
        zero = self.ring.zero()
        r = self._gb.reduce(tuple(v) + (zero,) * self.count)
        if any(r[: self.rank]):
            return None
        return [-c for c in r[self.rank:]]


def lift(p, generators):
    """Cofactors expressing ``p`` in the ideal generated by ``generators``."""
    ring = p.ring
    return Lifter(ring, [[g] for g in generators], rank=1).lift([p])
