"""Critical values of a potential and relative critical values of ``g`` on ``X``.

Values are found by elimination: the eliminant of ``Jac(W) + (t - W)`` in
``Q[t]`` has the critical values over the algebraic closure as its roots.
Relative critical points (``rank Jac(f) = rank Jac(f, g)``) are stratified by
rank; each stratum is cut out by minors and saturated by the minors of
``Jac(f)`` of the current rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import univariate as U
from .errors import InputError, NotOnVarietyError
from .groebner import EMPTY, Ideal, elimination_ideal, krull_dimension, saturation
from .lg import LGModel, regularize
from .linalg import rank as matrix_rank
from .poly import PolyRing, Polynomial, evaluate_at_point

FINITE = "finite"
NO_VALUES = "empty"
NOT_FINITE = "not-finite"


def jacobian_ideal(W: Polynomial) -> Ideal:
    return Ideal(W.ring, [W.diff(v) for v in W.ring.variables])


def jacobian_matrix(polys, ring: PolyRing):
    return [[p.diff(v) for v in ring.variables] for p in polys]


def determinant(matrix):
    """Determinant by cofactor expansion along the first row (small matrices)."""
    n = len(matrix)
    if n == 0:
        raise InputError("empty matrix")
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    total = matrix[0][0].ring.zero()
    for j, a in enumerate(matrix[0]):
        if a:
            term = a * determinant([row[:j] + row[j + 1:] for row in matrix[1:]])
            total = total + term if j % 2 == 0 else total - term
    return total


def minors(matrix, k: int):
    """All nonzero ``k x k`` minors; ``k = 0`` gives the unit minor."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if k == 0:
        ring = matrix[0][0].ring
        return [ring.one()]
    out = []
    for ri in combinations(range(rows), k):
        for ci in combinations(range(cols), k):
            d = determinant([[matrix[i][j] for j in ci] for i in ri])
            if d:
                out.append(d)
    return out


def _fresh(ring: PolyRing, stem="t"):
    name, i = stem, 0
    while name in ring.variables:
        i += 1
        name = f"{stem}{i}"
    return name


def _eliminant(ideal_gens, value: Polynomial):
    """Monic generator of ``(ideal + (t - value)) cap Q[t]`` as dense coefficients.

    Returns ``[1]`` for an empty variety and ``[]`` (the zero polynomial)
    when the value set is not finite.
    """
    ring = value.ring
    t = _fresh(ring)
    big = PolyRing(ring.variables + (t,))
    gens = [g.to_ring(big) for g in ideal_gens]
    gens.append(big.var(t) - value.to_ring(big))
    E = elimination_ideal(Ideal(big, gens), [t])
    gb = E.groebner_basis().polys
    if not gb:
        return []
    if len(gb) != 1:
        raise AssertionError("univariate ideal with more than one reduced generator")
    return U.monic(U.from_poly(gb[0]))


def _describe(eliminant):
    """Status, square-free eliminant, rational values and nonrational factors."""
    if not eliminant:
        return NOT_FINITE, None, (), ()
    sqf = U.squarefree_part(eliminant)
    if len(sqf) <= 1:
        return NO_VALUES, [Fraction(1)], (), ()
    roots, others = U.split_rational(sqf)
    return FINITE, sqf, tuple(r for r, _ in roots), tuple(f for f, _ in others)


@dataclass(frozen=True)
class CriticalData:
    jacobian: Ideal
    locus_dimension: object  # int or "empty"
    status: str
    eliminant: tuple | None  # square-free, monic, dense coefficients in t
    rational_values: tuple
    nonrational_factors: tuple

    @property
    def finite(self) -> bool:
        return self.status != NOT_FINITE

    def eliminant_poly(self) -> Polynomial | None:
        return None if self.eliminant is None else U.to_poly(self.eliminant)

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "locus_dimension": self.locus_dimension,
            "eliminant": None if self.eliminant is None else U.to_str(self.eliminant),
            "rational_values": [str(c) for c in self.rational_values],
            "nonrational_factors": [U.to_str(f) for f in self.nonrational_factors],
        }


def critical_values(W: Polynomial) -> CriticalData:
    jac = jacobian_ideal(W)
    dim = krull_dimension(jac)
    if dim == EMPTY:
        elim = [Fraction(1)]
    else:
        elim = _eliminant(jac.generators, W)
    status, sqf, values, others = _describe(elim)
    return CriticalData(jac, dim, status, None if sqf is None else tuple(sqf), values, others)


@dataclass(frozen=True)
class Stratum:
    rank: int
    ideal: Ideal
    status: str
    eliminant: tuple | None

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "status": self.status,
            "eliminant": None if self.eliminant is None else U.to_str(self.eliminant),
        }


@dataclass(frozen=True)
class RelCritData:
    strata: tuple
    status: str
    values_eliminant: tuple | None
    rational_values: tuple
    nonrational_factors: tuple

    @property
    def finite(self) -> bool:
        return self.status != NOT_FINITE

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "eliminant": None if self.values_eliminant is None else U.to_str(self.values_eliminant),
            "rational_values": [str(c) for c in self.rational_values],
            "nonrational_factors": [U.to_str(f) for f in self.nonrational_factors],
            "strata": [s.to_dict() for s in self.strata],
        }


def relative_critical_values(model: LGModel) -> RelCritData:
    ring = model.ambient
    f = list(model.relations)
    jf = jacobian_matrix(f, ring) if f else []
    jfg = jacobian_matrix(f + [model.potential], ring)
    strata = []
    combined = [Fraction(1)]
    not_finite = False
    for r in range(model.m + 1):
        if r + 1 <= ring.nvars:
            gens = f + minors(jfg, r + 1)
        else:
            gens = list(f)
        I = Ideal(ring, gens)
        if r > 0:
            J = Ideal(ring, minors(jf, r) if r <= ring.nvars else [])
            I = saturation(I, J) if not J.is_unit() else I
        if I.is_unit():
            strata.append(Stratum(r, I, NO_VALUES, (Fraction(1),)))
            continue
        elim = _eliminant(I.groebner_basis().polys, model.potential)
        status, sqf, _, _ = _describe(elim)
        strata.append(Stratum(r, I, status, None if sqf is None else tuple(sqf)))
        if status == NOT_FINITE:
            not_finite = True
        else:
            combined = U.mul(combined, sqf)
    if not_finite:
        return RelCritData(tuple(strata), NOT_FINITE, None, (), ())
    status, sqf, values, others = _describe(combined)
    return RelCritData(tuple(strata), status, tuple(sqf), values, others)


@dataclass(frozen=True)
class PointTest:
    is_relative_critical: bool
    rank_f: int
    rank_fg: int

    def to_dict(self) -> dict:
        return {
            "relative_critical": self.is_relative_critical,
            "ranks": [self.rank_f, self.rank_fg],
        }


def is_relative_critical_point(model: LGModel, point) -> PointTest:
    if len(point) != model.n:
        raise InputError(f"point has {len(point)} coordinates, model has {model.n} variables")
    pt = [Fraction(a) for a in point]
    for f in model.relations:
        if evaluate_at_point(f, pt) != 0:
            raise NotOnVarietyError(f"point {point} does not satisfy {f} = 0")
    ring = model.ambient
    jf = [[evaluate_at_point(e, pt) for e in row] for row in jacobian_matrix(model.relations, ring)]
    jg = [evaluate_at_point(model.potential.diff(v), pt) for v in ring.variables]
    rf = matrix_rank(jf) if jf else 0
    rfg = matrix_rank(jf + [jg])
    return PointTest(rf == rfg, rf, rfg)


def cross_check(rel: RelCritData, crit: CriticalData) -> str:
    """``"agree"`` when both value sets coincide (same square-free eliminant)."""
    if rel.status != crit.status:
        return "disagree"
    if rel.status == NOT_FINITE:
        return "agree"
    return "agree" if tuple(rel.values_eliminant) == tuple(crit.eliminant) else "disagree"


def nonvanishing_values(model: LGModel):
    """Values ``c`` where the coherent MF category of ``g - c`` may be nonzero.

    These are the critical values of the regularized potential; returns the
    crit data so callers can read the eliminant and its finiteness status.
    """
    return critical_values(regularize(model).W)
