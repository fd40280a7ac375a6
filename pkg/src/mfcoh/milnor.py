"""Milnor algebras, per-value Milnor numbers and HH/HP rank reports.

The splitting of the Milnor number by critical value comes from the
characteristic polynomial of multiplication by ``W`` on ``Q[x]/Jac(W)``:
the algebraic multiplicity of the eigenvalue ``c`` is ``mu_c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from . import univariate as U
from .crit import jacobian_ideal
from .errors import InputError, NonIsolatedError
from .groebner import EMPTY, Staircase, krull_dimension, quotient_basis
from .lg import LGModel, regularize
from .linalg import charpoly
from .poly import Polynomial
from .truncation import window_homology

NON_ISOLATED = "non-isolated"
DEFAULT_HH_BOUND = 2


@dataclass(frozen=True)
class MilnorData:
    algebra_basis: Staircase
    mu_total: int
    charpoly: tuple | None = None  # dense coefficients in t, low degree first
    rational_values: tuple = ()  # (c, mu_c)
    nonrational_factors: tuple = ()  # (monic factor coefficients, multiplicity)

    def per_value(self) -> dict:
        """``{c: mu_c}`` for the rational critical values."""
        return {c: mu for c, mu in self.rational_values}

    def to_dict(self) -> dict:
        out = {
            "status": "isolated",
            "mu_total": self.mu_total,
            "basis_size": len(self.algebra_basis.standard),
        }
        if self.charpoly is not None:
            out["charpoly"] = U.to_str(self.charpoly)
            out["per_value"] = [{"value": str(c), "mu": mu} for c, mu in self.rational_values]
            out["nonrational_factors"] = [
                {"factor": U.to_str(f), "multiplicity": k, "mu": k * (len(f) - 1)}
                for f, k in self.nonrational_factors
            ]
        return out


def milnor_algebra(W: Polynomial):
    """Staircase of ``Q[x]/Jac(W)`` and its dimension, or ``"non-isolated"``."""
    st = quotient_basis(jacobian_ideal(W))
    if not st.finite:
        return NON_ISOLATED
    return MilnorData(st, len(st.standard))


def multiplication_matrix(W: Polynomial, st: Staircase, gb):
    """Matrix of multiplication by ``W`` on the standard-monomial basis (columns = images)."""
    index = {m: i for i, m in enumerate(st.standard)}
    n = len(st.standard)
    cols = []
    for m in st.standard:
        image = gb.reduce(W.mul_monomial(m))
        col = [Fraction(0)] * n
        for e, c in image.terms.items():
            col[index[e]] = c
        cols.append(col)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def per_value_milnor_numbers(W: Polynomial) -> MilnorData:
    jac = jacobian_ideal(W)
    st = quotient_basis(jac)
    if not st.finite:
        raise NonIsolatedError("Milnor algebra is infinite dimensional (non-isolated critical locus)")
    mu = len(st.standard)
    if mu == 0:
        return MilnorData(st, 0, (Fraction(1),), (), ())
    M = multiplication_matrix(W, st, jac.groebner_basis())
    cp = U.trim(charpoly(M))
    roots, others = U.split_rational(cp)
    return MilnorData(st, mu, tuple(cp), tuple(roots), tuple((tuple(f), k) for f, k in others))


def koszul_regular_case_check(W: Polynomial) -> bool:
    """True iff the partials of ``W`` form a regular sequence (finite Milnor algebra)."""
    dim = krull_dimension(jacobian_ideal(W))
    return dim == EMPTY or dim == 0


def koszul_differential(W: Polynomial, k: int):
    """Matrix of ``omega -> -dW ^ omega`` from k-forms to (k+1)-forms.

    Bases are the increasing index subsets, in lexicographic order.
    """
    n = W.ring.nvars
    partials = [W.diff(v) for v in W.ring.variables]
    src = list(combinations(range(n), k))
    tgt = list(combinations(range(n), k + 1))
    tindex = {S: i for i, S in enumerate(tgt)}
    zero = W.ring.zero()
    mat = [[zero] * len(src) for _ in tgt]
    for j, S in enumerate(src):
        for i in range(n):
            if i in S or not partials[i]:
                continue
            sign = (-1) ** sum(1 for s in S if s < i)
            T = tuple(sorted(S + (i,)))
            mat[tindex[T]][j] = partials[i] * (-sign)
    return mat


@dataclass(frozen=True)
class KoszulWindow:
    bound: int
    dims: tuple  # homology dims per form degree 0..n at the bound
    previous: tuple | None  # same at bound - 1
    certified: tuple  # form degrees whose dims agree across the two windows

    def to_dict(self) -> dict:
        return {
            "bound": self.bound,
            "dims": list(self.dims),
            "previous": None if self.previous is None else list(self.previous),
            "certified_degrees": list(self.certified),
        }


def _window_dims(W, bound):
    n = W.ring.nvars
    diffs = [koszul_differential(W, k) for k in range(n)]
    out = []
    for k in range(n + 1):
        incoming = diffs[k - 1] if k > 0 else None
        outgoing = diffs[k] if k < n else None
        out.append(window_homology(incoming, outgoing, comb(n, k), n, bound).homology)
    return tuple(out)


def truncated_koszul_homology(W: Polynomial, degree_bound: int) -> KoszulWindow:
    """Homology of ``(Omega, -dW ^)`` with coefficients of degree at most ``degree_bound``.

    A form degree counts as certified when its dimension is unchanged between
    bounds ``degree_bound - 1`` and ``degree_bound``.
    """
    if degree_bound < 0:
        raise InputError("degree bound must be nonnegative")
    dims = _window_dims(W, degree_bound)
    if degree_bound == 0:
        return KoszulWindow(0, dims, None, ())
    prev = _window_dims(W, degree_bound - 1)
    certified = tuple(k for k, (a, b) in enumerate(zip(dims, prev)) if a == b)
    return KoszulWindow(degree_bound, dims, prev, certified)


def _split_entries(md: MilnorData):
    out = [{"value": str(c), "dim": mu} for c, mu in md.rational_values]
    out += [
        {"factor": U.to_str(f), "dim": k * (len(f) - 1), "multiplicity": k}
        for f, k in md.nonrational_factors
    ]
    return out


@dataclass(frozen=True)
class HHReport:
    regular_sequence_case: bool
    n_plus_m: int
    parity: int
    total_dim: int | None
    dims_by_degree: dict
    per_value: tuple = ()
    window: KoszulWindow | None = None
    milnor: MilnorData | None = None

    def to_dict(self) -> dict:
        return {
            "regular_sequence_case": self.regular_sequence_case,
            "n_plus_m": self.n_plus_m,
            "parity": "odd" if self.parity else "even",
            "total_dim": self.total_dim,
            "dims_by_degree": {str(k): v for k, v in self.dims_by_degree.items()},
            "per_value": list(self.per_value),
            "window": None if self.window is None else self.window.to_dict(),
        }


def hh_rank(model: LGModel, bound: int = DEFAULT_HH_BOUND) -> HHReport:
    reg = regularize(model)
    W = reg.W
    N = reg.ring.nvars
    if koszul_regular_case_check(W):
        md = per_value_milnor_numbers(W)
        return HHReport(True, N, N % 2, md.mu_total, {N: md.mu_total}, tuple(_split_entries(md)), None, md)
    window = truncated_koszul_homology(W, bound)
    dims = {k: window.dims[k] for k in window.certified}
    return HHReport(False, N, N % 2, None, dims, (), window, None)


@dataclass(frozen=True)
class HPReport:
    rank: int
    parity: int
    per_value_split: tuple
    milnor: MilnorData | None = None

    def split(self) -> dict:
        return {Fraction(e["value"]): e["dim"] for e in self.per_value_split if "value" in e}

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "parity": "odd" if self.parity else "even",
            "per_value_split": list(self.per_value_split),
        }


def hp_rank(model: LGModel) -> HPReport:
    reg = regularize(model)
    W = reg.W
    if not koszul_regular_case_check(W):
        raise NonIsolatedError(
            "regularized potential has a non-isolated critical locus; "
            "use truncated_koszul_homology for a certified-window report"
        )
    md = per_value_milnor_numbers(W)
    N = reg.ring.nvars
    return HPReport(md.mu_total, N % 2, tuple(_split_entries(md)), md)
