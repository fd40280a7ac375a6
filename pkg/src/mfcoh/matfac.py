"""Matrix factorizations and the Eisenbud machinery.

Sign conventions (fixed here once):

* An MF ``(W, delta0, delta1)`` is the odd endomorphism
  ``[[0, delta0], [delta1, 0]]`` of ``R^r + R^r`` (even part first).
* ``shift(E) = (-delta1, -delta0)``.
* ``tensor(E, F)`` uses the signed blocks
  ``D0 = [[e0 x 1, 1 x f0], [-1 x f1, e1 x 1]]`` and
  ``D1 = [[e1 x 1, -1 x f0], [1 x f1, e0 x 1]]``.
* The Hom differential is ``phi -> delta_F phi - (-1)^|phi| phi delta_E``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    InputError,
    NotRegularSequenceError,
    PeriodicityNotDetectedError,
    RingMismatchError,
)
from .groebner import INFINITE, Ideal, Lifter, Submodule, module_quotient_dimension, syzygies
from .lg import check_sequence
from .linalg import inverse, nullspace, rank as qrank
from .poly import GREVLEX, PolyRing, Polynomial
from .truncation import window_homology


# polynomial matrices

def zeros(ring, rows, cols):
    z = ring.zero()
    return [[z] * cols for _ in range(rows)]


def identity(ring, r):
    return [[ring.one() if i == j else ring.zero() for j in range(r)] for i in range(r)]


def mat_mul(a, b, ring=None):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    ring = ring or _ring_of(a) or _ring_of(b)
    out = []
    for row in a:
        new = []
        for j in range(cols):
            acc = ring.zero()
            for k in range(inner):
                if row[k] and b[k][j]:
                    acc = acc + row[k] * b[k][j]
            new.append(acc)
        out.append(new)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[x * c for x in row] for row in a]


def mat_neg(a):
    return [[-x for x in row] for row in a]


def is_zero_matrix(a):
    return all(not x for row in a for x in row)


def kron(a, b):
    out = []
    for ra in a:
        for rb in b:
            out.append([x * y for x in ra for y in rb])
    return out


def block(rows_of_blocks):
    out = []
    for blocks in rows_of_blocks:
        for i in range(len(blocks[0])):
            row = []
            for blk in blocks:
                row.extend(blk[i])
            out.append(row)
    return out


def _ring_of(m):
    for row in m:
        for x in row:
            return x.ring
    return None


def reduce_matrix(m, gb):
    return [[gb.reduce(x) if x else x for x in row] for row in m]


def evaluate_matrix(m, point):
    return [[x(point) for x in row] for row in m]


def matrix_to_strings(m):
    return [[str(x) for x in row] for row in m]


def matrix_from_strings(rows, ring: PolyRing):
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError("matrix must be a list of rows")
    width = {len(r) for r in rows}
    if len(width) > 1:
        raise InputError("ragged matrix")
    return [[ring(x if isinstance(x, str) else str(x)) for x in r] for r in rows]


# the MF type

@dataclass(frozen=True)
class MatrixFactorization:
    potential: Polynomial
    delta0: list
    delta1: list
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        r = len(self.delta0)
        if r < 1:
            raise InputError("matrix factorizations must have rank at least 1")
        for m in (self.delta0, self.delta1):
            if len(m) != r or any(len(row) != r for row in m):
                raise InputError("delta0 and delta1 must be square of the same size")
            for row in m:
                for x in row:
                    if x.ring.variables != self.potential.ring.variables:
                        raise RingMismatchError("matrix entries and potential live in different rings")

    @property
    def rank(self) -> int:
        return len(self.delta0)

    @property
    def ring(self) -> PolyRing:
        return self.potential.ring

    def odd_map(self):
        r = self.rank
        z = zeros(self.ring, r, r)
        return block([[z, self.delta0], [self.delta1, z]])

    def to_dict(self) -> dict:
        return {
            "variables": list(self.ring.variables),
            "potential": str(self.potential),
            "rank": self.rank,
            "delta0": matrix_to_strings(self.delta0),
            "delta1": matrix_to_strings(self.delta1),
        }

    @classmethod
    def from_dict(cls, data: dict, ring: PolyRing | None = None) -> "MatrixFactorization":
        try:
            potential = data["potential"]
            d0, d1 = data["delta0"], data["delta1"]
        except (KeyError, TypeError):
            raise InputError("MF JSON needs 'potential', 'delta0' and 'delta1'") from None
        if ring is None:
            if "variables" in data:
                ring = PolyRing(tuple(data["variables"]), GREVLEX)
            else:
                from .poly import ring_from_sources

                srcs = [potential] + [x for m in (d0, d1) for row in m for x in row]
                ring = ring_from_sources([str(s) for s in srcs])
        mf = cls(ring(potential), matrix_from_strings(d0, ring), matrix_from_strings(d1, ring))
        if "rank" in data and data["rank"] != mf.rank:
            raise InputError(f"declared rank {data['rank']} does not match matrices of size {mf.rank}")
        return mf

    @classmethod
    def from_json(cls, text: str) -> "MatrixFactorization":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid MF JSON: {exc}") from None
        return cls.from_dict(data)


@dataclass(frozen=True)
class MFValidation:
    ok: bool
    residue01: list  # delta0*delta1 - W*I
    residue10: list  # delta1*delta0 - W*I

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "residue01": matrix_to_strings(self.residue01),
            "residue10": matrix_to_strings(self.residue10),
        }


def validate_mf(mf: MatrixFactorization) -> MFValidation:
    WI = mat_scale(identity(mf.ring, mf.rank), mf.potential)
    r01 = mat_sub(mat_mul(mf.delta0, mf.delta1), WI)
    r10 = mat_sub(mat_mul(mf.delta1, mf.delta0), WI)
    return MFValidation(is_zero_matrix(r01) and is_zero_matrix(r10), r01, r10)


def rank_one_mf(a: Polynomial, b: Polynomial) -> MatrixFactorization:
    return MatrixFactorization(a * b, [[a]], [[b]])


def _tensor_same_ring(E: MatrixFactorization, F: MatrixFactorization, metadata=None):
    ring = E.ring
    I_e, I_f = identity(ring, E.rank), identity(ring, F.rank)
    e0, e1, f0, f1 = E.delta0, E.delta1, F.delta0, F.delta1
    D0 = block([[kron(e0, I_f), kron(I_e, f0)], [mat_neg(kron(I_e, f1)), kron(e1, I_f)]])
    D1 = block([[kron(e1, I_f), mat_neg(kron(I_e, f0))], [kron(I_e, f1), kron(e0, I_f)]])
    return MatrixFactorization(E.potential + F.potential, D0, D1, metadata or {})


def koszul_mf(a, b) -> MatrixFactorization:
    """Koszul MF of ``sum a_i b_i``: the tensor product of the rank-one ``(a_i, b_i)``."""
    a, b = list(a), list(b)
    if len(a) != len(b):
        raise InputError("koszul_mf needs vectors of equal length")
    if not a:
        raise InputError("koszul_mf needs at least one pair")
    ring = a[0].ring
    mf = rank_one_mf(ring(a[0]), ring(b[0]))
    for x, y in zip(a[1:], b[1:]):
        mf = _tensor_same_ring(mf, rank_one_mf(ring(x), ring(y)))
    return mf


def _merge_rings(r1: PolyRing, r2: PolyRing):
    names = list(r1.variables)
    renaming = {}
    for v in r2.variables:
        new = v
        k = 2
        while new in names:
            new = f"{v}_{k}"
            k += 1
        if new != v:
            renaming[v] = new
        names.append(new)
    return PolyRing(tuple(names), GREVLEX), renaming


def _push(mf: MatrixFactorization, ring: PolyRing, renaming=None):
    renaming = renaming or {}
    images = [ring.var(renaming.get(v, v)) for v in mf.ring.variables]

    def mv(p):
        return p.compose(images, ring)

    return MatrixFactorization(
        mv(mf.potential),
        [[mv(x) for x in row] for row in mf.delta0],
        [[mv(x) for x in row] for row in mf.delta1],
    )


def tensor_mf(E: MatrixFactorization, F: MatrixFactorization) -> MatrixFactorization:
    """MF of ``W_E + W_F`` of rank ``2 * r_E * r_F``.

    Equal variable lists mean a shared ring; otherwise the rings are treated
    as disjoint and clashing names of ``F`` get a ``_2`` style suffix,
    recorded in ``metadata["renaming"]``.
    """
    if E.ring.variables == F.ring.variables:
        return _tensor_same_ring(E, F)
    ring, renaming = _merge_rings(E.ring, F.ring)
    return _tensor_same_ring(_push(E, ring), _push(F, ring, renaming), {"renaming": renaming})


def shift(mf: MatrixFactorization) -> MatrixFactorization:
    return MatrixFactorization(mf.potential, mat_neg(mf.delta1), mat_neg(mf.delta0), dict(mf.metadata))


# Hom complexes and stable Hom

@dataclass(frozen=True)
class HomComplex:
    even_coords: tuple  # (row, col) positions of even maps in the full 2rF x 2rE matrix
    odd_coords: tuple
    d_even: list  # even -> odd, shape len(odd) x len(even)
    d_odd: list  # odd -> even
    ring: PolyRing

    def composes_to_zero(self) -> bool:
        return is_zero_matrix(mat_mul(self.d_odd, self.d_even, self.ring)) and is_zero_matrix(
            mat_mul(self.d_even, self.d_odd, self.ring)
        )


def hom_complex(E: MatrixFactorization, F: MatrixFactorization) -> HomComplex:
    if E.ring.variables != F.ring.variables:
        raise RingMismatchError("hom_complex needs both MFs in the same ring")
    if E.potential != F.potential:
        raise InputError("hom_complex needs both MFs to factor the same potential")
    ring = E.ring
    dE, dF = E.odd_map(), F.odd_map()
    nE, nF = 2 * E.rank, 2 * F.rank
    coords = [(i, j) for i in range(nF) for j in range(nE)]

    def parity(c):
        return int(c[0] >= F.rank) ^ int(c[1] >= E.rank)

    even = tuple(c for c in coords if parity(c) == 0)
    odd = tuple(c for c in coords if parity(c) == 1)
    e_index = {c: k for k, c in enumerate(even)}
    o_index = {c: k for k, c in enumerate(odd)}

    def column(c, sign):
        """Image of the unit map at ``c`` as a dict over target coordinates."""
        i, j = c
        img = {}
        for k in range(nF):
            if dF[k][i]:
                img[(k, j)] = img.get((k, j), ring.zero()) + dF[k][i]
        for l in range(nE):
            if dE[j][l]:
                img[(i, l)] = img.get((i, l), ring.zero()) - dE[j][l] * sign
        return img

    d_even = zeros(ring, len(odd), len(even))
    for c in even:
        for t, v in column(c, 1).items():
            d_even[o_index[t]][e_index[c]] = v
    d_odd = zeros(ring, len(even), len(odd))
    for c in odd:
        for t, v in column(c, -1).items():
            d_odd[e_index[t]][o_index[c]] = v
    return HomComplex(even, odd, d_even, d_odd, ring)


def _cohomology_dimension(outgoing, incoming, ring, middle):
    """``dim_Q ker(outgoing) / im(incoming)`` via a presentation of the kernel."""
    K = syzygies(outgoing, ring=ring, ncols=middle)
    kgens = [v for v in K.generators if any(v)]
    if not kgens:
        return 0, K, None
    cols = [list(v) for v in kgens]
    ncols_in = len(incoming[0]) if incoming and incoming[0] else 0
    cols += [[incoming[i][j] for i in range(middle)] for j in range(ncols_in)]
    mat = [[cols[j][i] for j in range(len(cols))] for i in range(middle)]
    rel = syzygies(mat, ring=ring, ncols=len(cols))
    s = len(kgens)
    P = Submodule(ring, s, [v[:s] for v in rel.generators])
    return module_quotient_dimension(P), K, P


@dataclass(frozen=True)
class StableHom:
    even_dim: object  # int or "infinite"
    odd_dim: object
    presentations: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {"even": self.even_dim, "odd": self.odd_dim}


def stable_hom_dims(E: MatrixFactorization, F: MatrixFactorization) -> StableHom:
    """Dimensions of the two cohomology groups of ``Hom(E, F)``."""
    hc = hom_complex(E, F)
    ne, no = len(hc.even_coords), len(hc.odd_coords)
    even, Ke, Pe = _cohomology_dimension(hc.d_even, hc.d_odd, hc.ring, ne)
    odd, Ko, Po = _cohomology_dimension(hc.d_odd, hc.d_even, hc.ring, no)
    return StableHom(even, odd, {"even": (Ke, Pe), "odd": (Ko, Po)})


def stable_hom_window(E: MatrixFactorization, F: MatrixFactorization, bound: int):
    """Degree-truncated linear-algebra estimate of ``(even, odd)`` dims."""
    hc = hom_complex(E, F)
    n = hc.ring.nvars
    even = window_homology(hc.d_odd, hc.d_even, len(hc.even_coords), n, bound).homology
    odd = window_homology(hc.d_even, hc.d_odd, len(hc.odd_coords), n, bound).homology
    return even, odd


# resolutions over R/(relations)

def _drop_zero_columns(m, nrows):
    keep = [j for j in range(len(m[0]) if m else 0) if any(m[i][j] for i in range(nrows))]
    return [[row[j] for j in keep] for row in m], keep


def _unit_entry(m):
    for p, row in enumerate(m):
        for q, x in enumerate(row):
            if x and x.is_constant():
                return p, q
    return None


def _cancel(m, p, q):
    """Split off the unit entry ``m[p][q]``: drop row p and column q, updating the rest."""
    u = m[p][q].constant_term()
    colq = [row[q] for row in m]
    out = []
    for k, row in enumerate(m):
        if k == p:
            continue
        new = []
        for j, x in enumerate(row):
            if j == q:
                continue
            if m[p][j] and colq[k]:
                x = x - colq[k] * m[p][j] * (1 / u)
            new.append(x)
        out.append(new)
    return out


@dataclass
class Resolution:
    """Free resolution segment ``F_0 <- F_1 <- ...`` over ``ring/(relations)``.

    ``maps[i]`` is the lifted differential ``F_{i+1} -> F_i`` over the
    polynomial ring; ``ranks[i]`` is the rank of ``F_i``.
    """

    ring: PolyRing
    relations: tuple
    maps: list
    ranks: list
    terminated: bool

    def to_dict(self) -> dict:
        return {
            "ranks": list(self.ranks),
            "terminated": self.terminated,
            "maps": [matrix_to_strings(m) for m in self.maps],
        }


def resolve(relations, presentation, steps: int, ring: PolyRing | None = None) -> Resolution:
    """Resolve ``coker(presentation)`` over ``Q[x]/(relations)`` for ``steps`` maps.

    Each step takes syzygies modulo the relations, reduces entries to normal
    form and cancels constant (unit) entries against the previous map.
    """
    pres = [list(r) for r in presentation]
    ring = ring or _ring_of(pres)
    if ring is None:
        raise InputError("cannot infer the ring of an empty presentation")
    rels = tuple(ring(f) for f in relations)
    gb = Ideal(ring, rels).groebner_basis()
    nrows = len(pres)
    d = reduce_matrix(pres, gb)
    if nrows and d and d[0]:
        d, _ = _drop_zero_columns(d, nrows)
    while nrows and d and d[0]:
        hit = _unit_entry(d)
        if hit is None:
            break
        d = _cancel(d, *hit)
        d = reduce_matrix(d, gb)
        nrows -= 1
        if nrows:
            d, _ = _drop_zero_columns(d, nrows)
    if nrows == 0:
        return Resolution(ring, rels, [], [0], True)
    ncols = len(d[0]) if d else 0
    if ncols == 0:
        return Resolution(ring, rels, [], [nrows], True)
    maps = [d]
    ranks = [nrows, ncols]
    terminated = False
    # one extra step so the last reported map is also pruned of redundant columns
    while len(maps) < steps + 1:
        last = maps[-1]
        K = syzygies(last, modulo=gb.polys, ring=ring, ncols=ranks[-1])
        cols = [list(v) for v in K.generators]
        S = [[gb.reduce(cols[j][i]) for j in range(len(cols))] for i in range(ranks[-1])]
        S, _ = _drop_zero_columns(S, ranks[-1]) if cols else ([[] for _ in range(ranks[-1])], [])
        if not S or not S[0]:
            terminated = True
            break
        while True:
            hit = _unit_entry(S)
            if hit is None:
                break
            p, q = hit
            maps[-1] = [row[:p] + row[p + 1:] for row in maps[-1]]
            ranks[-1] -= 1
            S = reduce_matrix(_cancel(S, p, q), gb)
            if ranks[-1] == 0 or not S or not S[0]:
                break
            S, _ = _drop_zero_columns(S, ranks[-1])
            if not S[0]:
                break
        if ranks[-1] == 0:
            # the previous map became zero-width: the module has finite projective dimension here
            maps.pop()
            ranks.pop()
            terminated = True
            break
        if not S or not S[0]:
            terminated = True
            break
        maps.append(S)
        ranks.append(len(S[0]))
    if len(maps) > steps:
        maps, ranks = maps[:steps], ranks[: steps + 1]
    return Resolution(ring, rels, maps, ranks, terminated)


def _constant_matrix(m):
    if any(not x.is_constant() for row in m for x in row):
        return None
    return [[x.constant_term() for x in row] for row in m]


def _as_mf_pair(A, B, W):
    """If ``A B = W C`` with ``C`` constant invertible, return ``(A, B C^-1)`` when it is an MF."""
    r = len(A)
    if len(A[0]) != r or len(B) != r or len(B[0]) != r:
        return None
    from .poly import exact_quotient

    AB = mat_mul(A, B)
    C = []
    for row in AB:
        new = []
        for x in row:
            if not x:
                new.append(W.ring.zero())
                continue
            try:
                new.append(exact_quotient(x, W))
            except ValueError:
                return None
        C.append(new)
    Cq = _constant_matrix(C)
    if Cq is None:
        return None
    try:
        Cinv = inverse(Cq)
    except ZeroDivisionError:
        return None
    ring = W.ring
    Bn = mat_mul(B, [[ring.constant(v) for v in row] for row in Cinv])
    mf = MatrixFactorization(W, A, Bn)
    return mf if validate_mf(mf).ok else None


@dataclass
class PeriodicityReport:
    resolution: Resolution
    periodic_index: int | None  # index i with (maps[i], maps[i+1]) an MF pair
    mf: MatrixFactorization | None

    def to_dict(self) -> dict:
        return {
            "resolution": self.resolution.to_dict(),
            "periodic_index": self.periodic_index,
            "detected": self.mf is not None,
            "mf": None if self.mf is None else self.mf.to_dict(),
        }


def resolution_over_hypersurface(W: Polynomial, presentation, steps: int) -> PeriodicityReport:
    if steps < 2:
        raise InputError("need at least 2 steps to detect periodicity")
    res = resolve([W], presentation, steps, ring=W.ring)
    for i in range(len(res.maps) - 1):
        mf = _as_mf_pair(res.maps[i], res.maps[i + 1], W)
        if mf is not None:
            return PeriodicityReport(res, i, mf)
    return PeriodicityReport(res, None, None)


def mf_from_module(W: Polynomial, presentation, steps: int = 6) -> MatrixFactorization:
    report = resolution_over_hypersurface(W, presentation, steps)
    if report.mf is None:
        raise PeriodicityNotDetectedError(f"no 2-periodic tail within {steps} steps")
    return report.mf


# Eisenbud operators

@dataclass
class EisenbudOperators:
    quotient_relations: tuple
    resolution: Resolution
    lifts: dict  # (j, i) -> lifted t_j on F_i -> F_{i-2}, over Q[x]
    operators: dict  # (j, i) -> lifts reduced mod the relations
    certificate_ok: bool
    chain_map_ok: bool

    def degrees(self):
        return sorted({i for (_, i) in self.operators})

    def to_dict(self) -> dict:
        return {
            "relations": [str(f) for f in self.quotient_relations],
            "resolution": self.resolution.to_dict(),
            "certificate_ok": self.certificate_ok,
            "chain_map_ok": self.chain_map_ok,
            "operators": [
                {"index": j + 1, "source_degree": i, "matrix": matrix_to_strings(m)}
                for (j, i), m in sorted(self.operators.items())
            ],
        }


def eisenbud_operators(f, presentation, segment_length: int, ring: PolyRing | None = None) -> EisenbudOperators:
    """Operators ``t_j`` from ``d~_{i-1} d~_i = sum_j f_j t~_j`` on a lifted resolution."""
    f = list(f)
    ring = ring or (f[0].ring if f else _ring_of(presentation))
    f = [ring(x) for x in f]
    report = check_sequence(ring, f)
    if not report.ok:
        raise NotRegularSequenceError(f"relations are not a regular sequence (prefix {report.failing_prefix})")
    res = resolve(f, presentation, segment_length, ring=ring)
    gb = Ideal(ring, f).groebner_basis()
    lifter = Lifter(ring, [[x] for x in f], rank=1)
    lifts, ops = {}, {}
    cert_ok = True
    for i in range(2, len(res.maps) + 1):
        A, B = res.maps[i - 2], res.maps[i - 1]  # d_{i-1}, d_i
        prod = mat_mul(A, B, ring)
        rows, cols = len(prod), len(prod[0]) if prod else 0
        t = [zeros(ring, rows, cols) for _ in f]
        for a in range(rows):
            for b in range(cols):
                if not prod[a][b]:
                    continue
                coeffs = lifter.lift([prod[a][b]])
                if coeffs is None:
                    raise AssertionError("composite of lifted differentials not in (f)")
                for j, c in enumerate(coeffs):
                    t[j][a][b] = c
        recon = zeros(ring, rows, cols)
        for j, fj in enumerate(f):
            recon = mat_add(recon, mat_scale(t[j], fj))
        cert_ok = cert_ok and recon == prod
        for j in range(len(f)):
            lifts[(j, i)] = t[j]
            ops[(j, i)] = reduce_matrix(t[j], gb)
    chain_ok = True
    for i in range(3, len(res.maps) + 1):
        for j in range(len(f)):
            lhs = mat_mul(res.maps[i - 3], ops[(j, i)], ring)  # d_{i-2} t^(i)
            rhs = mat_mul(ops[(j, i - 1)], res.maps[i - 1], ring)  # t^(i-1) d_i
            if not is_zero_matrix(reduce_matrix(mat_sub(lhs, rhs), gb)):
                chain_ok = False
    return EisenbudOperators(tuple(f), res, lifts, ops, cert_ok, chain_ok)


# segment cohomology at the origin

def _origin(ring):
    return [Fraction(0)] * ring.nvars


def _segment_cohomology(res: Resolution):
    """Cocycle bases and coboundary spans of ``Hom(F, k)``, ``k`` the residue field at 0.

    Degree ``i`` is only reported for ``i < len(maps)``, where the next map is known.
    """
    pt = _origin(res.ring)
    dual = [None] + [[list(r) for r in zip(*evaluate_matrix(m, pt))] if m and m[0] else [] for m in res.maps]
    # dual[i]: Hom(F_{i-1},k) -> Hom(F_i,k), shape ranks[i] x ranks[i-1]
    out = {}
    for i in range(len(res.maps)):
        nxt = dual[i + 1]
        n = res.ranks[i]
        Z = nullspace(nxt, n) if nxt else [[Fraction(int(a == b)) for a in range(n)] for b in range(n)]
        if i == 0 or not dual[i]:
            B = []
        else:
            prev = dual[i]
            B = [[prev[r][c] for r in range(len(prev))] for c in range(len(prev[0]))]
        out[i] = (Z, B)
    return out


def _acts_by_zero(T, Z, B):
    """Whether ``phi -> phi o T`` maps every cocycle in ``Z`` into the span of ``B``."""
    if not Z:
        return True
    Tt = [list(r) for r in zip(*T)] if T and T[0] else []
    images = []
    for z in Z:
        images.append([sum((Tt[r][c] * z[c] for c in range(len(z))), Fraction(0)) for r in range(len(Tt))])
    base = qrank(B) if B else 0
    return qrank((B or []) + images) == base if images and images[0] else True


def _compose_operator(ops, j, start, N):
    """Matrix of ``t_j^N`` from ``F_{start+2N}`` down to ``F_start``, over Q[x]."""
    M = None
    for k in range(N):
        src = start + 2 * (k + 1)
        t = ops[(j, src)]
        M = t if M is None else mat_mul(M, t)
    return M


def operator_acts_by_zero(eo: EisenbudOperators, j: int, N: int = 1):
    """Whether ``t_j^N`` vanishes on the segment cohomology in every degree where it is defined.

    Returns ``None`` when no degree is available for the check.
    """
    coh = _segment_cohomology(eo.resolution)
    pt = _origin(eo.resolution.ring)
    checked = False
    for i in sorted(coh):
        tgt = i + 2 * N
        if tgt not in coh or any((j, i + 2 * (k + 1)) not in eo.operators for k in range(N)):
            continue
        T = evaluate_matrix(_compose_operator(eo.operators, j, i, N), pt)
        Z, _ = coh[i]
        _, B = coh[tgt]
        checked = True
        if not _acts_by_zero(T, Z, B):
            return False
    return True if checked else None


def commutator_acts_by_zero(eo: EisenbudOperators, j: int, k: int):
    """Whether ``t_j t_k - t_k t_j`` vanishes on segment cohomology."""
    coh = _segment_cohomology(eo.resolution)
    pt = _origin(eo.resolution.ring)
    checked = False
    for i in sorted(coh):
        tgt = i + 4
        if tgt not in coh or (j, i + 2) not in eo.operators or (j, i + 4) not in eo.operators:
            continue
        a = mat_mul(eo.operators[(j, i + 2)], eo.operators[(k, i + 4)])
        b = mat_mul(eo.operators[(k, i + 2)], eo.operators[(j, i + 4)])
        T = evaluate_matrix(mat_sub(a, b), pt)
        checked = True
        if not _acts_by_zero(T, coh[i][0], coh[tgt][1]):
            return False
    return True if checked else None


@dataclass
class NilpotenceReport:
    detected: bool
    exponent: int | None
    segment_length: int
    operators: EisenbudOperators | None

    def to_dict(self) -> dict:
        return {
            "detected": self.detected,
            "exponent": self.exponent,
            "segment_length": self.segment_length,
            "status": "nilpotent" if self.detected else "not detected within segment",
        }


def operator_nilpotence_probe(f, g_extra, presentation, segment_length: int = 6, ring=None) -> NilpotenceReport:
    """Look for ``N`` with ``t^N = 0`` on segment cohomology, ``t`` the operator of ``g_extra``."""
    f = list(f)
    ring = ring or g_extra.ring
    rels = [ring(x) for x in f] + [ring(g_extra)]
    for x in rels:
        if x.constant_term() != 0:
            raise InputError("relations must vanish at the origin for the residue-field probe")
    eo = eisenbud_operators(rels, presentation, segment_length, ring=ring)
    if eo.resolution.ranks == [0]:
        return NilpotenceReport(True, 0, segment_length, eo)
    j = len(rels) - 1
    for N in range(1, segment_length // 2 + 1):
        verdict = operator_acts_by_zero(eo, j, N)
        if verdict is None:
            break
        if verdict:
            return NilpotenceReport(True, N, segment_length, eo)
    return NilpotenceReport(False, None, segment_length, eo)


__all__ = [
    "MatrixFactorization",
    "MFValidation",
    "validate_mf",
    "koszul_mf",
    "tensor_mf",
    "shift",
    "hom_complex",
    "stable_hom_dims",
    "stable_hom_window",
    "resolve",
    "resolution_over_hypersurface",
    "mf_from_module",
    "eisenbud_operators",
    "operator_nilpotence_probe",
    "operator_acts_by_zero",
    "commutator_acts_by_zero",
    "INFINITE",
]
