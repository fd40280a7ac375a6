"""The eleven acceptance criteria, at their stated tolerances (all exact).

Each test carries a ``criterion`` marker; the run ends with one PASS/FAIL
line per criterion (see ``conftest.py``).
"""

import random
import time
from fractions import Fraction

import pytest

from mfcoh import univariate as U
from mfcoh.cli import RunConfig, corpus_names, load_model
from mfcoh.crit import critical_values, cross_check, is_relative_critical_point, nonvanishing_values, relative_critical_values
from mfcoh.lg import LGModel, regularize
from mfcoh.matfac import (
    commutator_acts_by_zero,
    eisenbud_operators,
    hom_complex,
    koszul_mf,
    mf_from_module,
    operator_nilpotence_probe,
    resolution_over_hypersurface,
    shift,
    stable_hom_dims,
    stable_hom_window,
    tensor_mf,
    validate_mf,
    MatrixFactorization,
)
from mfcoh.milnor import hh_rank, hp_rank, milnor_algebra, per_value_milnor_numbers
from mfcoh.poly import PolyRing
from strategies import random_isolated, random_polynomial

EXAMPLE = LGModel.from_strings(
    ["x1", "x2", "x3", "x4", "x5"], ["x1*x2 + x3*x4"], "x2^2 + x3^2 + x4^2 + x5^2"
)
RX = PolyRing(("x",))
RXY = PolyRing(("x", "y"))
RUV = PolyRing(("u", "v"))
R4 = PolyRing(("x", "y", "u", "v"))


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


@pytest.mark.criterion(1, "example end-to-end: W, crit-values {0}, relcrit {0}, agree")
def test_criterion_01_example_end_to_end():
    with Clock() as clock:
        reg = regularize(EXAMPLE)
        assert reg.W == reg.ring.parse("(x1*x2 + x3*x4)*x6 + x2^2 + x3^2 + x4^2 + x5^2")
        crit = critical_values(reg.W)
        rel = relative_critical_values(EXAMPLE)
        assert crit.rational_values == (0,) and not crit.nonrational_factors
        assert rel.rational_values == (0,) and not rel.nonrational_factors
        assert cross_check(rel, crit) == "agree"
    assert clock.seconds <= 30


@pytest.mark.criterion(2, "pointwise ranks on the example")
def test_criterion_02_pointwise_ranks():
    with Clock() as clock:
        a = is_relative_critical_point(EXAMPLE, [1, 0, 0, 0, 0])
        b = is_relative_critical_point(EXAMPLE, [0, 0, 0, 0, 1])
    assert a.is_relative_critical and (a.rank_f, a.rank_fg) == (1, 1)
    assert not b.is_relative_critical and (b.rank_f, b.rank_fg) == (0, 1)
    assert clock.seconds <= 1


@pytest.mark.criterion(3, "HH/HP smallest cases")
def test_criterion_03_hh_hp_small_cases():
    with Clock() as c1:
        m = LGModel.from_strings(["x"], [], "x^2")
        hh = hh_rank(m)
        assert hh.total_dim == 1 and hh.parity == 1
        hp = hp_rank(m)
        assert hp.rank == 1 and hp.split() == {0: 1}
    with Clock() as c2:
        hp = hp_rank(LGModel.from_strings(["x"], [], "x^3 - 3*x"))
        assert hp.rank == 2 and hp.split() == {2: 1, -2: 1}
    with Clock() as c3:
        hp = hp_rank(LGModel.from_strings(["x1", "x2"], ["x2 - x1^2"], "x2"))
        assert hp.rank == 1 and hp.split() == {0: 1}
    assert max(c1.seconds, c2.seconds, c3.seconds) <= 5


def _isolated_pairs(count=24):
    rng = random.Random(20240601)
    pairs = []
    for _ in range(count):
        p, mp = random_isolated(rng, RXY, max_degree=4)
        q, mq = random_isolated(rng, RUV, max_degree=4)
        pairs.append((p, mp, q, mq))
    return pairs


PAIRS = _isolated_pairs()


@pytest.mark.criterion(4, "Thom-Sebastiani on 24 random isolated pairs")
def test_criterion_04_thom_sebastiani():
    assert len(PAIRS) >= 20
    with Clock() as clock:
        for p, mp, q, mq in PAIRS:
            assert p.total_degree() <= 4 and q.total_degree() <= 4
            W = p.to_ring(R4) + q.to_ring(R4)
            assert milnor_algebra(W).mu_total == mp * mq
    assert clock.seconds <= 60


@pytest.mark.criterion(5, "Knoerrer invariance on the same sample")
def test_criterion_05_knoerrer():
    with Clock() as clock:
        for p, mp, q, mq in PAIRS:
            for W, mu, ring in ((p, mp, R4), (q, mq, PolyRing(("u", "v", "x", "y")))):
                fresh = [v for v in ring.variables if v not in W.ring.variables]
                extra = ring.var(fresh[0]) * ring.var(fresh[1])
                assert milnor_algebra(W.to_ring(ring) + extra).mu_total == mu
    assert clock.seconds <= 60


@pytest.mark.criterion(6, "translation shifts the eliminant, 10 random (W, c)")
def test_criterion_06_translation():
    rng = random.Random(7)
    done = 0
    while done < 10:
        W = random_polynomial(rng, RXY, 3, 4)
        if W.total_degree() < 2:
            continue
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        a = critical_values(W)
        b = critical_values(W - c)
        assert list(b.eliminant) == U.monic(U.shift(list(a.eliminant), c))
        done += 1


ISOLATED_FIXTURES = [
    RX.parse("x^2"),
    RX.parse("x^3 - 3*x"),
    RX.parse("1/4*x^4 - x^2 - x"),
    RXY.parse("x^2 + y^2"),
    RXY.parse("x^3 + y^3"),
    RXY.parse("x^3 + y^3 - 3*x*y"),
    RXY.parse("x^2*y - y^3 + y"),
    RXY.parse("x^4 + y^4 - x^2 - 2*y^2"),
    PolyRing(("x1", "x2", "x3")).parse("x2 + (x2 - x1^2)*x3"),
] + [p for p, _, _, _ in PAIRS[:6]]


@pytest.mark.criterion(7, "eigenvalues of mult-by-W agree with the crit eliminant")
def test_criterion_07_cross_method():
    for W in ISOLATED_FIXTURES:
        md = per_value_milnor_numbers(W)
        crit = critical_values(W)
        assert tuple(c for c, _ in md.rational_values) == crit.rational_values
        assert U.divides_power(U.squarefree_part(list(md.charpoly)), list(crit.eliminant))


def _random_constructions(rng, count=50):
    out = []
    for k in range(count):
        kind = k % 4
        if kind == 0:
            n = rng.randint(1, 4)
            a = [random_polynomial(rng, RXY, 3, 2, constant=False) for _ in range(n)]
            b = [random_polynomial(rng, RXY, 3, 2, constant=False) for _ in range(n)]
            out.append(("koszul", koszul_mf(a, b)))
        elif kind == 1:
            E = koszul_mf(*[[random_polynomial(rng, RXY, 3, 2) for _ in range(2)] for _ in range(2)])
            F = koszul_mf(*[[random_polynomial(rng, RUV, 3, 2) for _ in range(2)] for _ in range(2)])
            out.append(("tensor", tensor_mf(E, F)))
        elif kind == 2:
            n = rng.randint(1, 3)
            a = [random_polynomial(rng, RXY, 3, 3) for _ in range(n)]
            b = [random_polynomial(rng, RXY, 3, 3) for _ in range(n)]
            out.append(("shift", shift(koszul_mf(a, b))))
        else:
            p = q = RXY.zero()
            while p.total_degree() < 1 or q.total_degree() < 1:
                p = random_polynomial(rng, RXY, 3, 2, constant=False)
                q = random_polynomial(rng, RXY, 3, 2, constant=False)
            out.append(("from-module", mf_from_module(p * q, [[p]], 4)))
    return out


@pytest.mark.criterion(8, "MF algebra on 50 randomized constructions")
def test_criterion_08_mf_algebra():
    built = _random_constructions(random.Random(11))
    assert len(built) == 50
    for kind, mf in built:
        assert mf.rank <= 8
        assert max(e.total_degree() for m in (mf.delta0, mf.delta1) for row in m for e in row) <= 3
        assert validate_mf(mf).ok, kind
        if mf.rank <= 2:
            assert hom_complex(mf, mf).composes_to_zero(), kind
            assert hom_complex(mf, shift(mf)).composes_to_zero(), kind


@pytest.mark.criterion(9, "stable End of (x, x) over x^2 is (1, 1), oracle agrees")
def test_criterion_09_stable_end():
    x = RX.var("x")
    E = MatrixFactorization(x * x, [[x]], [[x]])
    with Clock() as clock:
        dims = stable_hom_dims(E, E)
        oracle = stable_hom_window(E, E, 4)
    assert (dims.even_dim, dims.odd_dim) == (1, 1)
    assert oracle == (1, 1)
    assert clock.seconds <= 5


@pytest.mark.criterion(10, "Eisenbud machinery: periodicity, certificate, nilpotence probe")
def test_criterion_10_eisenbud():
    x1 = RX.var("x")
    x, y = RXY.gens()
    with Clock() as clock:
        rep = resolution_over_hypersurface(x1 * x1, [[x1]], 4)
        assert rep.periodic_index == 0
        assert (rep.mf.delta0, rep.mf.delta1) == ([[x1]], [[x1]])
        eo = eisenbud_operators([x * x, y * y], [[x, y]], 6)
        assert len(eo.quotient_relations) == 2
        assert eo.certificate_ok and eo.chain_map_ok
        assert commutator_acts_by_zero(eo, 0, 1)
        assert operator_nilpotence_probe([x * x], y * y, [[x, y * y]], 6).detected
        assert not operator_nilpotence_probe([x * x], y * y, [[x, y]], 6).detected
    assert clock.seconds <= 30


@pytest.mark.criterion(11, "corpus: finitely many values with possibly nonzero MFcoh, equal to relcrit")
def test_criterion_11_finiteness():
    names = corpus_names()
    assert "paper-example.json" in names
    checked = 0
    for name in names:
        model = load_model(name, RunConfig())
        support = nonvanishing_values(model)
        if support.eliminant is None:
            continue
        rel = relative_critical_values(model)
        assert support.finite
        assert support.eliminant == rel.values_eliminant
        assert support.rational_values == rel.rational_values
        assert support.nonrational_factors == rel.nonrational_factors
        checked += 1
    assert checked == len(names)
