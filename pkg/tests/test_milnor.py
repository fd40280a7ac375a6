import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from mfcoh import univariate as U
from mfcoh.crit import critical_values
from mfcoh.errors import NonIsolatedError
from mfcoh.lg import LGModel, regularize
from mfcoh.milnor import (
    NON_ISOLATED,
    hh_rank,
    hp_rank,
    koszul_differential,
    koszul_regular_case_check,
    milnor_algebra,
    multiplication_matrix,
    per_value_milnor_numbers,
    truncated_koszul_homology,
)
from mfcoh.poly import PolyRing
from strategies import polynomials, random_isolated

EXAMPLE = LGModel.from_strings(
    ["x1", "x2", "x3", "x4", "x5"], ["x1*x2 + x3*x4"], "x2^2 + x3^2 + x4^2 + x5^2"
)
PARABOLA = LGModel.from_strings(["x1", "x2"], ["x2 - x1^2"], "x2")
RX = PolyRing(("x",))
RXY = PolyRing(("x", "y"))


def test_milnor_algebra_examples():
    assert milnor_algebra(RXY.parse("x^2 + y^2")).mu_total == 1
    alg = milnor_algebra(RXY.parse("x^3 + y^3"))
    assert alg.mu_total == 4
    assert set(alg.algebra_basis.standard) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert milnor_algebra(regularize(EXAMPLE).W) == NON_ISOLATED


def test_per_value_examples():
    md = per_value_milnor_numbers(RX.parse("x^3 - 3*x"))
    assert md.mu_total == 2
    assert md.per_value() == {2: 1, -2: 1}
    assert per_value_milnor_numbers(RX.parse("x^2")).per_value() == {0: 1}
    md = per_value_milnor_numbers(regularize(PARABOLA).W)
    assert md.mu_total == 1
    assert md.per_value() == {0: 1}


def test_per_value_non_isolated_raises():
    with pytest.raises(NonIsolatedError):
        per_value_milnor_numbers(regularize(EXAMPLE).W)


def test_nonrational_values_keep_their_multiplicity():
    md = per_value_milnor_numbers(RX.parse("1/4*x^4 - x^2 - x"))
    assert md.mu_total == 3
    assert md.per_value() == {Fraction(1, 4): 1}
    assert [k for _, k in md.nonrational_factors] == [1]
    assert sum(mu for _, mu in md.rational_values) + sum(k * (len(f) - 1) for f, k in md.nonrational_factors) == 3


def test_regular_case_check():
    assert koszul_regular_case_check(RXY.parse("x^2 + y^2"))
    assert not koszul_regular_case_check(regularize(EXAMPLE).W)
    assert koszul_regular_case_check(RX.parse("x"))
    assert milnor_algebra(RX.parse("x")).mu_total == 0


def test_koszul_differential_squares_to_zero():
    W = PolyRing(("x", "y", "z")).parse("x^2*y + y^3 - z^2*x")
    for k in range(2):
        d0, d1 = koszul_differential(W, k), koszul_differential(W, k + 1)
        for i in range(len(d1)):
            for j in range(len(d0[0])):
                assert sum((d1[i][l] * d0[l][j] for l in range(len(d0))), W.ring.zero()).is_zero()


def test_truncated_examples():
    win = truncated_koszul_homology(RXY.parse("x*y"), 4)
    assert win.dims == (0, 0, 1)
    assert set(win.certified) == {0, 1, 2}
    win = truncated_koszul_homology(RXY.zero(), 2)
    # the differential vanishes: every truncated form survives
    assert win.dims == (6, 12, 6)
    win = truncated_koszul_homology(RX.parse("x^3 - 3*x"), 6)
    assert win.dims == (0, 2)


@pytest.mark.parametrize("src, mu", [("x^3 + y^3", 4), ("x^2 + y^4", 3), ("x^2*y + y^4", 5)])
def test_truncated_oracle_reproduces_mu(src, mu):
    W = RXY.parse(src)
    assert milnor_algebra(W).mu_total == mu
    win = truncated_koszul_homology(W, 8)
    assert win.dims == (0, 0, mu)
    assert 2 in win.certified


def test_hh_regular_cases():
    rep = hh_rank(LGModel.from_strings(["x"], [], "x^2"))
    assert rep.regular_sequence_case and rep.total_dim == 1 and rep.parity == 1
    assert rep.dims_by_degree == {1: 1}
    rep = hh_rank(PARABOLA)
    assert rep.total_dim == 1 and rep.n_plus_m == 3 and rep.parity == 1
    assert rep.milnor.per_value() == {0: 1}


def test_hh_example_is_a_window():
    rep = hh_rank(EXAMPLE, 2)
    assert not rep.regular_sequence_case
    assert rep.total_dim is None
    assert rep.window is not None and rep.window.bound == 2
    assert set(rep.dims_by_degree) == set(rep.window.certified)


def test_hp_examples():
    assert hp_rank(PARABOLA).rank == 1
    assert hp_rank(PARABOLA).split() == {0: 1}
    rep = hp_rank(LGModel.from_strings(["x"], [], "x^3 - 3*x"))
    assert rep.rank == 2 and rep.split() == {2: 1, -2: 1}
    assert hp_rank(LGModel.from_strings(["x"], [], "x")).rank == 0
    with pytest.raises(NonIsolatedError):
        hp_rank(EXAMPLE)


def test_charpoly_of_multiplication_matrix_matches_sympy():
    import sympy

    W = RXY.parse("x^3 + y^3 - 3*x*y")
    md = milnor_algebra(W)
    from mfcoh.crit import jacobian_ideal

    M = multiplication_matrix(W, md.algebra_basis, jacobian_ideal(W).groebner_basis())
    t = sympy.Symbol("t")
    expected = sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in row] for row in M]).charpoly(t)
    got = per_value_milnor_numbers(W).charpoly
    assert [sympy.Rational(c.numerator, c.denominator) for c in got] == list(reversed(expected.all_coeffs()))


def _sample(seed, count, ring):
    rng = random.Random(seed)
    return [random_isolated(rng, ring) for _ in range(count)]


def test_thom_sebastiani_on_seeded_pairs():
    RX2 = PolyRing(("x", "y"))
    RY2 = PolyRing(("u", "v"))
    big = PolyRing(("x", "y", "u", "v"))
    for (p, mp), (q, mq) in zip(_sample(1, 8, RX2), _sample(2, 8, RY2)):
        W = p.to_ring(big) + q.to_ring(big)
        assert milnor_algebra(W).mu_total == mp * mq


def test_knoerrer_on_seeded_sample():
    big = PolyRing(("x", "y", "u", "v"))
    for p, mu in _sample(3, 8, RXY):
        W = p.to_ring(big) + big.parse("u*v")
        assert milnor_algebra(W).mu_total == mu


@settings(max_examples=12)
@given(polynomials(RXY, max_degree=4, max_terms=4))
def test_eigenvalues_agree_with_eliminant(W):
    alg = milnor_algebra(W)
    if alg == NON_ISOLATED or alg.mu_total == 0:
        return
    md = per_value_milnor_numbers(W)
    crit = critical_values(W)
    assert tuple(c for c, _ in md.rational_values) == crit.rational_values
    assert U.divides_power(U.squarefree_part(list(md.charpoly)), list(crit.eliminant))
    total = sum(mu for _, mu in md.rational_values) + sum(k * (len(f) - 1) for f, k in md.nonrational_factors)
    assert total == md.mu_total
