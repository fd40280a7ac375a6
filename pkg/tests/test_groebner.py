from fractions import Fraction
from itertools import product

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from mfcoh.errors import BudgetExceededError, OrderMismatchError
from mfcoh.groebner import (
    EMPTY,
    INFINITE,
    Ideal,
    Lifter,
    Submodule,
    elimination_ideal,
    groebner_basis,
    ideal_quotient,
    intersection,
    krull_dimension,
    module_quotient_dimension,
    normal_form,
    quotient_basis,
    saturation,
    spair_budget,
    syzygies,
)
from mfcoh.linalg import rank
from mfcoh.poly import GREVLEX, LEX, PolyRing, Polynomial
from strategies import polynomials

RX = PolyRing(("x",))
RXY = PolyRing(("x", "y"))
RXYZ = PolyRing(("x", "y", "z"))
R5 = PolyRing(("x1", "x2", "x3", "x4", "x5"))


def ideal(ring, *srcs):
    return Ideal(ring, [ring.parse(s) for s in srcs])


def to_sympy(p: Polynomial, symbols):
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[s**k for s, k in zip(symbols, e)])
         for e, c in p.terms.items()),
        sympy.Integer(0),
    )


def from_sympy(expr, ring: PolyRing):
    poly = sympy.Poly(expr, *sympy.symbols(ring.variables))
    return Polynomial(ring, {m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})


def sympy_basis(polys, ring, order):
    symbols = sympy.symbols(ring.variables)
    G = sympy.groebner([to_sympy(p, symbols) for p in polys], *symbols, order=order, domain="QQ")
    return {from_sympy(g, ring).monic(GREVLEX if order == "grevlex" else LEX) for g in G.exprs}


def test_twisted_cubic_lex():
    ring = PolyRing(("z", "y", "x"), LEX)
    gb = Ideal(ring, [ring.parse("y - x^2"), ring.parse("z - x^3")]).groebner_basis()
    assert set(gb.polys) == {ring.parse("z - x^3"), ring.parse("y - x^2")}


def test_unit_ideal_basis():
    assert ideal(RXY, "1").groebner_basis().polys == (RXY.one(),)
    assert ideal(RXY, "x", "x + 1").is_unit()


def test_already_a_basis():
    assert set(ideal(RXY, "x^2", "x*y").groebner_basis().polys) == {RXY.parse("x^2"), RXY.parse("x*y")}


def test_normal_forms():
    I = ideal(RXY, "x^2 - y")
    assert normal_form(RXY.parse("x^2"), I.groebner_basis()) == RXY.parse("y")
    assert normal_form(RXY.parse("x^3 - x*y"), I.groebner_basis()).is_zero()
    lex_ring = RXY.with_order(LEX)
    gb = Ideal(lex_ring, [lex_ring.parse("x^2 - y")]).groebner_basis()
    assert normal_form(lex_ring.parse("x^3"), gb) == lex_ring.parse("x*y")


def test_normal_form_order_mismatch():
    gb = ideal(RXY, "x^2 - y").groebner_basis()
    with pytest.raises(OrderMismatchError):
        normal_form(RXY.parse("x"), gb, LEX)


def test_elimination_examples():
    ring = PolyRing(("t", "x"))
    E = elimination_ideal(ideal(ring, "t - x^2", "x - 2"), ["t"])
    assert E.groebner_basis().polys == (E.ring.parse("t - 4"),)
    assert elimination_ideal(ideal(ring, "1"), ["t"]).is_unit()
    E = elimination_ideal(ideal(ring, "3*x^2 - 3", "t - x^3 + 3*x"), ["t"])
    assert E.groebner_basis().polys == (E.ring.parse("t^2 - 4"),)


def test_saturation_examples():
    assert saturation(ideal(RXY, "x*y"), ideal(RXY, "x")) == ideal(RXY, "y")
    I = ideal(RXY, "x^2 - y^3", "x*y")
    assert saturation(I, ideal(RXY, "1")) == I
    # x^2 * 1 lies in (x^2, xy), so the saturation by (x) is the unit ideal
    assert saturation(ideal(RXY, "x^2", "x*y"), ideal(RXY, "x")).is_unit()


def test_saturation_needs_several_quotients():
    I = ideal(RXY, "x^3*y", "y^2")
    assert saturation(I, ideal(RXY, "x")) == ideal(RXY, "y")


def test_quotient_and_intersection():
    I, J = ideal(RXY, "x*y"), ideal(RXY, "x")
    assert ideal_quotient(I, J) == ideal(RXY, "y")
    assert intersection(ideal(RXY, "x"), ideal(RXY, "y")) == ideal(RXY, "x*y")


def test_krull_dimension_examples():
    assert krull_dimension(ideal(R5, "x1*x2 + x3*x4")) == 4
    assert krull_dimension(ideal(R5, "1")) == EMPTY
    assert krull_dimension(ideal(R5, "x1*x2 + x3*x4", "x2^2 + x3^2 + x4^2 + x5^2")) == 3
    assert krull_dimension(Ideal(R5, [])) == 5


def test_quotient_basis_examples():
    st_ = quotient_basis(ideal(RXY, "3*x^2", "3*y^2"))
    assert set(st_.standard) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert st_.dimension == 4
    assert quotient_basis(ideal(RXY, "x", "y")).standard == ((0, 0),)
    assert quotient_basis(ideal(RXY, "x^2")).dimension == INFINITE


def test_syzygy_examples():
    x, y = RXY.gens()
    K = syzygies([[x, y]])
    assert Submodule(RXY, 2, K.generators) == Submodule(RXY, 2, [(y, -x)])
    K = syzygies([[x * x, x * y]])
    assert Submodule(RXY, 2, K.generators) == Submodule(RXY, 2, [(y, -x)])
    one, zero = RXY.one(), RXY.zero()
    assert syzygies([[one, zero], [zero, one]]).is_zero()


def test_module_quotient_dimension_examples():
    x = RX.var("x")
    assert module_quotient_dimension(Submodule(RX, 1, [(x * x,)])) == 2
    assert module_quotient_dimension(Submodule(RX, 2, [(RX.one(), RX.zero()), (RX.zero(), RX.one())])) == 0
    assert module_quotient_dimension(Submodule(RX, 2, [(x, RX.zero()), (RX.zero(), x**3)])) == 4
    assert module_quotient_dimension(Submodule(RXY, 1, [(RXY.var("x"),)])) == INFINITE


def test_lifter_returns_cofactors():
    gens = [RXY.parse("x^2"), RXY.parse("x*y - 1")]
    p = RXY.parse("x^3*y + x^2 - x")
    cof = Lifter(RXY, [[g] for g in gens], rank=1).lift([p])
    assert cof is not None
    assert sum((c * g for c, g in zip(cof, gens)), RXY.zero()) == p
    assert Lifter(RXY, [[gens[0]]], rank=1).lift([RXY.var("y")]) is None


def test_budget_exceeded():
    gens = ["x^2*y - z", "x*y^2 - x", "z^2 - y"]
    with spair_budget(None) as counter:
        ideal(RXYZ, *gens).groebner_basis()
    assert counter.spent > 2
    with spair_budget(2):
        with pytest.raises(BudgetExceededError):
            ideal(RXYZ, *gens).groebner_basis()


def test_reduced_basis_is_deterministic():
    gens = ["x^2*y - z", "x*y^2 - x", "z^2 - y"]
    a = ideal(RXYZ, *gens).groebner_basis().polys
    b = ideal(RXYZ, *reversed(gens)).groebner_basis().polys
    assert a == b


small = polynomials(RXYZ, max_degree=3, max_terms=3)


@settings(max_examples=25)
@given(st.lists(small, min_size=1, max_size=3), st.sampled_from(["grevlex", "lex"]))
def test_basis_matches_sympy(gens, order):
    ring = RXYZ.with_order(GREVLEX if order == "grevlex" else LEX)
    gens = [g.to_ring(ring) for g in gens]
    ours = set(Ideal(ring, gens).groebner_basis().polys)
    theirs = {p for p in sympy_basis(gens, ring, order) if not p.is_zero()}
    assert ours == theirs


@settings(max_examples=25)
@given(st.lists(small, min_size=1, max_size=3))
def test_spolynomials_reduce_to_zero(gens):
    gb = Ideal(RXYZ, gens).groebner_basis()
    polys = gb.polys
    for g in gens:
        assert gb.reduce(g).is_zero()
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            a, b = polys[i], polys[j]
            ea, eb = a.leading_monomial(), b.leading_monomial()
            lcm = tuple(max(u, v) for u, v in zip(ea, eb))
            s = a.mul_monomial(tuple(u - v for u, v in zip(lcm, ea))) - b.mul_monomial(tuple(u - v for u, v in zip(lcm, eb)))
            assert gb.reduce(s).is_zero()


@settings(max_examples=20)
@given(st.lists(polynomials(RXY, max_degree=3, max_terms=3), min_size=1, max_size=2))
def test_elimination_is_sound(gens):
    ring = PolyRing(("x", "y"))
    I = Ideal(ring, gens)
    E = elimination_ideal(I, ["y"])
    gb = I.groebner_basis()
    for g in E.groebner_basis().polys:
        assert set(g.variables_used()) <= {"y"}
        assert gb.reduce(g.to_ring(ring)).is_zero()


def _brute_force_quotient_dim(I, bound):
    """``dim`` of ``Q[x]_{<=bound} / (I cap ...)`` via the span of ``m * g`` for all multipliers."""
    ring = I.ring
    mons = [e for e in product(range(bound + 1), repeat=ring.nvars) if sum(e) <= bound]
    index = {e: i for i, e in enumerate(mons)}
    rows = []
    for g in I.groebner_basis().polys:
        for m in product(range(bound + 1), repeat=ring.nvars):
            h = g.mul_monomial(m)
            if h.total_degree() <= bound:
                row = [Fraction(0)] * len(mons)
                for e, c in h.terms.items():
                    row[index[e]] = c
                rows.append(row)
    return len(mons) - (rank(rows) if rows else 0)


@settings(max_examples=15)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(-3, 3))
def test_staircase_count_matches_linear_algebra(a, b, c):
    # homogeneous generators, so truncating by degree loses nothing
    x, y = RXY.gens()
    I = Ideal(RXY, [x ** (a + 1) + x * y**a * c, y ** (b + 1)])
    st_ = quotient_basis(I)
    assert st_.finite
    assert st_.dimension == _brute_force_quotient_dim(I, a + b + 2)


@settings(max_examples=20)
@given(st.lists(st.lists(polynomials(RXY, max_degree=2, max_terms=2), min_size=3, max_size=3), min_size=1, max_size=2))
def test_syzygies_multiply_to_zero(matrix):
    K = syzygies(matrix, ring=RXY, ncols=3)
    for v in K.generators:
        for row in matrix:
            assert sum((a * b for a, b in zip(row, v)), RXY.zero()).is_zero()


def test_groebner_basis_function_dispatch():
    I = ideal(RXY, "x^2", "x*y")
    assert groebner_basis(I).polys == I.groebner_basis().polys
    M = Submodule(RXY, 2, [(RXY.var("x"), RXY.var("y"))])
    assert len(groebner_basis(M).vectors) == 1
