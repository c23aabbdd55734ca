from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qkzstrip.exactalg import (
    BiPoly, ExactDivisionError, LaurentScalar, MultiPoly, TauPoly, bareiss_det, cheb_u,
    cheb_u_ext, cofactor_det, leibniz_det, tau_to_q, u_q,
)

coeffs = st.lists(st.integers(-50, 50), max_size=6)
polys = coeffs.map(TauPoly)


def test_taupoly_basics():
    p = TauPoly([1, 0, 1])
    assert p.degree == 2 and p.valuation == 0
    assert p.leading() == 1 and p.lowest() == 1
    assert TauPoly.monomial(3).valuation == 3
    assert str(TauPoly([1, -2, 0, 1])) == "1 - 2*tau + tau^3"
    assert TauPoly([0, 0]) == 0 and not TauPoly([0, 0])
    assert p(Fraction(1, 2)) == Fraction(5, 4)


def test_chebyshev_values():
    assert cheb_u(1) == TauPoly([0, -1])
    assert cheb_u(2) == TauPoly([-1, 0, 1])
    assert cheb_u_ext(-1) == 0
    assert cheb_u_ext(-3) == -cheb_u(1)
    for k in range(-6, 8):
        assert cheb_u_ext(k + 1) == -(TauPoly.monomial(1) * cheb_u_ext(k)) - cheb_u_ext(k - 1)


def test_chebyshev_matches_q_form():
    for k in range(-1, 9):
        assert tau_to_q(cheb_u(k)) == u_q(k)


def test_laurent_arithmetic():
    q = LaurentScalar.q(1)
    assert q * LaurentScalar.q(-1) == 1
    x = (q - LaurentScalar.q(-1)) ** 3
    assert (x * q).exact_div(q) == x
    assert tau_to_q(TauPoly.monomial(1)) == -q - LaurentScalar.q(-1)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a) == 0


@given(polys, polys.filter(bool))
def test_exact_division_roundtrip(a, b):
    assert (a * b).exact_div(b) == a


def test_exact_division_refuses_remainder():
    with pytest.raises(ExactDivisionError):
        TauPoly([1, 0, 1]).exact_div(TauPoly([1, 1]))


@settings(max_examples=40)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
def test_determinant_routes_agree(m):
    assert bareiss_det(m) == leibniz_det(m) == cofactor_det(m)


def test_bareiss_over_polynomials():
    t = TauPoly.monomial(1)
    m = [[t, TauPoly.one(), TauPoly.zero()], [TauPoly.one(), t, TauPoly.one()], [TauPoly.zero(), TauPoly.one(), t]]
    assert bareiss_det(m, one=TauPoly.one()) == t * t * t - t - t
    assert bareiss_det([], one=TauPoly.one()) == 1


def test_bipoly_views():
    b = BiPoly.from_terms([(0, 0, 1), (1, 1, 1), (0, 2, 1)])
    assert b.grid() == [[1, 0, 1], [0, 1, 0]]
    assert b(1, 1) == 3
    assert b.at_t(1) == TauPoly([1, 1, 1])
    assert str(BiPoly.from_terms([(1, 0, 1), (0, 1, 1)])) == "tau + t"
    assert b.reversed_t(1).reversed_t(1) == b


def test_multipoly_ops():
    x = MultiPoly.var(2, 0)
    y = MultiPoly.var(2, 1)
    f = (x - y) * (x + y)
    assert f.exact_div(x - y) == x + y
    assert f.swap(0, 1) == -f
    assert f.total_degree() == 2 and f.degree_in(1) == 2
    assert f.eval_var(1, 0).drop_var(1) == MultiPoly.var(1, 0) ** 2
    assert MultiPoly.const(2, 3).at_ones() == 3
