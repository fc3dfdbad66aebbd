from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from psjack.cherednik import (
    L_plus,
    op_D,
    op_D_from_H,
    op_H,
    op_I,
    q_box,
    q_circle,
    seki_eigenvalue,
    sekiguchi_circ,
    sekiguchi_star,
    xi,
    xi_eigenvalue,
)
from psjack.jack import nonsym_jack
from psjack.mpoly import SparsePoly, asym, in_symmetry_class, monomial, sym, vandermonde
from psjack.qalpha import ALPHA
from psjack.spart import Order, dominance_compositions, partitions, phi_m, sort_to_partition, superpartition


def x(n, i):
    return SparsePoly.var(n, i)


@st.composite
def polys(draw, nvars, max_deg=3, max_terms=4):
    terms = {}
    for _ in range(draw(st.integers(1, max_terms))):
        e = tuple(draw(st.lists(st.integers(0, max_deg), min_size=nvars, max_size=nvars)))
        terms[e] = Fraction(draw(st.integers(-3, 3)), draw(st.integers(1, 2)))
    return SparsePoly(nvars, terms)


def class_member(p: SparsePoly, m: int) -> SparsePoly:
    """Project onto the antisymmetric-symmetric class with first block 1..m."""
    N = p.nvars
    return sym(asym(p, range(1, m + 1)), range(m + 1, N + 1))


def test_xi_on_constants():
    for N in range(1, 5):
        one = SparsePoly.one(N)
        for j in range(1, N + 1):
            assert xi(j, one) == one.scale(-(j - 1))


def test_xi_on_degree_one_at_two_variables():
    # E_(1,0) = x1 + x2/(alpha+1) and E_(0,1) = x2, solved by hand
    e10 = x(2, 1) + x(2, 2).scale(1 / (ALPHA + 1))
    assert xi(1, e10) == e10.scale(ALPHA)
    assert xi(2, e10) == e10.scale(-1)
    assert xi(1, x(2, 2)) == -x(2, 2)
    assert xi(2, x(2, 2)) == x(2, 2).scale(ALPHA)
    assert nonsym_jack((1, 0)).poly == e10
    assert nonsym_jack((0, 1)).poly == x(2, 2)


@settings(max_examples=15, deadline=None)
@given(st.data())
def test_xi_commute(data):
    N = data.draw(st.integers(2, 3))
    p = data.draw(polys(N, max_deg=2, max_terms=3))
    a0 = Fraction(data.draw(st.integers(1, 9)), data.draw(st.integers(1, 4)))
    i, j = data.draw(st.integers(1, N)), data.draw(st.integers(1, N))
    assert xi(i, xi(j, p, a0), a0) == xi(j, xi(i, p, a0), a0)


def test_xi_is_triangular_on_monomials():
    for eta in [(2, 0, 1), (0, 1, 2), (1, 1, 0), (3, 0, 0), (0, 2, 1, 1)]:
        N = len(eta)
        p = SparsePoly.monomial(eta)
        for j in range(1, N + 1):
            image = xi(j, p)
            assert image.coeff(eta) == xi_eigenvalue(eta, j)
            for e in image.terms:
                if e != tuple(eta):
                    assert dominance_compositions(e, eta) is Order.LESS


def test_sekiguchi_on_constants():
    for N in range(1, 4):
        one = SparsePoly.one(N)
        u0 = Fraction(5, 2)
        expected = Fraction(1)
        for i in range(1, N + 1):
            expected *= u0 - i + 1
        assert sekiguchi_star(u0, one, ALPHA) == one.scale(expected)


def test_sekiguchi_eigenvalues_on_nonsymmetric_jacks():
    a0 = Fraction(7, 3)
    for eta in [(2, 0, 1), (1, 2, 0), (0, 0, 2)]:
        N = len(eta)
        E = nonsym_jack(eta).poly.eval_alpha(a0)
        star = sort_to_partition(eta)
        for u0 in [Fraction(t, 2) for t in range(N + 1)]:
            assert sekiguchi_star(u0, E, a0) == E.scale(seki_eigenvalue(star, u0, a0))
            for m in range(N + 1):
                circ = phi_m(eta, m).circ
                assert sekiguchi_circ(u0, u0, E, m, a0) == E.scale(seki_eigenvalue(circ, u0, a0))


def test_conserved_operators_on_constants():
    for N in range(1, 5):
        one = SparsePoly.one(N)
        assert op_H(one) == one.scale(sum((i - 1) ** 2 for i in range(1, N + 1)))
        assert op_I(one, N) == one.scale(-sum(range(N)))
        assert op_D(one).is_zero()


@settings(max_examples=15, deadline=None)
@given(st.data())
def test_two_constructions_of_sutherland_agree(data):
    N = data.draw(st.integers(1, 3))
    p = data.draw(polys(N, max_deg=3))
    a0 = Fraction(data.draw(st.integers(1, 7)), data.draw(st.integers(1, 3)))
    assert op_D(p, a0) == op_D_from_H(p, a0)


def test_sutherland_is_triangular_on_monomial_symmetric():
    for lam in partitions(5, max_len=3):
        sp = superpartition((), tuple(lam) + (0,) * (3 - len(lam)))
        image = op_D(monomial(sp, "AS"))
        for e in image.terms:
            assert dominance_compositions(sort_to_partition(e), sp.sym) in (Order.LESS, Order.EQUAL)


def test_L_plus():
    assert L_plus(x(2, 1) + x(2, 2)) == SparsePoly.one(2).scale(2)
    assert L_plus(SparsePoly.one(3)).is_zero()
    for N in range(2, 5):
        assert L_plus(vandermonde(range(1, N + 1), N) ** 2).is_zero()


@settings(max_examples=20, deadline=None)
@given(st.data())
def test_q_operators_anticommute_to_L_plus(data):
    N = data.draw(st.integers(2, 4))
    m = data.draw(st.integers(0, N))
    p = class_member(data.draw(polys(N, max_deg=3)), m)
    lhs = q_circle(q_box(p, m), m + 1, check=False) if m < N else SparsePoly.zero(N)
    lhs = lhs + (q_box(q_circle(p, m), m - 1, check=False) if m > 0 else SparsePoly.zero(N))
    assert lhs == L_plus(p)


@settings(max_examples=20, deadline=None)
@given(st.data())
def test_q_operators_land_in_neighbouring_classes(data):
    N = data.draw(st.integers(2, 4))
    m = data.draw(st.integers(1, N))
    p = class_member(data.draw(polys(N, max_deg=3)), m)
    assert in_symmetry_class(q_circle(p, m), "AS", m - 1)
    if m < N:
        assert in_symmetry_class(q_box(p, m), "AS", m + 1)


def test_q_box_vanishes_on_fully_antisymmetric():
    p = vandermonde(range(1, 4), 3)
    assert q_box(p, 3).is_zero()
    assert q_circle(SparsePoly.one(3), 0).is_zero()
