import pytest
from hypothesis import given, settings, strategies as st

from schubgl.exactpoly import (LaurentWindow, Poly, WindowError, det, geometric_inverse, poly_arith,
                               series_in_z, window_mul)
from schubgl.symfunc import generic_polynomial, hseq, parse_element

e1, e2 = Poly.gen(2, 1), Poly.gen(2, 2)


def polys(arity=2):
    terms = st.dictionaries(st.tuples(*[st.integers(0, 3)] * arity), st.integers(-10**20, 10**20), max_size=4)
    return terms.map(lambda t: Poly(arity, t))


def test_arith_examples():
    assert poly_arith(e1, e1, "mul") == Poly(2, {(2, 0): 1})
    assert poly_arith(e1 * e1 - e2, e1 * e1, "sub") == -e2
    h1, h2 = hseq(2)[1], hseq(2)[2]
    assert h1 * h2 == e1 ** 3 - e1 * e2


def test_arity_mismatch():
    with pytest.raises(ValueError):
        poly_arith(Poly.gen(1, 1), e1, "add")


def test_zero_terms_are_dropped():
    assert Poly(2, {(1, 0): 0}).terms == {}
    assert (e1 - e1).terms == {}
    assert Poly.zero(2) == 0


@settings(max_examples=60)
@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a and a + b == b + a


def test_big_integers_are_exact():
    big = Poly.const(2, 10**40) * e1
    assert (big * big).terms == {(2, 0): 10**80}


@given(polys(), polys())
def test_grading_of_products(a, b):
    for d1 in a.degrees():
        for d2 in b.degrees():
            prod = a.homogeneous_part(d1) * b.homogeneous_part(d2)
            assert prod.degrees() <= {d1 + d2}


def test_weighted_degree():
    assert (e1 ** 2 * e2).degrees() == {4}
    assert not (e1 + e2).is_homogeneous()


def test_text_and_latex():
    p = e1 ** 2 * e2 - e2 ** 2
    assert p.to_text() == "e1^2*e2 - e2^2"
    assert p.to_latex() == "e_{1}^{2}e_{2} - e_{2}^{2}"
    assert Poly.zero(2).to_text() == "0"


@given(polys())
def test_json_round_trip(p):
    assert Poly.from_json(p.to_json(), 2) == p


def test_det_matches_expansion():
    m = [[e1, e2, Poly.one(2)], [e2, e1, e1], [Poly.one(2), e1, e2]]
    by_hand = (e1 * (e1 * e2 - e1 * e1) - e2 * (e2 * e2 - e1) + (e2 * e1 - e1))
    assert det(m, Poly.one(2)) == by_hand
    assert det([], Poly.one(2)) == 1


def test_geometric_inverse_examples():
    r1 = geometric_inverse(generic_polynomial(1), 3)
    x = Poly.gen(1, 1)
    assert [r1.coeff(k, 0) for k in range(4)] == [1, x, x ** 2, x ** 3]
    r2 = geometric_inverse(generic_polynomial(2), 4)
    assert r2.coeff(2, 0) == e1 ** 2 - e2
    H = hseq(2)
    assert H[1] ** 2 - H[2] == e2


@pytest.mark.parametrize("r", [1, 2, 3, 4])
@pytest.mark.parametrize("order", [0, 3, 7])
def test_geometric_inverse_round_trip(r, order):
    E = generic_polynomial(r)
    prod = window_mul(E, geometric_inverse(E, order))
    assert prod.window[1] == order
    assert prod.agrees_with(LaurentWindow.constant(Poly.one(r), Poly.zero(r)))


def test_geometric_inverse_rejects_non_units():
    with pytest.raises(ValueError):
        geometric_inverse(series_in_z([2, 1], 0, exact=True), 3)
    with pytest.raises(WindowError):
        geometric_inverse(series_in_z([1, 1], 0), 3)


def test_window_mul_examples():
    a = LaurentWindow({(0, 0): 1, (1, 0): 1}, 0, (0, 2, None, 0))
    b = LaurentWindow({(0, 0): 1, (1, 0): -1}, 0, (0, 2, None, 0))
    prod = window_mul(a, b)
    assert prod.entries == {(0, 0): 1, (2, 0): -1} and prod.window[:2] == (0, 2)

    A = LaurentWindow({(0, 0): 5, (2, -1): 7}, 0)
    shifted = window_mul(LaurentWindow.monomial(1, 2, -2, 0), A)
    assert shifted.entries == A.shift(2, -2).entries

    g = LaurentWindow.geometric(3)
    one = window_mul(g, LaurentWindow.constant(1, 0))
    assert one.entries == g.entries and one.window == (0, 3, -3, 0)


def test_window_errors():
    with pytest.raises(WindowError):
        LaurentWindow({}, 0, (0, -1, None, 0))
    with pytest.raises(ValueError):
        LaurentWindow({(-1, 0): 1}, 0, (0, 3, None, 0))
    u = series_in_z([1, 2, 3], 0)
    with pytest.raises(WindowError):
        u.coeff(5, 0)
    assert u.coeff(-1, 0) == 0 and u.coeff(1, 1) == 0


@settings(max_examples=40)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6),
       st.lists(st.integers(-5, 5), min_size=1, max_size=6),
       st.integers(0, 5), st.integers(0, 5))
def test_window_soundness(a, b, lo, hi):
    """Recomputing at a higher order and restricting agrees on the smaller window."""
    lo, hi = min(lo, hi), max(lo, hi)
    full_a, full_b = series_in_z(a, 0, exact=True), series_in_z(b, 0, exact=True)
    small = window_mul(full_a.restrict(z_max=lo), full_b.restrict(z_max=lo))
    big = window_mul(full_a.restrict(z_max=hi), full_b.restrict(z_max=hi))
    assert small.window[1] == lo
    assert big.restrict(z_max=lo) == small
    exact = window_mul(full_a, full_b)
    assert exact.restrict(z_max=lo) == small


def test_two_variable_window_soundness():
    g = LaurentWindow.geometric
    assert window_mul(g(6), g(6)).restrict(z_max=3, w_min=-3) == window_mul(g(3), g(3))


def test_laurent_json_round_trip():
    u = LaurentWindow({(0, -1): e1, (2, -3): e2 - e1}, Poly.zero(2), (0, 4, -5, 0))
    back = LaurentWindow.from_json(u.to_json(), lambda v: Poly.from_json(v, 2), Poly.zero(2))
    assert back == u and back.window == u.window
    assert "w^{-1}" in u.to_latex()


def test_parse_uses_h_rewrite():
    assert parse_element("h2", 2) == e1 ** 2 - e2
