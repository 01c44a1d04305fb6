from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spectheta.polynomials import (
    Polynomial,
    cauchy_root_bound,
    divides_exactly,
    largest_real_root,
    poly_divmod_exact,
)
from spectheta.quadratic import QuadExt

coeff_lists = st.lists(st.integers(-9, 9), min_size=1, max_size=6)
points = st.fractions(min_value=-5, max_value=5, max_denominator=8)


def test_construction_normalizes():
    assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynomial([]).degree == -1
    assert Polynomial([0]).is_zero()
    # a doubled polynomial with all-even entries collapses to plain ints
    assert Polynomial([2, 4], doubled=True) == Polynomial([1, 2])
    assert Polynomial([1, 2], doubled=True).doubled
    with pytest.raises(TypeError):
        Polynomial([1.5])


def test_true_coeffs_halves_doubled():
    p = Polynomial([1, 3], doubled=True)
    assert p.true_coeffs() == (Fraction(1, 2), Fraction(3, 2))
    assert p(2.0) == pytest.approx(3.5)
    assert p.eval_fraction(Fraction(2)) == Fraction(7, 2)


@given(coeff_lists, coeff_lists, points)
def test_ring_laws_at_points(cs, ds, x):
    f, g = Polynomial(cs), Polynomial(ds)
    assert (f + g).eval_fraction(x) == f.eval_fraction(x) + g.eval_fraction(x)
    assert (f - g).eval_fraction(x) == f.eval_fraction(x) - g.eval_fraction(x)
    assert (f * g).eval_fraction(x) == f.eval_fraction(x) * g.eval_fraction(x)


@given(coeff_lists, points)
def test_scalar_multiplication(cs, x):
    f = Polynomial(cs)
    assert (f * 3).eval_fraction(x) == 3 * f.eval_fraction(x)
    assert (-f).eval_fraction(x) == -f.eval_fraction(x)


def test_doubled_product_needs_quarter_integers():
    ok = Polynomial([2, 4], doubled=True) * Polynomial([2, 8], doubled=True)
    assert ok == Polynomial([1, 2]) * Polynomial([1, 4])
    with pytest.raises(ValueError):
        Polynomial([1, 1], doubled=True) * Polynomial([1, 1], doubled=True)


def _eval_coeffs(cs: tuple[Fraction, ...], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


@given(coeff_lists, st.lists(st.integers(-9, 9), min_size=1, max_size=4))
def test_division_round_trip(cs, ds):
    f = Polynomial(cs)
    tail = Polynomial(ds)
    g = tail * Polynomial([0, 0, 1]) + Polynomial([1])  # nonzero by construction
    q, r = poly_divmod_exact(f, g)
    x = Fraction(3, 2)
    assert f.eval_fraction(x) == _eval_coeffs(q, x) * g.eval_fraction(x) + _eval_coeffs(r, x)
    assert len(r) - 1 < g.degree or all(c == 0 for c in r)


def test_divides_exactly_on_products():
    f = Polynomial([-2, 0, 1]) * Polynomial([1, 1, 0, 3])
    assert divides_exactly(Polynomial([-2, 0, 1]), f)
    assert not divides_exactly(Polynomial([1, 1]), f)
    assert divides_exactly(Polynomial([1, 1]), Polynomial([0]))


def test_eval_quad_agrees_with_exact_arithmetic():
    p = Polynomial([-2, 0, 1])  # x^2 - 2
    assert p.eval_quad(QuadExt(0, 1, 2)) == QuadExt(0)
    q = Polynomial([1, -4, 1], doubled=True)  # (x^2 - 4x + 1)/2
    assert q.eval_quad(QuadExt(2, 1, 3)) == QuadExt(0)


def test_largest_real_root_known_values():
    assert largest_real_root(Polynomial([-2, 0, 1])) == pytest.approx(2**0.5, abs=1e-12)
    assert largest_real_root(Polynomial([6, -5, 1])) == pytest.approx(3.0, abs=1e-12)
    # negative leading coefficient is normalized away
    assert largest_real_root(Polynomial([2, 0, -1])) == pytest.approx(2**0.5, abs=1e-12)


def test_largest_real_root_with_bracket():
    p = Polynomial([6, -5, 1])  # roots 2 and 3
    assert largest_real_root(p, lo=2.5, hi=4.0) == pytest.approx(3.0, abs=1e-12)
    with pytest.raises(ValueError):
        largest_real_root(p, lo=4.0, hi=2.5)
    with pytest.raises(ValueError):
        largest_real_root(p, lo=3.5, hi=4.0)  # no sign change inside


def test_largest_real_root_requires_a_real_root():
    with pytest.raises(ValueError):
        largest_real_root(Polynomial([1, 0, 1]))  # x^2 + 1
    with pytest.raises(ValueError):
        largest_real_root(Polynomial([5]))


@given(st.lists(st.integers(-9, 9), min_size=3, max_size=6))
def test_cauchy_bound_dominates_roots(cs):
    p = Polynomial(cs)
    if p.degree < 1:
        return
    bound = cauchy_root_bound(p)
    try:
        r = largest_real_root(p)
    except ValueError:
        return
    assert r <= bound + 1e-9


def test_repr_is_stable():
    assert "Polynomial" in repr(Polynomial([1, 2]))
