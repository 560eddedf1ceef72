import pytest
from hypothesis import given, settings, strategies as st

from nsmac.appendix import appendix_table
from nsmac.exactalg import ONE, Q, T, XPolynomial, qt_invert_params
from nsmac.hecke import E_recurrence
from nsmac.macdonald import (
    E_combinatorial,
    E_integral,
    E_inverted,
    check_complement_identity,
    complement_composition,
    hook,
    hook_product,
    key_polynomial,
)
from nsmac.render import parse_xpolynomial
from nsmac.shapes import bruhat_lower_set, compositions
from strategies import small_compositions


def E(text, n=3):
    return parse_xpolynomial(text, n)


def test_trivial_cases():
    assert E_combinatorial((0, 0, 0)) == XPolynomial.constant(3)
    assert E_combinatorial((1, 0, 0)) == E("x1")
    assert E_integral((0, 0, 0)) == XPolynomial.constant(3)


@pytest.mark.parametrize("mu", sorted(appendix_table()))
def test_published_table(mu):
    assert E_combinatorial(mu) == appendix_table()[mu]


def test_five_term_entry():
    e = E_combinatorial((0, 2, 0))
    assert len(e) == 5
    assert e.coefficient((1, 1, 0)) == (ONE - T) * (1 + Q - Q * T - Q ** 2 * T ** 2) / (
        (ONE - Q * T) * (ONE - Q ** 2 * T ** 2)
    )


def test_integral_examples():
    assert E_integral((0, 1, 0)) == E("(1 - q*t^2)*x2 + (1 - t)*x1")
    assert E_integral((1, 0, 0)) == E("(1 - q*t^3)*x1")


def test_inverted_examples():
    assert E_inverted((0, 0, 0)) == XPolynomial.constant(3)
    assert E_inverted((1, 0, 0)) == E("x1")
    assert E_inverted((0, 1, 0)) == qt_invert_params(appendix_table()[(0, 1, 0)])
    assert E_inverted((0, 1, 0)) == E("x2 + q*t*(1 - t)/(1 - q*t^2)*x1")


def test_key_examples():
    assert key_polynomial((1, 0, 0)) == E("x1")
    assert key_polynomial((0, 1, 0)) == E("x2")
    orbit = key_polynomial((1, 1, 0)) + key_polynomial((1, 0, 1)) + key_polynomial((0, 1, 1))
    assert orbit == E("x1*x2 + x1*x3 + x2*x3")


def test_complement_examples():
    assert complement_composition((0, 1, 0), 1) == (1, 0, 1)
    assert check_complement_identity((0, 0, 0), 1)
    assert check_complement_identity((0, 1, 0), 1)
    assert check_complement_identity((1, 0, 0), 2, engine=E_recurrence)
    assert check_complement_identity((1, 0, 0), 2)
    with pytest.raises(ValueError):
        complement_composition((2, 0), 1)


def test_hook_product():
    assert hook_product((0, 1, 0)) == (ONE - Q * T ** 2).num
    assert hook(0, 1) == (ONE - T).num


def test_parallel_matches_serial():
    mu = (0, 2, 1)
    assert E_combinatorial(mu, jobs=2) == E_combinatorial(mu)


@pytest.mark.parametrize("n, d", [(1, 3), (2, 3), (3, 3), (4, 2)])
def test_dual_engine(n, d):
    for k in range(d + 1):
        for mu in compositions(n, k):
            assert E_combinatorial(mu) == E_recurrence(mu)


@given(small_compositions(max_n=3, max_size=3))
def test_triangular(mu):
    e = E_combinatorial(mu)
    assert e.coefficient(mu) == ONE
    assert set(e.support()) <= bruhat_lower_set(mu)


@given(small_compositions(max_n=3, max_size=3))
def test_integral_has_polynomial_coefficients(mu):
    f = E_integral(mu)
    assert f.is_polynomial_coefficients()
    assert f == E_combinatorial(mu).scale(hook_product(mu))


@given(small_compositions(max_n=3, max_size=3))
def test_inverted_route(mu):
    assert E_inverted(mu) == qt_invert_params(E_combinatorial(mu))


@given(small_compositions(max_n=3, max_size=2), st.integers(0, 2))
@settings(max_examples=30)
def test_complement_identity(nu, extra):
    assert check_complement_identity(nu, max(nu) + extra)


@given(small_compositions(max_n=3, max_size=3))
def test_key_is_nonnegative_integer(mu):
    k = key_polynomial(mu)
    assert k.coefficient(mu) == ONE
    for _, c in k.items():
        assert c.den.is_one() and set(c.num.terms) == {(0, 0)} and c.num.terms[(0, 0)] > 0
