from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from linkchi.rationals import QQ
from linkchi.series import SeriesError, TruncatedSeries, TruncationSpec, VariableSet
from linkchi.special import (
    UniPolynomial,
    e_poly,
    f_poly,
    gamma_series,
    plethystic_exp,
    plethystic_log,
    s_poly,
)

UV = VariableSet(has_u=True)


def uspec(t):
    return TruncationSpec(u_max=t)


def u_term(spec, e=1, c=1):
    return TruncatedSeries.term(UV, spec, {"u": e}, c)


def const(spec, c):
    return TruncatedSeries.constant(UV, spec, c)


def test_e_poly_small():
    assert e_poly(1) == UniPolynomial([0, 1])
    # mu(1) = 1, mu(2) = -1:  (x^2 - x) / 2
    assert e_poly(2) == UniPolynomial([0, QQ(-1, 2), QQ(1, 2)])
    with pytest.raises(ValueError):
        e_poly(0)


def test_e_poly_at_one_vanishes():
    assert e_poly(1)(1) == 1
    for l in range(2, 51):
        assert e_poly(l)(1) == 0, l


def test_e_poly_at_minus_one():
    assert e_poly(1)(-1) == -1
    assert e_poly(2)(-1) == 1
    for l in range(3, 30):
        assert e_poly(l)(-1) == 0, l


def test_f_poly_small():
    assert f_poly(1) == UniPolynomial([1])
    assert f_poly(2) == UniPolynomial([1, -1])
    assert f_poly(6) == UniPolynomial([1, 0, 0, -1, -1, 1])
    with pytest.raises(ValueError):
        f_poly(0)


def test_f_poly_at_zero_is_one():
    for l in range(1, 51):
        assert f_poly(l)(0) == 1, l


def test_f_poly_is_laurent_rescaling_of_e_poly():
    # l * u^l * E_l(1/u) = F_l(u): match coefficients u^(l-k) <- x^k
    for l in range(1, 31):
        e = e_poly(l)
        f = f_poly(l)
        for k, c in enumerate(e.coeffs):
            want = f.coeffs[l - k] if l - k <= f.degree else QQ(0)
            assert l * c == want, (l, k)


def test_s_poly_small():
    assert s_poly(1) == UniPolynomial([0, QQ(1, 2), QQ(1, 2)])
    assert s_poly(2)(2) == 5  # 1^2 + 2^2
    with pytest.raises(ValueError):
        s_poly(0)


def test_s_poly_power_sums():
    for j in range(1, 7):
        for n in range(0, 21):
            assert s_poly(j)(n) == sum(i**j for i in range(1, n + 1)), (j, n)


def test_gamma_at_zero_and_minus_one():
    spec = uspec(8)
    u = u_term(spec)
    one = TruncatedSeries.one(UV, spec)
    assert gamma_series(TruncatedSeries.zero(UV, spec), u) == one
    assert gamma_series(const(spec, -1), u) == one


def gamma_positive_closed_form(n, spec):
    one = TruncatedSeries.one(UV, spec)
    out = one
    for k in range(1, n + 1):
        out = out * (one - u_term(spec, 1, k)).inverse()
    return out


def gamma_negative_closed_form(n, spec):
    one = TruncatedSeries.one(UV, spec)
    out = one
    for k in range(1, n):
        out = out * (one + u_term(spec, 1, k))
    return out


def test_gamma_closed_forms():
    spec = uspec(12)
    for n in range(1, 9):
        assert gamma_series(const(spec, n), u_term(spec)) == gamma_positive_closed_form(
            n, spec
        ), n
    for n in range(2, 9):
        assert gamma_series(const(spec, -n), u_term(spec)) == gamma_negative_closed_form(
            n, spec
        ), n


def test_gamma_functional_identity():
    # Gamma(n, u) * prod_{k=1}^{n} (1 - k u) = 1
    spec = uspec(10)
    one = TruncatedSeries.one(UV, spec)
    for n in range(0, 7):
        prod = one
        for k in range(1, n + 1):
            prod = prod * (one - u_term(spec, 1, k))
        assert gamma_series(const(spec, n), u_term(spec)) * prod == one, n


def test_gamma_rejects_constant_u_argument():
    spec = uspec(6)
    with pytest.raises(SeriesError):
        gamma_series(const(spec, 1), TruncatedSeries.one(UV, spec))


XUV = VariableSet(hodge_count=1, has_u=True)


def test_plethystic_log_examples():
    spec = TruncationSpec(u_max=5, x_total_max=6)
    one = TruncatedSeries.one(XUV, spec)
    assert plethystic_log(one).is_zero()

    x1u = TruncatedSeries.term(XUV, spec, {"x1": 1, "u": 1})
    f = (one - x1u).inverse()
    assert plethystic_log(f) == x1u

    u = TruncatedSeries.term(XUV, spec, {"u": 1})
    g = ((one - u).inverse()) * f
    assert plethystic_log(g) == u + x1u


def test_plethystic_exp_examples():
    spec = TruncationSpec(u_max=5, x_total_max=6)
    one = TruncatedSeries.one(XUV, spec)
    x1u = TruncatedSeries.term(XUV, spec, {"x1": 1, "u": 1})
    assert plethystic_exp(x1u) == (one - x1u).inverse()
    assert plethystic_exp(TruncatedSeries.zero(XUV, spec)) == one


def test_plethystic_exp_rejects_fractional():
    spec = TruncationSpec(u_max=4, x_total_max=4)
    with pytest.raises(SeriesError):
        plethystic_exp(TruncatedSeries.term(XUV, spec, {"u": 1}, QQ(1, 2)))


SPEC6 = TruncationSpec(u_max=6, x_total_max=6)
chi_values = st.integers(-3, 3)
monos = st.tuples(st.integers(0, 2), st.integers(1, 3))


@settings(max_examples=30, deadline=None)
@given(st.dictionaries(monos, chi_values, max_size=4))
def test_plethystic_inverse_pair(d):
    g = TruncatedSeries(XUV, SPEC6, {(x, u): c for (x, u), c in d.items()})
    assert plethystic_log(plethystic_exp(g)) == g


@settings(max_examples=30, deadline=None)
@given(st.dictionaries(monos, chi_values, max_size=4))
def test_plethystic_exp_of_log(d):
    g = TruncatedSeries(XUV, SPEC6, {(x, u): c for (x, u), c in d.items()})
    f = plethystic_exp(g)
    assert plethystic_exp(plethystic_log(f)) == f
