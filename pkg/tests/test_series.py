from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from linkchi.rationals import QQ
from linkchi.series import (
    OutOfBoundsError,
    SeriesError,
    TruncatedSeries,
    TruncationSpec,
    VariableSet,
)

XU = VariableSet(hodge_count=2, has_u=True)
SPEC = TruncationSpec(u_max=6, x_total_max=7)


def s(exponents, coeff=1, vars_=XU, spec=SPEC):
    return TruncatedSeries.term(vars_, spec, exponents, coeff)


def one(vars_=XU, spec=SPEC):
    return TruncatedSeries.one(vars_, spec)


def test_add_basic():
    a = one() + s({"u": 1})
    b = one() - s({"u": 1})
    assert (a + b) == one().scaled(2)
    zero = TruncatedSeries.zero(XU, SPEC)
    assert a + zero == a
    assert s({"x1": 1, "u": 1}) + s({"x2": 1, "u": 1}) == TruncatedSeries(
        XU, SPEC, {(1, 0, 1): 1, (0, 1, 1): 1}
    )


def test_add_rejects_mismatched_vars():
    other = VariableSet(hodge_count=1, has_u=True)
    with pytest.raises(SeriesError):
        one() + TruncatedSeries.one(other, SPEC)


def test_mul_geometric_inverse():
    geo = TruncatedSeries(XU, SPEC, {(0, 0, t): 1 for t in range(7)})
    assert (one() - s({"u": 1})) * geo == one()


def test_mul_identity_and_square():
    a = s({"x1": 2}) + s({"u": 3}, QQ(1, 2))
    assert a * one() == a
    sq = (s({"x1": 1}) + s({"x2": 1})) ** 2
    expected = (
        s({"x1": 2}) + s({"x1": 1, "x2": 1}, 2) + s({"x2": 2})
    )
    assert sq == expected


def test_mul_truncates_to_meet_of_specs():
    tight = TruncationSpec(u_max=2, x_total_max=7)
    a = TruncatedSeries.term(XU, tight, {"u": 1})
    b = s({"u": 2})
    assert (a * b).is_zero()
    assert (a * b).spec.u_max == 2


def test_exp_of_zero_is_one():
    assert TruncatedSeries.zero(XU, SPEC).exp() == one()


def test_exp_of_u():
    spec3 = TruncationSpec(u_max=3, x_total_max=4)
    e = TruncatedSeries.term(XU, spec3, {"u": 1}).exp()
    assert e.coefficient({}) == 1
    assert e.coefficient({"u": 1}) == 1
    assert e.coefficient({"u": 2}) == QQ(1, 2)
    assert e.coefficient({"u": 3}) == QQ(1, 6)


def test_exp_rejects_constant_term():
    with pytest.raises(SeriesError):
        one().exp()


def test_exp_rejects_non_nilpotent():
    # z^(-1) + z can hold the window forever: (z * z^(-1))^k never leaves
    zvars = VariableSet(has_u=True, has_z=True)
    spec = TruncationSpec(u_max=3, z_window=(-2, 2))
    mixed = TruncatedSeries.term(zvars, spec, {"z": 1}) + TruncatedSeries.term(
        zvars, spec, {"z": -1}
    )
    with pytest.raises(SeriesError):
        mixed.exp()
    # under a window with nonnegative exponents, powers do leave the spec
    pure_z = TruncatedSeries.term(zvars, spec, {"z": 1})
    assert pure_z.exp().coefficient({"z": 2}) == QQ(1, 2)


def test_log_of_one_and_geometric():
    assert one().log().is_zero()
    spec4 = TruncationSpec(u_max=4, x_total_max=4)
    lg = (
        TruncatedSeries.one(XU, spec4) - TruncatedSeries.term(XU, spec4, {"u": 1})
    ).log()
    for t, c in [(1, QQ(-1)), (2, QQ(-1, 2)), (3, QQ(-1, 3)), (4, QQ(-1, 4))]:
        assert lg.coefficient({"u": t}) == c


def test_log_exp_roundtrip():
    a = s({"u": 1}) + s({"x1": 1, "u": 2}, QQ(3, 5))
    assert a.exp().log() == a
    g = one() + s({"u": 1}) + s({"x2": 2}, QQ(-2, 7))
    assert g.log().exp() == g


def test_log_of_product_of_inverses():
    geo = (one() - s({"u": 1})).inverse()
    assert (geo * (one() - s({"u": 1}))).log().is_zero()


def test_pow_series():
    spec3 = TruncationSpec(u_max=3, x_total_max=5)
    base = TruncatedSeries.one(XU, spec3) - TruncatedSeries.term(XU, spec3, {"u": 1})
    assert base.pow_series(TruncatedSeries.zero(XU, spec3)) == TruncatedSeries.one(
        XU, spec3
    )
    inv2 = base.pow_series(TruncatedSeries.constant(XU, spec3, -2))
    assert [inv2.coefficient({"u": t}) for t in range(4)] == [1, 2, 3, 4]
    # (1-u)^x = 1 - x u + x(x-1) u^2/2 + ...   (expand exp(x log(1-u)) by hand)
    spec2 = TruncationSpec(u_max=2, x_total_max=5)
    base2 = TruncatedSeries.one(XU, spec2) - TruncatedSeries.term(XU, spec2, {"u": 1})
    powx = base2.pow_series(TruncatedSeries.term(XU, spec2, {"x1": 1}))
    assert powx.coefficient({}) == 1
    assert powx.coefficient({"x1": 1, "u": 1}) == -1
    assert powx.coefficient({"x1": 2, "u": 2}) == QQ(1, 2)
    assert powx.coefficient({"x1": 1, "u": 2}) == QQ(-1, 2)


def test_substitute_monomials():
    a = s({"x1": 1, "u": 1})
    out = a.substitute({"x1": s({"x1": 2}), "u": s({"u": 2})})
    assert out == s({"x1": 2, "u": 2})


def test_substitute_identity():
    a = s({"x1": 2, "u": 1}, QQ(5, 3)) + s({"x2": 1})
    assert a.substitute({"x1": s({"x1": 1})}) == a


def test_substitute_p_to_zero_keeps_p_free_part():
    pv = VariableSet(has_u=True, pcount=2)
    spec = TruncationSpec(u_max=3, p_weight_max=4)
    f = TruncatedSeries.term(pv, spec, {"p1": 2}) + TruncatedSeries.term(
        pv, spec, {"u": 1}, 7
    )
    out = f.substitute(
        {
            "p1": TruncatedSeries.zero(pv, spec),
            "p2": TruncatedSeries.zero(pv, spec),
        }
    )
    assert out == TruncatedSeries.term(pv, spec, {"u": 1}, 7)


def test_substitute_geometric_weight_bound():
    pv = VariableSet(hodge_count=1, has_u=True, has_z=True, pcount=1)
    spec = TruncationSpec(u_max=3, x_total_max=3, z_window=(0, 3), p_weight_max=3)
    geo = TruncatedSeries(
        pv, spec, {(0, 0, 0, k): 1 for k in range(4)}
    )  # 1/(1-p1) to weight 3
    zux = TruncatedSeries.term(pv, spec, {"z": 1, "u": 1, "x1": 1})
    out = geo.substitute({"p1": zux})
    expected = sum(
        (TruncatedSeries.term(pv, spec, {"z": k, "u": k, "x1": k}) for k in range(1, 4)),
        TruncatedSeries.one(pv, spec),
    )
    assert out == expected


def test_substitute_u_by_constant_rejected():
    with pytest.raises(SeriesError):
        s({"u": 1}).substitute({"u": one()})


def test_coefficient_out_of_bounds_is_error():
    a = one() + s({"u": 1}, 3)
    assert a.coefficient({"u": 1}) == 3
    assert a.coefficient({"u": 6}) == 0
    with pytest.raises(OutOfBoundsError):
        a.coefficient({"u": 7})
    with pytest.raises(OutOfBoundsError):
        a.coefficient({"x1": 5, "x2": 3})


def test_grade_extract():
    hv = VariableSet(has_u=True, has_hbar=True)
    spec = TruncationSpec(u_max=4, hbar_window=(-1, 3))
    a = TruncatedSeries.term(hv, spec, {"u": 1}) + TruncatedSeries.term(
        hv, spec, {"u": 2, "hbar": 1}, 5
    )
    assert a.grade_extract("hbar", 0) == TruncatedSeries.term(hv, spec, {"u": 1})
    assert a.grade_extract("hbar", 1) == TruncatedSeries.term(hv, spec, {"u": 2}, 5)
    assert a.grade_extract("hbar", -1).is_zero()
    geo = (
        TruncatedSeries.one(hv, spec) - TruncatedSeries.term(hv, spec, {"u": 1})
    ).inverse()
    assert geo.grade_extract("u", 3) == TruncatedSeries.one(hv, spec)


def test_to_text_graded_lex():
    a = s({"u": 2}, QQ(-1, 2)) + s({"x1": 1}) + one().scaled(3)
    assert a.to_text() == "3 + x1 + -1/2*u^2"
    assert TruncatedSeries.zero(XU, SPEC).to_text() == "0"


def test_laurent_window_storage():
    hv = VariableSet(has_u=True, has_hbar=True)
    spec = TruncationSpec(u_max=2, hbar_window=(-2, 2))
    a = TruncatedSeries.term(hv, spec, {"hbar": -2, "u": 1}, QQ(1, 3))
    assert a.coefficient({"hbar": -2, "u": 1}) == QQ(1, 3)
    assert TruncatedSeries.term(hv, spec, {"hbar": -3}).is_zero()


# ---------------------------------------------------------------- properties

characters = st.integers(-4, 4)


def small_series(vars_, spec, max_terms=4):
    monos = st.tuples(
        st.integers(0, 2), st.integers(0, 2), st.integers(0, 3)
    )
    return st.dictionaries(monos, characters, max_size=max_terms).map(
        lambda d: TruncatedSeries(vars_, spec, d)
    )


SPEC8 = TruncationSpec(u_max=5, x_total_max=4)


@settings(max_examples=40, deadline=None)
@given(small_series(XU, SPEC8), small_series(XU, SPEC8), small_series(XU, SPEC8))
def test_mul_commutative_associative(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@settings(max_examples=30, deadline=None)
@given(small_series(XU, SPEC8))
def test_exp_log_inverse_pair(a):
    a = a - TruncatedSeries.constant(XU, SPEC8, a.constant_term())
    assert a.exp().log() == a


@settings(max_examples=30, deadline=None)
@given(small_series(XU, SPEC8), small_series(XU, SPEC8))
def test_log_multiplicative(a, b):
    a = a - TruncatedSeries.constant(XU, SPEC8, a.constant_term()) + TruncatedSeries.one(XU, SPEC8)
    b = b - TruncatedSeries.constant(XU, SPEC8, b.constant_term()) + TruncatedSeries.one(XU, SPEC8)
    assert (a * b).log() == a.log() + b.log()
