"""Named special polynomials and series transforms.

* ``e_poly(l)``  — the Moebius-averaged power polynomial
  ``(1/l) * sum_{p | l} mu(p) x^(l/p)``; its value at 1 vanishes for l >= 2.
* ``f_poly(l)``  — its complexity-variable companion
  ``sum_{t | l} mu(t) u^(l - l/t)``, always 1 at u = 0.
* ``s_poly(j)``  — the Faulhaber power-sum polynomial with
  ``S_j(n) = 1^j + ... + n^j``.
* ``gamma_series`` — the formal series ``exp(sum_j S_j(x) u^j / j)``; at
  integer arguments it collapses to rational closed forms, which the test
  suite uses as oracles.
* ``plethystic_log`` / ``plethystic_exp`` — mutually inverse transforms
  between a product generating function and its "connected" exponents.
"""

from __future__ import annotations

from .rationals import QQ, binomial, bernoulli, divisors, mobius
from .series import SeriesError, TruncatedSeries

__all__ = [
    "UniPolynomial",
    "e_poly",
    "f_poly",
    "s_poly",
    "log_gamma_series",
    "gamma_series",
    "plethystic_log",
    "plethystic_exp",
]


class UniPolynomial:
    """Polynomial in one designated variable with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [QQ(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def __eq__(self, other):
        return isinstance(other, UniPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        """Evaluate at a rational (Horner)."""
        acc = QQ(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def at_series(self, x: TruncatedSeries, powers: list | None = None) -> TruncatedSeries:
        """Evaluate at a series argument.

        ``powers`` may carry a growable cache ``[1, x, x^2, ...]`` shared
        between evaluations at the same argument.
        """
        one = TruncatedSeries.one(x.vars, x.spec)
        if powers is None:
            powers = [one]
        while len(powers) <= self.degree:
            powers.append(powers[-1] * x)
        out = TruncatedSeries.zero(x.vars, x.spec)
        for k, c in enumerate(self.coeffs):
            if c != 0:
                out = out + powers[k].scaled(c)
        return out

    def __repr__(self):
        return f"UniPolynomial({list(self.coeffs)})"


_e_cache: dict[int, UniPolynomial] = {}
_f_cache: dict[int, UniPolynomial] = {}
_s_cache: dict[int, UniPolynomial] = {}


def e_poly(l: int) -> UniPolynomial:
    """E_l(x) = (1/l) sum_{p | l} mu(p) x^(l/p)."""
    if l < 1:
        raise ValueError(f"e_poly requires l >= 1, got {l}")
    got = _e_cache.get(l)
    if got is None:
        cs = [QQ(0)] * (l + 1)
        for p in divisors(l):
            mp = mobius(p)
            if mp:
                cs[l // p] += QQ(mp, l)
        got = UniPolynomial(cs)
        _e_cache[l] = got
    return got


def f_poly(l: int) -> UniPolynomial:
    """F_l(u) = l u^l E_l(1/u) = sum_{t | l} mu(t) u^(l - l/t)."""
    if l < 1:
        raise ValueError(f"f_poly requires l >= 1, got {l}")
    got = _f_cache.get(l)
    if got is None:
        cs = [QQ(0)] * l
        for t in divisors(l):
            mt = mobius(t)
            if mt:
                cs[l - l // t] += mt
        got = UniPolynomial(cs)
        _f_cache[l] = got
    return got


def s_poly(j: int) -> UniPolynomial:
    """S_j(x) = (1/(j+1)) sum_{p=0}^{j} (-1)^p C(j+1, p) B_p x^(j+1-p).

    Faulhaber's power-sum polynomial: S_j(n) = 1^j + 2^j + ... + n^j.
    """
    if j < 1:
        raise ValueError(f"s_poly requires j >= 1, got {j}")
    got = _s_cache.get(j)
    if got is None:
        cs = [QQ(0)] * (j + 2)
        for p in range(j + 1):
            bp = bernoulli(p)
            if bp != 0:
                cs[j + 1 - p] += QQ((-1) ** p * binomial(j + 1, p), j + 1) * bp
        got = UniPolynomial(cs)
        _s_cache[j] = got
    return got


def log_gamma_series(x_arg: TruncatedSeries, u_arg: TruncatedSeries) -> TruncatedSeries:
    """sum_{j >= 1} S_j(x_arg) u_arg^j / j, truncated.

    ``x_arg`` must be u-free and polynomial; ``u_arg`` must vanish at
    u = 0, so the sum terminates once u_arg^j leaves the spec.
    """
    if x_arg.vars != u_arg.vars or x_arg.spec != u_arg.spec:
        raise SeriesError("x_arg and u_arg must share one variable set and spec")
    if u_arg.vars.has_u:
        iu = u_arg.vars.index("u")
        if any(m[iu] == 0 for m in u_arg.coeffs):
            raise SeriesError("u-argument must have u-order >= 1")
        if any(m[iu] != 0 for m in x_arg.coeffs):
            raise SeriesError("x-argument must not depend on u")
    out = TruncatedSeries.zero(x_arg.vars, x_arg.spec)
    x_pows: list = [TruncatedSeries.one(x_arg.vars, x_arg.spec)]
    u_pow = x_pows[0]
    j = 0
    while True:
        j += 1
        u_pow = u_pow * u_arg
        if u_pow.is_zero():
            break
        sj = s_poly(j).at_series(x_arg, x_pows)
        if not sj.is_zero():
            out = out + (sj * u_pow).scaled(QQ(1, j))
    return out


def gamma_series(x_arg: TruncatedSeries, u_arg: TruncatedSeries) -> TruncatedSeries:
    """exp(sum_{j >= 1} S_j(x_arg) u_arg^j / j).

    At a nonnegative integer n this is 1/((1-u)(1-2u)...(1-nu)); at a
    negative integer -n it is (1+u)(1+2u)...(1+(n-1)u).  Those closed
    forms are checked against this definition in the test suite.
    """
    return log_gamma_series(x_arg, u_arg).exp()


def _raise_exponents(series: TruncatedSeries, l: int) -> TruncatedSeries:
    """x_i <- x_i^l, u <- u^l (all variables raised); out-of-spec monomials drop."""
    return series.map_monomials(lambda m, c: (tuple(e * l for e in m), c))


def plethystic_log(series: TruncatedSeries, lmax: int | None = None) -> TruncatedSeries:
    """sum_l mu(l)/l * log(series with x_i <- x_i^l, u <- u^l).

    Extracts the exponents chi from a product of the form
    prod (1 - x^s u^t)^(-chi); inverse of :func:`plethystic_exp`.

    The summation bound max(T, S) is exact, not heuristic: any l above
    both bounds sends every non-constant monomial outside the spec.
    """
    if series.constant_term() != 1:
        raise SeriesError("plethystic_log requires constant term 1")
    vars_, spec = series.vars, series.spec
    if vars_.has_z or vars_.has_hbar or vars_.pcount:
        raise SeriesError("plethystic_log is defined on x/u series only")
    if lmax is None:
        bounds = [b for b in (spec.u_max, spec.x_total_max) if b is not None]
        if not bounds:
            raise SeriesError("plethystic_log needs a truncated direction")
        lmax = max(bounds)
    out = TruncatedSeries.zero(vars_, spec)
    for l in range(1, lmax + 1):
        ml = mobius(l)
        if ml == 0:
            continue
        out = out + _raise_exponents(series, l).log().scaled(QQ(ml, l))
    return out


def plethystic_exp(series: TruncatedSeries) -> TruncatedSeries:
    """prod over monomials x^s u^t of series of (1 - x^s u^t)^(-chi).

    Requires integer coefficients and zero constant term; every monomial
    must have positive degree in a truncated direction so each factor
    expands finitely.
    """
    vars_, spec = series.vars, series.spec
    if series.constant_term() != 0:
        raise SeriesError("plethystic_exp requires zero constant term")
    out = TruncatedSeries.one(vars_, spec)
    for mono in series.sorted_monomials():
        c = series.coeffs[mono]
        if c.denominator != 1:
            raise SeriesError(f"plethystic_exp requires integer coefficients, got {c}")
        chi = int(c)
        factor = _geometric_power(vars_, spec, mono, chi)
        out = out * factor
    return out


def _geometric_power(vars_, spec, mono, chi: int) -> TruncatedSeries:
    """(1 - m)^(-chi) for a single monomial m, truncated."""
    base = TruncatedSeries(vars_, spec, {mono: 1})
    if base.is_zero() or not _positive_trunc_weight(vars_, spec, mono):
        raise SeriesError(f"monomial {mono} cannot be plethystically exponentiated")
    coeffs = {(0,) * vars_.nvars: QQ(1)}
    k = 0
    while True:
        k += 1
        m_k = tuple(e * k for e in mono)
        if chi > 0:
            c = binomial(chi - 1 + k, k)
        else:
            if k > -chi:
                break
            c = (-1) ** k * binomial(-chi, k)
        probe = TruncatedSeries(vars_, spec, {m_k: c})
        if probe.is_zero():
            break
        coeffs[m_k] = QQ(c)
    return TruncatedSeries(vars_, spec, coeffs)


def _positive_trunc_weight(vars_, spec, mono) -> bool:
    r = vars_.hodge_count
    w = 0
    if spec.x_total_max is not None:
        w += sum(mono[:r])
    if spec.u_max is not None and vars_.has_u:
        w += mono[vars_.index("u")]
    if spec.p_weight_max is not None:
        base = vars_.p_start()
        w += sum((l + 1) * mono[base + l] for l in range(vars_.pcount))
    return w >= 1
