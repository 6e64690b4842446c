"""Generating functions of Euler characteristics for string-link spaces.

For a link configuration (r strands of source dimensions m_1..m_r inside
R^d) the homology generating function F^H collects the Euler
characteristics of the Hodge/complexity summands of the rational
homology, and F^pi does the same for the rational homotopy.  Both depend
only on the parities of the m_i and of d.  The two are related by a
plethystic logarithm, giving two independent evaluation routes; the
genus grading refines F^pi by hbar with exponent g = t - |s| + 1, and
genus-0/1 admit separate closed forms.  All of these meet in the
:mod:`linkchi.verify` cross-check suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rationals import QQ, mobius, totient
from .series import (
    SeriesError,
    TruncatedSeries,
    TruncationSpec,
    VariableSet,
)
from .special import e_poly, f_poly, log_gamma_series, plethystic_log, s_poly

__all__ = [
    "LinkConfig",
    "EulerTable",
    "f_homology",
    "f_homotopy_direct",
    "f_homotopy_via_pleth",
    "f_homotopy_graded",
    "genus0_closed",
    "genus1_closed",
    "genus0_dims",
    "genus1_dims",
    "euler_table",
]

ODD, EVEN = 1, 0


def _parity_of(value) -> int:
    if isinstance(value, int):
        return value % 2
    text = str(value).strip().lower()
    if text == "odd":
        return ODD
    if text == "even":
        return EVEN
    raise ValueError(f"expected an integer, 'odd' or 'even', got {value!r}")


@dataclass(frozen=True)
class LinkConfig:
    """Strand count r, source dimensions m_i, ambient dimension d.

    Euler-characteristic series depend only on the parities, so entries
    of ``m`` and ``d`` may be given as 'odd'/'even'; the z-graded
    dimension series need the actual integers and refuse parity-only
    configurations.
    """

    r: int
    m_parities: tuple[int, ...]
    d_parity: int
    m_values: tuple[int, ...] | None = None
    d_value: int | None = None

    @classmethod
    def create(cls, m, d) -> "LinkConfig":
        m = tuple(m) if not isinstance(m, (int, str)) else (m,)
        r = len(m)
        if r < 1:
            raise ValueError("need at least one strand")
        m_par = tuple(_parity_of(v) for v in m)
        d_par = _parity_of(d)
        m_vals = tuple(m) if all(isinstance(v, int) for v in m) else None
        if m_vals is not None and any(v < 1 for v in m_vals):
            raise ValueError("source dimensions must be >= 1")
        d_val = d if isinstance(d, int) else None
        if d_val is not None and d_val < 2:
            raise ValueError("ambient dimension must be >= 2")
        return cls(r, m_par, d_par, m_vals, d_val)

    @property
    def has_values(self) -> bool:
        return self.m_values is not None and self.d_value is not None

    def require_values(self) -> tuple[tuple[int, ...], int]:
        if not self.has_values:
            raise ValueError(
                "this operation needs integer source/ambient dimensions, "
                "not parity shorthand"
            )
        return self.m_values, self.d_value

    @property
    def in_validity_range(self) -> bool | None:
        """d > 2 max(m_i) + 1, the range where the homology formulas are
        derived; None when only parities are known.  Violation is a
        warning, never an error: the formal series exist regardless."""
        if not self.has_values:
            return None
        return self.d_value > 2 * max(self.m_values) + 1

    # sign helpers: eps_i = (-1)^(m_i - 1), sd = (-1)^d, sigma_d = (-1)^(d-1)
    def eps(self, i: int) -> int:
        return 1 if self.m_parities[i] == ODD else -1

    @property
    def sd(self) -> int:
        return -1 if self.d_parity == ODD else 1

    @property
    def sigma_d(self) -> int:
        return -self.sd

    def xu_vars(self) -> VariableSet:
        return VariableSet(hodge_count=self.r, has_u=True)


def _xu_spec(t_max: int, x_total_max: int | None, u_min: int = 0) -> TruncationSpec:
    s = (t_max + 1) if x_total_max is None else x_total_max
    return TruncationSpec(u_max=t_max, x_total_max=s, u_min=u_min)


def _e_sum_series(
    cfg: LinkConfig,
    vars_: VariableSet,
    spec: TruncationSpec,
    l: int,
    k: int = 1,
    signs: str = "homotopy",
) -> TruncatedSeries:
    """sum_i s_i * E_l(x_i^k) with s_i = (-1)^(m_i - 1) or (-1)^(m_i)."""
    coeffs: dict[tuple[int, ...], object] = {}
    nv = vars_.nvars
    for i in range(cfg.r):
        sign = cfg.eps(i) if signs == "homotopy" else -cfg.eps(i)
        for power, c in enumerate(e_poly(l).coeffs):
            if c == 0:
                continue
            mono = [0] * nv
            mono[i] = power * k
            key = tuple(mono)
            coeffs[key] = coeffs.get(key, QQ(0)) + sign * c
    return TruncatedSeries(vars_, spec, coeffs)


def _power_sum_series(
    cfg: LinkConfig, vars_: VariableSet, spec: TruncationSpec, l: int
) -> TruncatedSeries:
    """A_l = sum_i (-1)^(m_i) x_i^l."""
    coeffs: dict[tuple[int, ...], object] = {}
    nv = vars_.nvars
    for i in range(cfg.r):
        mono = [0] * nv
        mono[i] = l
        key = tuple(mono)
        coeffs[key] = coeffs.get(key, 0) + (-cfg.eps(i))
    return TruncatedSeries(vars_, spec, coeffs)


def _f_poly_series(
    vars_: VariableSet, spec: TruncationSpec, l: int, k: int = 1
) -> TruncatedSeries:
    """F_l(u^k) as a series."""
    coeffs = {}
    iu = vars_.index("u")
    nv = vars_.nvars
    for power, c in enumerate(f_poly(l).coeffs):
        if c == 0:
            continue
        mono = [0] * nv
        mono[iu] = power * k
        coeffs[tuple(mono)] = c
    return TruncatedSeries(vars_, spec, coeffs)


def f_homology(
    cfg: LinkConfig,
    t_max: int,
    x_total_max: int | None = None,
    x_values=None,
    l_max: int | None = None,
) -> TruncatedSeries:
    """The homology generating function F^H(x_1..x_r, u), truncated.

    Product over l >= 1 of
    ``Gamma(X_l, sigma_d l u^l / F_l(u)) * F_l(u)^(-X_l)`` with
    ``X_l = sum_i (-1)^(m_i-1) E_l(x_i)``.  Factors with l > 2 t_max are
    1 within the spec: the Gamma part first deviates at u-order l and
    the F_l power at order l - l/p1 >= l/2.

    With ``x_values`` the Hodge variables are specialized *inside* the
    product (each X_l becomes a rational constant) and the result is a
    series in u alone.  This is required, not merely faster, whenever
    the full x-support matters: F^H carries monomials of x-degree up to
    2t, so specializing a series truncated at x-degree S loses terms.
    """
    if t_max < 0:
        raise ValueError("t_max must be >= 0")
    if l_max is None:
        l_max = 2 * t_max
    if x_values is not None:
        if len(x_values) != cfg.r:
            raise ValueError(f"need {cfg.r} x-values")
        vars_ = VariableSet(has_u=True)
        spec = TruncationSpec(u_max=t_max)
    else:
        vars_ = cfg.xu_vars()
        spec = _xu_spec(t_max, x_total_max)

    log_total = TruncatedSeries.zero(vars_, spec)
    u = TruncatedSeries.term(vars_, spec, {"u": 1})
    for l in range(1, max(l_max, 1) + 1):
        if x_values is not None:
            xl_const = sum(
                (cfg.eps(i) * e_poly(l)(QQ(v)) for i, v in enumerate(x_values)),
                QQ(0),
            )
            if xl_const == 0:
                continue
            x_arg = TruncatedSeries.constant(vars_, spec, xl_const)
        else:
            x_arg = _e_sum_series(cfg, vars_, spec, l)
            if x_arg.is_zero():
                continue
        fl = _f_poly_series(vars_, spec, l)
        u_arg = (u ** l).scaled(cfg.sigma_d * l) * fl.inverse()
        log_total = log_total + log_gamma_series(x_arg, u_arg)
        if l > 1:  # F_1 = 1 contributes nothing
            log_total = log_total - x_arg * fl.log()
    return log_total.exp()


def f_homotopy_direct(
    cfg: LinkConfig, t_max: int, x_total_max: int | None = None
) -> TruncatedSeries:
    """The homotopy generating function F^pi(x_1..x_r, u), truncated.

    Double sum over k, l, j of
    ``mu(k)/(k j) * S_j(X_{l,k}) * (sigma_d l u^{kl} / F_l(u^k))^j``
    minus the sum over k, l of ``mu(k)/k * X_{l,k} * log F_l(u^k)``,
    where ``X_{l,k} = sum_i (-1)^(m_i-1) E_l(x_i^k)``.  The first sum
    needs klj <= t_max (u-order of the j-th power) and the second
    kl <= 2 t_max (log F_l(u^k) has u-order k(l - l/p1) >= kl/2).
    """
    if t_max < 0:
        raise ValueError("t_max must be >= 0")
    vars_ = cfg.xu_vars()
    spec = _xu_spec(t_max, x_total_max)
    total = TruncatedSeries.zero(vars_, spec)
    u = TruncatedSeries.term(vars_, spec, {"u": 1})

    for k in range(1, t_max + 1):
        mk = mobius(k)
        if mk == 0:
            continue
        for l in range(1, t_max // k + 1):
            x_arg = _e_sum_series(cfg, vars_, spec, l, k)
            if x_arg.is_zero():
                continue
            fl = _f_poly_series(vars_, spec, l, k)
            u_arg = (u ** (k * l)).scaled(cfg.sigma_d * l) * fl.inverse()
            u_pow = TruncatedSeries.one(vars_, spec)
            x_pows: list = [u_pow]
            for j in range(1, t_max // (k * l) + 1):
                u_pow = u_pow * u_arg
                if u_pow.is_zero():
                    break
                sj = s_poly(j).at_series(x_arg, x_pows)
                if sj.is_zero():
                    continue
                total = total + (sj * u_pow).scaled(QQ(mk, k * j))

    for k in range(1, 2 * t_max + 1):
        mk = mobius(k)
        if mk == 0:
            continue
        for l in range(2, 2 * t_max // k + 1):
            log_fl = _f_poly_series(vars_, spec, l, k).log()
            if log_fl.is_zero():
                continue
            x_arg = _e_sum_series(cfg, vars_, spec, l, k)
            if x_arg.is_zero():
                continue
            total = total - (x_arg * log_fl).scaled(QQ(mk, k))
    return total


def f_homotopy_via_pleth(
    cfg: LinkConfig, t_max: int, x_total_max: int | None = None
) -> TruncatedSeries:
    """F^pi computed as the plethystic logarithm of F^H (the second route)."""
    return plethystic_log(f_homology(cfg, t_max, x_total_max))


def f_homotopy_graded(
    cfg: LinkConfig,
    t_max: int,
    genus_max: int | None = None,
    f_pi: TruncatedSeries | None = None,
) -> TruncatedSeries:
    """hbar-graded refinement: hbar * F^pi(x_i/hbar, u hbar), re-expanded.

    Each monomial x^s u^t acquires hbar^(t - |s| + 1), its genus.  A
    negative exponent surviving here would mean F^pi carries a monomial
    with |s| > t + 1 — an internal inconsistency, raised as such rather
    than truncated away.
    """
    if genus_max is None:
        genus_max = t_max
    if f_pi is None:
        f_pi = f_homotopy_direct(cfg, t_max)
    vars_ = VariableSet(hodge_count=cfg.r, has_u=True, has_hbar=True)
    spec = TruncationSpec(
        u_max=f_pi.spec.u_max,
        x_total_max=f_pi.spec.x_total_max,
        hbar_window=(0, genus_max),
    )
    r = cfg.r
    ih = vars_.index("hbar")
    out: dict[tuple[int, ...], object] = {}
    for mono, c in f_pi.coeffs.items():
        s_total = sum(mono[:r])
        t = mono[r]
        g = t - s_total + 1
        if g < 0:
            raise SeriesError(
                f"negative genus hbar^{g} at monomial {mono}: "
                "the homotopy series violates |s| <= t + 1"
            )
        if g > genus_max:
            continue
        m2 = list(mono[:r]) + [t, 0]
        m2[ih] = g
        out[tuple(m2)] = c
    return TruncatedSeries(vars_, spec, out, _trusted=True)


def _mu_log_sum(
    cfg: LinkConfig,
    vars_: VariableSet,
    spec: TruncationSpec,
    t_max: int,
    weight,
) -> TruncatedSeries:
    """sum_l weight(l)/l * log(1 - (-1)^d u^l A_l) with A_l = sum_i (-1)^(m_i) x_i^l."""
    one = TruncatedSeries.one(vars_, spec)
    u = TruncatedSeries.term(vars_, spec, {"u": 1})
    out = TruncatedSeries.zero(vars_, spec)
    for l in range(1, t_max + 1):
        w = weight(l)
        if w == 0:
            continue
        a_l = _power_sum_series(cfg, vars_, spec, l)
        arg = one - ((u ** l) * a_l).scaled(cfg.sd)
        out = out + arg.log().scaled(QQ(w, l))
    return out


def genus0_closed(
    cfg: LinkConfig, t_max: int, x_total_max: int | None = None
) -> TruncatedSeries:
    """Closed form for the genus-zero part of F^pi.

    ``-A_1 + (A_1 - (-1)^d / u) * sum_l mu(l)/l log(1 - (-1)^d u^l A_l)``
    with ``A_l = sum_i (-1)^(m_i) x_i^l``.  The 1/u prefactor must cancel
    against the u-order->=1 logarithm; a surviving u^(-1) term is a hard
    error.  Computed with a one-step u-Laurent window, one extra u-order
    of the bracket (the 1/u shift consumes it), then re-truncated.
    """
    vars_ = cfg.xu_vars()
    wspec = _xu_spec(t_max + 1, x_total_max, u_min=-1)
    bracket = _mu_log_sum(cfg, vars_, wspec, t_max + 1, mobius)
    a1 = _power_sum_series(cfg, vars_, wspec, 1)
    u_inv = TruncatedSeries.term(vars_, wspec, {"u": -1}, cfg.sd)
    result = -a1 + (a1 - u_inv) * bracket
    if not result.grade_extract("u", -1).is_zero():
        raise SeriesError("genus-0 closed form left a u^(-1) term")
    return result.truncate(_xu_spec(t_max, x_total_max))


def genus1_closed(
    cfg: LinkConfig, t_max: int, x_total_max: int | None = None
) -> TruncatedSeries:
    """Closed form for the genus-one part of F^pi.

    A totient-weighted logarithm plus the rational hedgehog correction
    ``(-1)^(d+1) (u^2 A_1^2 + (-1)^d u^2 A_2 - 2 (-1)^d u A_1)
    / (4 (1 - (-1)^d u^2 A_2))``.
    """
    vars_ = cfg.xu_vars()
    spec = _xu_spec(t_max, x_total_max)
    out = _mu_log_sum(cfg, vars_, spec, t_max, totient).scaled(QQ(-1, 2))
    one = TruncatedSeries.one(vars_, spec)
    u = TruncatedSeries.term(vars_, spec, {"u": 1})
    a1 = _power_sum_series(cfg, vars_, spec, 1)
    a2 = _power_sum_series(cfg, vars_, spec, 2)
    sd = cfg.sd
    numer = (u * a1) ** 2 + ((u ** 2) * a2).scaled(sd) - (u * a1).scaled(2 * sd)
    denom = one - ((u ** 2) * a2).scaled(sd)
    return out + (numer * denom.inverse()).scaled(QQ(-sd, 4))


def _alpha_series(
    cfg: LinkConfig, vars_: VariableSet, spec: TruncationSpec, l: int
) -> TruncatedSeries:
    """alpha_l(1/z) = sum_i (-1)^(m_i (l-1)) x_i^l z^(-m_i l) (integer m_i needed)."""
    m_values, _d = cfg.require_values()
    iz = vars_.index("z")
    coeffs: dict[tuple[int, ...], object] = {}
    for i, m in enumerate(m_values):
        mono = [0] * vars_.nvars
        mono[i] = l
        mono[iz] = -m * l
        sign = -1 if (m * (l - 1)) % 2 else 1
        key = tuple(mono)
        coeffs[key] = coeffs.get(key, 0) + sign
    return TruncatedSeries(vars_, spec, coeffs)


def _dims_spec(cfg: LinkConfig, t_max: int, x_total_max: int | None, u_min: int = 0):
    m_values, d = cfg.require_values()
    vars_ = VariableSet(hodge_count=cfg.r, has_u=True, has_z=True)
    span = (abs(d) + 2 + max(m_values)) * (t_max + 3)
    spec = TruncationSpec(
        u_max=t_max,
        x_total_max=(t_max + 1) if x_total_max is None else x_total_max,
        z_window=(-span, span),
        u_min=u_min,
    )
    return vars_, spec


def genus0_dims(
    cfg: LinkConfig, t_max: int, x_total_max: int | None = None
) -> TruncatedSeries:
    """z-graded dimension series of the genus-zero Hodge summands.

    ``z alpha_1(1/z) + (1 - z^(d-2) u alpha_1(1/z)) / (z^(d-3) u) *
    sum_l mu(l)/l log(1 - (-1)^((l-1)d) (z^(d-2) u)^l alpha_l(1/z))``.
    Specializing z = -1 recovers :func:`genus0_closed`.
    """
    m_values, d = cfg.require_values()
    vars_, wspec = _dims_spec(cfg, t_max + 1, x_total_max, u_min=-1)
    one = TruncatedSeries.one(vars_, wspec)
    bracket = TruncatedSeries.zero(vars_, wspec)
    for l in range(1, t_max + 2):
        ml = mobius(l)
        if ml == 0:
            continue
        sign = -1 if ((l - 1) * d) % 2 else 1
        zu_l = TruncatedSeries.term(vars_, wspec, {"z": (d - 2) * l, "u": l}, sign)
        arg = one - zu_l * _alpha_series(cfg, vars_, wspec, l)
        bracket = bracket + arg.log().scaled(QQ(ml, l))
    a1 = _alpha_series(cfg, vars_, wspec, 1)
    z_a1 = TruncatedSeries.term(vars_, wspec, {"z": 1}) * a1
    pref = TruncatedSeries.term(vars_, wspec, {"z": -(d - 3), "u": -1}) * (
        one - TruncatedSeries.term(vars_, wspec, {"z": d - 2, "u": 1}) * a1
    )
    result = z_a1 + pref * bracket
    if not result.grade_extract("u", -1).is_zero():
        raise SeriesError("genus-0 dimension series left a u^(-1) term")
    vars2, spec2 = _dims_spec(cfg, t_max, x_total_max)
    return result.truncate(spec2)


def genus1_dims(
    cfg: LinkConfig, t_max: int, x_total_max: int | None = None
) -> TruncatedSeries:
    """z-graded dimension series of the genus-one Hodge summands.

    Totient-weighted logarithm plus the dihedral correction term;
    specializing z = -1 recovers :func:`genus1_closed`.
    """
    m_values, d = cfg.require_values()
    vars_, spec = _dims_spec(cfg, t_max, x_total_max)
    one = TruncatedSeries.one(vars_, spec)
    out = TruncatedSeries.zero(vars_, spec)
    for l in range(1, t_max + 1):
        sign = -1 if (d * (l - 1)) % 2 else 1
        zu_l = TruncatedSeries.term(vars_, spec, {"z": (d - 2) * l, "u": l}, sign)
        arg = one - zu_l * _alpha_series(cfg, vars_, spec, l)
        out = out + arg.log().scaled(QQ(-totient(l), 2 * l))
    sd = -1 if d % 2 else 1
    a1 = _alpha_series(cfg, vars_, spec, 1)
    a2 = _alpha_series(cfg, vars_, spec, 2)
    zu = TruncatedSeries.term(vars_, spec, {"z": d - 2, "u": 1})
    zu2 = TruncatedSeries.term(vars_, spec, {"z": 2 * d - 4, "u": 2})
    numer = zu2 * a1 * a1 + (zu2 * a2).scaled(sd) - (zu * a1).scaled(2)
    denom = one - (zu2 * a2).scaled(sd)
    return out + (numer * denom.inverse()).scaled(QQ(-sd, 4))


@dataclass
class EulerTable:
    """Integer grid chi[s2][t] at fixed genus, in the published layout.

    Rows are complexities t = 1..t_max; columns are hair counts s2 of
    the second strand (r = 2) from 0..s2_max, with s1 = t - s2 + 1 - g.
    For r = 1 there is a single column (s1 = t + 1 - g).
    """

    genus: int
    t_max: int
    r: int
    s2_max: int
    rows: dict[int, list[int]] = field(default_factory=dict)

    @property
    def convention(self) -> str:
        shift = 1 - self.genus
        if self.r == 1:
            if shift == 0:
                return "s1 = t"
            return f"s1 = t + {shift}" if shift > 0 else f"s1 = t - {-shift}"
        if shift > 0:
            return f"s1 = t - s2 + {shift}"
        if shift == 0:
            return "s1 = t - s2"
        return f"s1 = t - s2 - {-shift}"

    def cell(self, t: int, s2: int = 0) -> int:
        return self.rows[t][s2]

    def to_json_obj(self):
        return {
            "genus": self.genus,
            "convention": self.convention,
            "rows": [{"t": t, "chi": self.rows[t]} for t in sorted(self.rows)],
        }

    def to_csv(self) -> str:
        header = "t," + ",".join(str(s2) for s2 in range(self.s2_max + 1))
        lines = [header]
        for t in sorted(self.rows):
            lines.append(str(t) + "," + ",".join(str(v) for v in self.rows[t]))
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        cols = list(range(self.s2_max + 1))
        cells = [["t\\s2"] + [str(c) for c in cols]]
        for t in sorted(self.rows):
            cells.append([str(t)] + [str(v) for v in self.rows[t]])
        widths = [max(len(row[i]) for row in cells) for i in range(len(cells[0]))]
        out = [f"# genus {self.genus}, {self.convention}"]
        for row in cells:
            out.append("  ".join(v.rjust(w) for v, w in zip(row, widths)))
        return "\n".join(out) + "\n"


def euler_table(
    cfg: LinkConfig,
    genus: int,
    t_max: int,
    f_pi: TruncatedSeries | None = None,
    s2_max: int | None = None,
) -> EulerTable:
    """Extract the genus-g grid of chi values from F^pi.

    The coefficient of x^s u^t contributes to genus g = t - |s| + 1, so
    row t of the genus-g table reads off |s| = t + 1 - g; entries whose
    required s1 would be negative are 0.
    """
    if genus < 0:
        raise ValueError("genus must be >= 0")
    if cfg.r > 2:
        raise ValueError("the published grid layout is defined for r <= 2")
    if f_pi is None:
        f_pi = f_homotopy_direct(cfg, t_max)
    if f_pi.spec.u_max is not None and t_max > f_pi.spec.u_max:
        raise ValueError("t_max exceeds the truncation of the supplied series")
    if s2_max is None:
        s2_max = t_max if cfg.r == 2 else 0
    table = EulerTable(genus=genus, t_max=t_max, r=cfg.r, s2_max=s2_max)
    for t in range(1, t_max + 1):
        row = []
        for s2 in range(s2_max + 1):
            s_total = t + 1 - genus
            s1 = s_total - s2 if cfg.r == 2 else s_total
            if s1 < 0 or (cfg.r == 1 and s2 > 0):
                row.append(0)
                continue
            expo = {"x1": s1, "u": t}
            if cfg.r == 2:
                expo["x2"] = s2
            c = f_pi.coefficient(expo)
            if c.denominator != 1:
                raise SeriesError(f"non-integer Euler characteristic at {expo}: {c}")
            row.append(int(c))
        table.rows[t] = row
    return table
