"""Cross-verification suite: every identity the engine can check against
itself, against closed forms, against the published grids, and against
the brute-force graph enumeration.

Each check returns a :class:`CheckResult`; a failing check carries the
first differing coefficient with enough provenance to locate it.  The
CLI ``verify`` subcommand runs these and exits nonzero on any failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cycleindex import (
    feynman_regrade,
    mod_envelope_supercharacter,
    mod_envelope_supercharacter_direct,
    specialize_colors,
    z_graph_supercharacter,
    z_hedgehog_homology,
    z_lie_cyclic,
    z_tree_homology,
)
from .genfun import (
    LinkConfig,
    euler_table,
    f_homology,
    f_homotopy_direct,
    f_homotopy_graded,
    genus0_closed,
    genus0_dims,
    genus1_closed,
    genus1_dims,
)
from .graphs import EnumerationBudget, euler_char_oracle
from .rationals import QQ, qq_str
from .reference_tables import RECONCILIATION_CELLS, TABLES
from .reference_tables import T_MAX as TABLE_T_MAX
from .series import TruncatedSeries, TruncationSpec, VariableSet
from .special import e_poly, f_poly, gamma_series, plethystic_exp, s_poly

__all__ = ["CheckResult", "run_checks", "CHECK_NAMES"]


@dataclass
class CheckResult:
    name: str
    ok: bool = True
    details: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def fail(self, message: str):
        self.ok = False
        self.details.append(message)

    def note(self, message: str):
        self.notes.append(message)


def _first_difference(a: TruncatedSeries, b: TruncatedSeries) -> str:
    spec = a.spec.meet(b.spec)
    at, bt = a.truncate(spec), b.truncate(spec)
    for mono in sorted(set(at.coeffs) | set(bt.coeffs)):
        ca = at.coeffs.get(mono, QQ(0))
        cb = bt.coeffs.get(mono, QQ(0))
        if ca != cb:
            names = dict(zip(a.vars.names, mono))
            named = {k: v for k, v in names.items() if v}
            return f"at {named or '1'}: {qq_str(ca)} vs {qq_str(cb)}"
    return "(no differing coefficient found)"


def _series_equal(res: CheckResult, label: str, a: TruncatedSeries, b: TruncatedSeries):
    spec = a.spec.meet(b.spec)
    if a.truncate(spec) != b.truncate(spec):
        res.fail(f"{label}: {_first_difference(a, b)}")


_PARITY_CONFIGS = {
    "odd-odd": ((1, 1), 3),
    "odd-even": ((1, 1), 4),
    "even-odd": ((2, 2), 5),
    "even-even": ((2, 2), 4),
}


def _cfg(parity_key: str, r: int) -> LinkConfig:
    (m0, _m1), d = _PARITY_CONFIGS[parity_key]
    return LinkConfig.create((m0,) * r, d)


def check_special_polynomials() -> CheckResult:
    res = CheckResult("special-polynomials")
    if e_poly(1)(1) != 1:
        res.fail("e-poly: E_1(1) != 1")
    for l in range(2, 51):
        if e_poly(l)(1) != 0:
            res.fail(f"e-poly: E_{l}(1) = {qq_str(e_poly(l)(1))}, want 0")
            break
    for l in range(1, 51):
        if f_poly(l)(0) != 1:
            res.fail(f"f-poly: F_{l}(0) = {qq_str(f_poly(l)(0))}, want 1")
            break
    if tuple(f_poly(2).coeffs) != (QQ(1), QQ(-1)):
        res.fail(f"f-poly: F_2 = {list(f_poly(2).coeffs)}, want 1 - u")
    for l in range(1, 31):
        e, f = e_poly(l), f_poly(l)
        for k, c in enumerate(e.coeffs):
            want = f.coeffs[l - k] if l - k <= f.degree else QQ(0)
            if l * c != want:
                res.fail(f"f-poly vs e-poly rescaling fails at l={l}, power {k}")
                break
    for j in range(1, 7):
        for n in range(21):
            if s_poly(j)(n) != sum(i**j for i in range(1, n + 1)):
                res.fail(f"s-poly: S_{j}({n}) is not the power sum")
    return res


def check_gamma(t_max: int = 12) -> CheckResult:
    res = CheckResult("gamma")
    uv = VariableSet(has_u=True)
    spec = TruncationSpec(u_max=t_max)
    one = TruncatedSeries.one(uv, spec)
    u = TruncatedSeries.term(uv, spec, {"u": 1})
    if gamma_series(TruncatedSeries.zero(uv, spec), u) != one:
        res.fail("Gamma(0, u) != 1")
    if gamma_series(TruncatedSeries.constant(uv, spec, -1), u) != one:
        res.fail("Gamma(-1, u) != 1")
    for n in range(1, 9):
        closed = one
        for k in range(1, n + 1):
            closed = closed * (one - u.scaled(k)).inverse()
        got = gamma_series(TruncatedSeries.constant(uv, spec, n), u)
        if got != closed:
            res.fail(f"Gamma({n}, u): {_first_difference(got, closed)}")
    for n in range(2, 9):
        closed = one
        for k in range(1, n):
            closed = closed * (one + u.scaled(k))
        got = gamma_series(TruncatedSeries.constant(uv, spec, -n), u)
        if got != closed:
            res.fail(f"Gamma({-n}, u): {_first_difference(got, closed)}")
    return res


def check_homology_specializations(t_max: int = 12, r_max: int = 5) -> CheckResult:
    res = CheckResult("homology-specializations")
    uv = VariableSet(has_u=True)
    spec = TruncationSpec(u_max=t_max)
    one = TruncatedSeries.one(uv, spec)
    u = TruncatedSeries.term(uv, spec, {"u": 1})
    for r in range(1, r_max + 1):
        # all x = 1, all m = 1: 1/prod(1 - ku) for odd d, 1/prod(1 + ku) even
        for d, sgn in ((3, 1), (4, -1)):
            cfg = LinkConfig.create((1,) * r, d)
            got = f_homology(cfg, t_max, x_values=[1] * r)
            closed = one
            for k in range(1, r + 1):
                closed = closed * (one - u.scaled(sgn * k)).inverse()
            if got != closed:
                res.fail(f"x=1 r={r} d={'odd' if sgn>0 else 'even'}: "
                         f"{_first_difference(got, closed)}")
    for r in (2,):
        # all x = -1: rational closed forms with denominators 1 - u -+ 2ku^2
        cfg_odd = LinkConfig.create((1,) * r, 3)
        got = f_homology(cfg_odd, t_max, x_values=[-1] * r)
        closed = one
        for k in range(1, r):
            closed = closed * (one + u.scaled(k))
        for k in range(1, r + 1):
            closed = closed * (one - u - (u * u).scaled(2 * k)).inverse()
        if got != closed:
            res.fail(f"x=-1 r={r} d=odd: {_first_difference(got, closed)}")
        cfg_even = LinkConfig.create((1,) * r, 4)
        got = f_homology(cfg_even, t_max, x_values=[-1] * r)
        closed = one
        for k in range(1, r):
            closed = closed * (one - u.scaled(k))
        for k in range(1, r + 1):
            closed = closed * (one - u + (u * u).scaled(2 * k)).inverse()
        if got != closed:
            res.fail(f"x=-1 r={r} d=even: {_first_difference(got, closed)}")
    return res


def check_route_equivalence(t_max: int = 10, r_max: int = 3) -> CheckResult:
    res = CheckResult("route-equivalence")
    for parity_key in _PARITY_CONFIGS:
        for r in range(1, r_max + 1):
            cfg = _cfg(parity_key, r)
            fh = f_homology(cfg, t_max)
            direct = f_homotopy_direct(cfg, t_max)
            from .special import plethystic_log

            pleth = plethystic_log(fh)
            _series_equal(res, f"direct vs plethystic ({parity_key}, r={r})", direct, pleth)
            back = plethystic_exp(direct)
            _series_equal(res, f"plethystic exp back to F^H ({parity_key}, r={r})", back, fh)
    return res


def check_genus_split(t_max: int = 12) -> CheckResult:
    res = CheckResult("genus-split")
    for parity_key in _PARITY_CONFIGS:
        cfg = _cfg(parity_key, 2)
        f_pi = f_homotopy_direct(cfg, t_max)
        try:
            graded = f_homotopy_graded(cfg, t_max, f_pi=f_pi)
        except Exception as exc:  # negative genus is a hard failure
            res.fail(f"graded split ({parity_key}): {exc}")
            continue
        if not graded.grade_extract("hbar", -1).is_zero():
            res.fail(f"graded split ({parity_key}): negative-genus part nonzero")
        h0 = _drop_hbar(graded.grade_extract("hbar", 0), cfg)
        h1 = _drop_hbar(graded.grade_extract("hbar", 1), cfg)
        g0 = genus0_closed(cfg, t_max)
        g1 = genus1_closed(cfg, t_max)
        _series_equal(res, f"hbar^0 vs genus-0 closed form ({parity_key})", h0, g0)
        _series_equal(res, f"hbar^1 vs genus-1 closed form ({parity_key})", h1, g1)
    # dimension series collapse to the closed forms at z = -1
    for m, d in ((1, 5), (2, 7)):
        cfg = LinkConfig.create((m, m), d)
        for dims_fn, closed_fn, label in (
            (genus0_dims, genus0_closed, "genus-0"),
            (genus1_dims, genus1_closed, "genus-1"),
        ):
            dims = dims_fn(cfg, 6)
            closed = closed_fn(cfg, 6)
            at_m1 = _z_to_minus_one(dims, cfg)
            _series_equal(res, f"{label} dims at z=-1 (m={m}, d={d})", at_m1, closed)
    return res


def _drop_hbar(series: TruncatedSeries, cfg: LinkConfig) -> TruncatedSeries:
    vars_ = cfg.xu_vars()
    spec = TruncationSpec(u_max=series.spec.u_max, x_total_max=series.spec.x_total_max)
    ih = series.vars.index("hbar")
    out = {}
    for mono, c in series.coeffs.items():
        assert mono[ih] == 0
        out[mono[:ih] + mono[ih + 1 :]] = c
    return TruncatedSeries(vars_, spec, out, _trusted=True)


def _z_to_minus_one(series: TruncatedSeries, cfg: LinkConfig) -> TruncatedSeries:
    vars_ = cfg.xu_vars()
    spec = TruncationSpec(u_max=series.spec.u_max, x_total_max=series.spec.x_total_max)
    assignments = {
        "z": TruncatedSeries.constant(vars_, spec, -1),
    }
    return series.substitute(assignments)


def check_cycle_index(t_max: int = 8, r_max: int = 3, w_max: int = 6, g_max: int = 4) -> CheckResult:
    res = CheckResult("cycle-index")
    for parity_key in ("odd-odd", "odd-even", "even-odd", "even-even"):
        for r in range(1, r_max + 1):
            cfg = _cfg(parity_key, r)
            z = z_graph_supercharacter("odd" if cfg.d_parity else "even", t_max + 1, t_max)
            spec = specialize_colors(z, cfg, "euler")
            direct = f_homotopy_direct(cfg, t_max, x_total_max=t_max + 1)
            _series_equal(res, f"Euler specialization vs F^pi ({parity_key}, r={r})", spec, direct)
    for twist in ("plain", "det"):
        a = mod_envelope_supercharacter(twist, w_max, g_max)
        b = mod_envelope_supercharacter_direct(twist, w_max, g_max)
        _series_equal(res, f"modular envelope two routes ({twist})", a, b)
        if any(e < 0 for e in a.exponents_of("hbar")):
            res.fail(f"modular envelope ({twist}): negative genus exponent")
        p_start = a.vars.p_start()
        if any(sum(m[p_start:]) == 0 for m in a.coeffs):
            res.fail(f"modular envelope ({twist}): arity-zero part is not empty")
        regraded = feynman_regrade(feynman_regrade(a))
        if regraded != a:
            res.fail(f"feynman regrade is not an involution ({twist})")
    # dimension EGAs: dim Lie((k)) = (k-2)!, dim of induced dihedral = n!/(2n)
    zl = z_lie_cyclic(8)
    for k in range(2, 9):
        got = zl.coefficient({"p1": k})
        if got != QQ(1, k * (k - 1)):
            res.fail(f"cyclic-lie dims: p1^{k} coefficient {qq_str(got)}, "
                     f"want 1/{k * (k - 1)}")
    for d in (2, 3):
        zh = z_hedgehog_homology(d, 7)
        for n in range(3, 8):
            got = zh.coefficient({"p1": n, "z": (d - 2) * n, "u": n})
            if got != QQ(1, 2 * n):
                res.fail(f"hedgehog dims (d={d}): p1^{n} coefficient {qq_str(got)}, "
                         f"want 1/{2 * n}")
    # tree-level cycle index reproduces the genus-0 closed form
    cfg = LinkConfig.create((1, 1), 3)
    zt = z_tree_homology(3, t_max)
    sp = specialize_colors(zt, cfg, "euler")
    g0 = genus0_closed(cfg, t_max - 1, x_total_max=t_max)
    _series_equal(res, "tree-level Euler specialization vs genus-0 closed form", sp, g0)
    # dimension-mode specializations against the direct z-graded series
    for m, d in ((1, 5), (2, 6)):
        cfg = LinkConfig.create((m, m), d)
        w = min(t_max, 6)
        left0 = specialize_colors(z_tree_homology(d, w), cfg, "dims")
        right0 = genus0_dims(cfg, w - 1, x_total_max=w)
        _series_equal(res, f"tree dims vs genus-0 dims (m={m}, d={d})", left0, right0)
        left1 = specialize_colors(z_hedgehog_homology(d, w), cfg, "dims")
        right1 = genus1_dims(cfg, w - 1, x_total_max=w)
        _series_equal(res, f"hedgehog dims vs genus-1 dims (m={m}, d={d})", left1, right1)
    return res


def check_tables(t_max: int = TABLE_T_MAX) -> CheckResult:
    res = CheckResult("tables")
    cfg = LinkConfig.create((1, 1), 3)
    f_pi = f_homotopy_direct(cfg, t_max)
    recon = set(RECONCILIATION_CELLS)
    for g in range(4):
        table = euler_table(cfg, g, t_max, f_pi=f_pi, s2_max=min(t_max, 23))
        for t in range(1, t_max + 1):
            row = table.rows[t]
            for s2, got in enumerate(row):
                want = TABLES[g][t][s2]
                if got == want:
                    continue
                if (g, t, s2) in recon:
                    mirror_s2 = (t + 1 - g) - s2
                    mirror = row[mirror_s2] if 0 <= mirror_s2 < len(row) else None
                    res.note(
                        f"candidate misprint: genus {g}, t={t}, s2={s2}: "
                        f"printed {want}, computed {got}; mirror cell "
                        f"s2={mirror_s2} computed {mirror}"
                    )
                    if mirror != got:
                        res.fail(
                            f"genus {g} t={t}: computed row breaks palindromy "
                            f"at s2={s2}"
                        )
                    continue
                res.fail(
                    f"table genus {g}, t={t}, s2={s2}: computed {got}, "
                    f"published {want}"
                )
                if len(res.details) > 5:
                    return res
        # palindromy of computed rows (equal parities)
        for t in range(1, t_max + 1):
            s_total = t + 1 - g
            for s2 in range(max(s_total + 1, 0)):
                mirror = s_total - s2
                if 0 <= mirror <= min(t_max, 23) and s2 <= min(t_max, 23):
                    if table.rows[t][s2] != table.rows[t][mirror]:
                        res.fail(f"genus {g} t={t}: row not palindromic at s2={s2}")
    return res


def check_oracle(t_max: int = 4, genus0_t_max: int = 5) -> CheckResult:
    res = CheckResult("oracle")
    cfg = LinkConfig.create((1, 1), 3)
    budget = EnumerationBudget(t_max=max(t_max, genus0_t_max), hairs_max=genus0_t_max + 1)
    top = max(t_max, genus0_t_max)
    f_pi = f_homotopy_direct(cfg, top)
    for g in range(4):
        for t in range(1, t_max + 1):
            s_total = t + 1 - g
            if s_total < 1:
                continue
            for s2 in range(s_total + 1):
                s1 = s_total - s2
                got = euler_char_oracle(cfg, (s1, s2), t, budget)
                want = int(f_pi.coefficient({"x1": s1, "x2": s2, "u": t}))
                if got != want:
                    res.fail(
                        f"oracle genus {g} t={t} s=({s1},{s2}): "
                        f"enumeration {got}, series {want}"
                    )
    for t in (genus0_t_max,):
        s_total = t + 1
        for s2 in range(s_total + 1):
            s1 = s_total - s2
            got = euler_char_oracle(cfg, (s1, s2), t, budget)
            want = int(f_pi.coefficient({"x1": s1, "x2": s2, "u": t}))
            if got != want:
                res.fail(
                    f"oracle genus 0 t={t} s=({s1},{s2}): "
                    f"enumeration {got}, series {want}"
                )
    return res


def check_stability(t_max: int = 8) -> CheckResult:
    res = CheckResult("stability")
    cfg = LinkConfig.create((1, 1), 3)
    base = f_homology(cfg, t_max)
    more = f_homology(cfg, t_max, l_max=2 * t_max + 4)
    _series_equal(res, "factor bound l <= 2T is stable under l_max + 4", base, more)
    return res


CHECK_NAMES = {
    "special-polynomials": check_special_polynomials,
    "gamma": check_gamma,
    "homology-specializations": check_homology_specializations,
    "route-equivalence": check_route_equivalence,
    "genus-split": check_genus_split,
    "cycle-index": check_cycle_index,
    "stability": check_stability,
    "tables": check_tables,
    "oracle": check_oracle,
}

_SCALABLE = {
    "gamma": "t_max",
    "homology-specializations": "t_max",
    "route-equivalence": "t_max",
    "genus-split": "t_max",
    "cycle-index": "t_max",
    "stability": "t_max",
    "tables": "t_max",
    "oracle": "t_max",
}


def run_checks(only=None, t_max: int | None = None) -> list[CheckResult]:
    """Run the named checks (all by default), optionally scaling the
    truncation order down for a quick pass."""
    names = list(CHECK_NAMES)
    if only:
        unknown = [n for n in only if n not in CHECK_NAMES]
        if unknown:
            raise ValueError(f"unknown checks: {unknown}; known: {names}")
        names = [n for n in names if n in set(only)]
    results = []
    for name in names:
        fn = CHECK_NAMES[name]
        if t_max is not None and name in _SCALABLE:
            if name == "oracle":
                results.append(fn(t_max=min(t_max, 4), genus0_t_max=min(t_max, 5)))
            else:
                results.append(fn(t_max=t_max))
        else:
            results.append(fn())
    return results
