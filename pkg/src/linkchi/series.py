"""Sparse truncated multivariate formal power series over exact rationals.

A series lives over a fixed :class:`VariableSet`: Hodge variables
``x1..xr`` (one per link component), the complexity variable ``u``, the
homological-degree variable ``z``, the genus variable ``hbar``, and
power-sum variables ``p1..pL``.  Exponents of ``z`` and ``hbar`` may be
negative (Laurent windows); all other exponents are nonnegative, except
that ``u`` may be given a one-step negative window for intermediate
bookkeeping.

Truncation is an explicit contract (:class:`TruncationSpec`): monomials
inside the bounds are exact, monomials outside are *undefined* — asking
for them raises :class:`OutOfBoundsError` rather than answering 0,
because silent truncation bugs are the dominant failure mode of series
engines.  Every operation returns a series whose spec is the meet
(componentwise shrink) of its operands' specs.

Series are immutable after construction; all operations are pure.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Mapping

from .rationals import QQ, qq_str

__all__ = [
    "VariableSet",
    "TruncationSpec",
    "TruncatedSeries",
    "OutOfBoundsError",
    "SeriesError",
]

_NO_BOUND = None


class SeriesError(ValueError):
    """Contract violation in a series operation."""


class OutOfBoundsError(SeriesError):
    """A coefficient outside the truncation bounds was requested."""


@dataclass(frozen=True)
class VariableSet:
    """Ordered family of variables: x1..xr, u, z, hbar, p1..pL."""

    hodge_count: int = 0
    has_u: bool = False
    has_z: bool = False
    has_hbar: bool = False
    pcount: int = 0

    @property
    def names(self) -> tuple[str, ...]:
        out = [f"x{i + 1}" for i in range(self.hodge_count)]
        if self.has_u:
            out.append("u")
        if self.has_z:
            out.append("z")
        if self.has_hbar:
            out.append("hbar")
        out.extend(f"p{l + 1}" for l in range(self.pcount))
        return tuple(out)

    @property
    def nvars(self) -> int:
        return (
            self.hodge_count
            + int(self.has_u)
            + int(self.has_z)
            + int(self.has_hbar)
            + self.pcount
        )

    def index(self, name: str) -> int:
        base = self.hodge_count
        if name.startswith("x") and name[1:].isdigit():
            i = int(name[1:]) - 1
            if 0 <= i < self.hodge_count:
                return i
            raise KeyError(name)
        if name == "u":
            if not self.has_u:
                raise KeyError(name)
            return base
        base += int(self.has_u)
        if name == "z":
            if not self.has_z:
                raise KeyError(name)
            return base
        base += int(self.has_z)
        if name == "hbar":
            if not self.has_hbar:
                raise KeyError(name)
            return base
        base += int(self.has_hbar)
        if name.startswith("p") and name[1:].isdigit():
            l = int(name[1:]) - 1
            if 0 <= l < self.pcount:
                return base + l
            raise KeyError(name)
        raise KeyError(name)

    def p_start(self) -> int:
        return self.nvars - self.pcount


@dataclass(frozen=True)
class TruncationSpec:
    """Bounds defining which monomials a series stores exactly.

    ``u_max``     highest u-exponent kept (T); ``u_min`` is 0 except for
                  short-lived Laurent bookkeeping steps.
    ``x_total_max`` cap S on the *total* x-degree (default T+1 at
                  construction sites: genus >= 0 forces |s| <= t + 1).
    ``z_window``/``hbar_window``  inclusive (lo, hi) exponent windows.
    ``p_weight_max`` cap W on the weighted p-degree, weight(p_l) = l.
    """

    u_max: int | None = _NO_BOUND
    x_total_max: int | None = _NO_BOUND
    z_window: tuple[int, int] | None = _NO_BOUND
    hbar_window: tuple[int, int] | None = _NO_BOUND
    p_weight_max: int | None = _NO_BOUND
    u_min: int = 0

    def __post_init__(self):
        if self.u_max is not None and self.u_max < 0:
            raise SeriesError("u_max must be >= 0")
        if self.x_total_max is not None and self.x_total_max < 0:
            raise SeriesError("x_total_max must be >= 0")
        if self.p_weight_max is not None and self.p_weight_max < 0:
            raise SeriesError("p_weight_max must be >= 0")
        if self.u_min > 0:
            raise SeriesError("u_min must be <= 0")

    def meet(self, other: "TruncationSpec") -> "TruncationSpec":
        """Componentwise shrink: the largest spec both operands can honor."""

        def bmin(a, b):
            if a is None:
                return b
            if b is None:
                return a
            return min(a, b)

        def wmeet(a, b):
            if a is None:
                return b
            if b is None:
                return a
            return (max(a[0], b[0]), min(a[1], b[1]))

        return TruncationSpec(
            u_max=bmin(self.u_max, other.u_max),
            x_total_max=bmin(self.x_total_max, other.x_total_max),
            z_window=wmeet(self.z_window, other.z_window),
            hbar_window=wmeet(self.hbar_window, other.hbar_window),
            p_weight_max=bmin(self.p_weight_max, other.p_weight_max),
            u_min=max(self.u_min, other.u_min),
        )


def _metric(vars_: VariableSet, mono: tuple[int, ...]):
    """(x_total, u, z, hbar, p_weight) of a monomial; missing -> 0."""
    r = vars_.hodge_count
    xtot = sum(mono[:r]) if r else 0
    i = r
    u = mono[i] if vars_.has_u else 0
    i += int(vars_.has_u)
    zz = mono[i] if vars_.has_z else 0
    i += int(vars_.has_z)
    hb = mono[i] if vars_.has_hbar else 0
    i += int(vars_.has_hbar)
    pw = 0
    for l in range(vars_.pcount):
        pw += (l + 1) * mono[i + l]
    return xtot, u, zz, hb, pw


def _in_bounds(spec: TruncationSpec, metric) -> bool:
    xtot, u, zz, hb, pw = metric
    if spec.u_max is not None and not (spec.u_min <= u <= spec.u_max):
        return False
    if spec.x_total_max is not None and xtot > spec.x_total_max:
        return False
    if spec.z_window is not None and not (spec.z_window[0] <= zz <= spec.z_window[1]):
        return False
    if spec.hbar_window is not None and not (
        spec.hbar_window[0] <= hb <= spec.hbar_window[1]
    ):
        return False
    if spec.p_weight_max is not None and pw > spec.p_weight_max:
        return False
    return True


class TruncatedSeries:
    """Sparse map monomial -> coefficient, with no stored zeros."""

    __slots__ = ("vars", "spec", "coeffs", "_items_cache")

    def __init__(
        self,
        vars_: VariableSet,
        spec: TruncationSpec,
        coeffs: Mapping[tuple[int, ...], object] | None = None,
        *,
        _trusted: bool = False,
    ):
        self.vars = vars_
        self.spec = spec
        self._items_cache = None
        if coeffs is None:
            self.coeffs = {}
        elif _trusted:
            self.coeffs = dict(coeffs)
        else:
            clean = {}
            for mono, c in coeffs.items():
                if len(mono) != vars_.nvars:
                    raise SeriesError(
                        f"monomial {mono} has wrong arity for {vars_.names}"
                    )
                if not _in_bounds(spec, _metric(vars_, mono)):
                    continue
                q = QQ(c)
                if q != 0:
                    clean[tuple(mono)] = q
            self.coeffs = clean

    # ---------------------------------------------------------------- base

    @classmethod
    def zero(cls, vars_: VariableSet, spec: TruncationSpec) -> "TruncatedSeries":
        return cls(vars_, spec, {}, _trusted=True)

    @classmethod
    def constant(cls, vars_: VariableSet, spec: TruncationSpec, c) -> "TruncatedSeries":
        return cls(vars_, spec, {(0,) * vars_.nvars: c})

    @classmethod
    def one(cls, vars_: VariableSet, spec: TruncationSpec) -> "TruncatedSeries":
        return cls.constant(vars_, spec, 1)

    @classmethod
    def term(
        cls,
        vars_: VariableSet,
        spec: TruncationSpec,
        exponents: Mapping[str, int],
        coeff=1,
    ) -> "TruncatedSeries":
        mono = [0] * vars_.nvars
        for name, e in exponents.items():
            mono[vars_.index(name)] = e
        return cls(vars_, spec, {tuple(mono): coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_term(self):
        return self.coeffs.get((0,) * self.vars.nvars, QQ(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.vars == other.vars and self.coeffs == other.coeffs

    def __hash__(self):  # pragma: no cover - series used as values, not keys
        return hash((self.vars, frozenset(self.coeffs.items())))

    def _require_same_vars(self, other: "TruncatedSeries"):
        if self.vars != other.vars:
            raise SeriesError(
                f"variable sets differ: {self.vars.names} vs {other.vars.names}"
            )

    # ---------------------------------------------------------- ring ops

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._require_same_vars(other)
        spec = self.spec.meet(other.spec)
        out = dict(self.coeffs)
        for mono, c in other.coeffs.items():
            acc = out.get(mono)
            if acc is None:
                out[mono] = c
            else:
                acc = acc + c
                if acc == 0:
                    del out[mono]
                else:
                    out[mono] = acc
        if spec != self.spec or spec != other.spec:
            vars_ = self.vars
            out = {m: c for m, c in out.items() if _in_bounds(spec, _metric(vars_, m))}
        return TruncatedSeries(self.vars, spec, out, _trusted=True)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(
            self.vars, self.spec, {m: -c for m, c in self.coeffs.items()}, _trusted=True
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scaled(self, c) -> "TruncatedSeries":
        q = QQ(c)
        if q == 0:
            return TruncatedSeries.zero(self.vars, self.spec)
        return TruncatedSeries(
            self.vars, self.spec, {m: q * v for m, v in self.coeffs.items()}, _trusted=True
        )

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return self._mul_series(other)
        return self.scaled(other)

    __rmul__ = __mul__

    def _items(self):
        """[(monomial, metric, coefficient)] with metrics cached per series."""
        cached = self._items_cache
        if cached is None:
            vars_ = self.vars
            cached = [(m, _metric(vars_, m), c) for m, c in self.coeffs.items()]
            self._items_cache = cached
        return cached

    def _mul_series(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._require_same_vars(other)
        vars_ = self.vars
        spec = self.spec.meet(other.spec)
        out: dict[tuple[int, ...], object] = {}
        if not self.coeffs or not other.coeffs:
            return TruncatedSeries(vars_, spec, out, _trusted=True)
        a, b = (
            (self, other) if len(self.coeffs) <= len(other.coeffs) else (other, self)
        )
        u_max, u_min = spec.u_max, spec.u_min
        s_cap = spec.x_total_max
        zw, hw, w_cap = spec.z_window, spec.hbar_window, spec.p_weight_max

        # Bucket the big operand by the dominant bounded direction (u, or
        # p-weight when u is absent) and sort each bucket by x-total, so
        # pairs outside the spec are mostly never visited.
        use_u = vars_.has_u and u_max is not None
        use_w = not use_u and w_cap is not None and vars_.pcount > 0
        buckets: dict[int, list] = {}
        for item in b._items():
            met = item[1]
            kv = met[1] if use_u else (met[4] if use_w else 0)
            buckets.setdefault(kv, []).append(item)
        for lst in buckets.values():
            lst.sort(key=lambda it: it[1][0])
        bucket_keys = sorted(buckets)

        add = operator.add
        for m1, met1, c1 in a._items():
            xt1, u1, z1, h1, pw1 = met1
            if use_u:
                lo, hi = u_min - u1, u_max - u1
            elif use_w:
                lo, hi = None, w_cap - pw1
            else:
                lo, hi = None, None
            for kv in bucket_keys:
                if hi is not None and kv > hi:
                    break
                if lo is not None and kv < lo:
                    continue
                for m2, met2, c2 in buckets[kv]:
                    if s_cap is not None and xt1 + met2[0] > s_cap:
                        break  # bucket sorted by x-total
                    if w_cap is not None and pw1 + met2[4] > w_cap:
                        continue
                    if zw is not None:
                        zz = z1 + met2[2]
                        if zz < zw[0] or zz > zw[1]:
                            continue
                    if hw is not None:
                        hb = h1 + met2[3]
                        if hb < hw[0] or hb > hw[1]:
                            continue
                    key = tuple(map(add, m1, m2))
                    c = c1 * c2
                    acc = out.get(key)
                    if acc is None:
                        out[key] = c
                    else:
                        acc = acc + c
                        if acc == 0:
                            del out[key]
                        else:
                            out[key] = acc
        return TruncatedSeries(vars_, spec, out, _trusted=True)

    def __pow__(self, n: int) -> "TruncatedSeries":
        if not isinstance(n, int) or n < 0:
            raise SeriesError("only nonnegative integer powers; use pow_series otherwise")
        result = TruncatedSeries.one(self.vars, self.spec)
        base = self
        e = n
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -------------------------------------------------- exp / log / pow

    def _nilpotence_weight_min(self) -> int:
        """Smallest truncation weight over monomials; must be >= 1 for exp/log.

        A direction counts toward the weight when the spec bounds it
        above and no monomial of the series has a negative exponent
        there (so powers of the series can only climb and eventually
        leave the spec).  u, total x and p-weight are structurally
        nonnegative; the z/hbar windows qualify per series.
        """
        spec, vars_ = self.spec, self.vars
        metrics = [_metric(vars_, mono) for mono in self.coeffs]
        if spec.u_max is not None and any(m[1] < 0 for m in metrics):
            raise SeriesError("exp/log need nonnegative u-exponents")
        use_z = (
            vars_.has_z
            and spec.z_window is not None
            and all(m[2] >= 0 for m in metrics)
        )
        use_h = (
            vars_.has_hbar
            and spec.hbar_window is not None
            and all(m[3] >= 0 for m in metrics)
        )
        wmin = None
        for mono, met in zip(self.coeffs, metrics):
            xtot, u, zz, hb, pw = met
            w = 0
            if spec.u_max is not None:
                w += u
            if spec.x_total_max is not None:
                w += xtot
            if spec.p_weight_max is not None:
                w += pw
            if use_z:
                w += zz
            if use_h:
                w += hb
            if w == 0:
                raise SeriesError(
                    f"monomial {mono} is not nilpotent under the truncation spec"
                )
            wmin = w if wmin is None else min(wmin, w)
        return 1 if wmin is None else wmin

    def exp(self) -> "TruncatedSeries":
        """exp of a series with zero constant term, truncated.

        Terminates because every monomial has positive weight in some
        bounded direction, so high powers fall outside the spec.
        """
        if self.constant_term() != 0:
            raise SeriesError("exp requires zero constant term")
        self._nilpotence_weight_min()
        result = TruncatedSeries.one(self.vars, self.spec)
        term = result
        k = 0
        while True:
            k += 1
            term = (term * self).scaled(QQ(1, k))
            if term.is_zero():
                break
            result = result + term
        return result

    def log(self) -> "TruncatedSeries":
        """log of a series with constant term exactly 1, truncated."""
        if self.constant_term() != 1:
            raise SeriesError("log requires constant term 1")
        y = self - TruncatedSeries.one(self.vars, self.spec)
        y._nilpotence_weight_min()
        result = TruncatedSeries.zero(self.vars, self.spec)
        power = TruncatedSeries.one(self.vars, self.spec)
        p = 0
        while True:
            p += 1
            power = power * y
            if power.is_zero():
                break
            result = result + power.scaled(QQ((-1) ** (p + 1), p))
        return result

    def pow_series(self, exponent: "TruncatedSeries") -> "TruncatedSeries":
        """self**exponent = exp(exponent * log(self)); self must have constant term 1."""
        if self.constant_term() != 1:
            raise SeriesError("pow_series requires base constant term 1")
        return (exponent * self.log()).exp()

    def inverse(self) -> "TruncatedSeries":
        """1/self for constant term 1 (geometric series in 1 - self)."""
        if self.constant_term() != 1:
            raise SeriesError("inverse requires constant term 1")
        y = TruncatedSeries.one(self.vars, self.spec) - self
        y._nilpotence_weight_min()
        result = TruncatedSeries.one(self.vars, self.spec)
        power = result
        while True:
            power = power * y
            if power.is_zero():
                break
            result = result + power
        return result

    # ------------------------------------------------------ substitution

    def substitute(
        self, assignments: Mapping[str, "TruncatedSeries"]
    ) -> "TruncatedSeries":
        """Simultaneous substitution, evaluated monomial by monomial.

        All replacement series must share one (VariableSet, spec) — that
        pair defines the result.  Variables of ``self`` not being
        substituted must exist under the same name in the result set.
        Substituting ``u`` requires the replacement to have positive
        order in some direction the result spec bounds above, so that the
        source truncation at u^T stays sound.  A variable occurring with
        negative exponents can only be replaced by an invertible term
        (single monomial with nonzero coefficient).
        """
        if not assignments:
            return self
        repls = dict(assignments)
        first = next(iter(repls.values()))
        tvars, tspec = first.vars, first.spec
        for name, s in repls.items():
            self.vars.index(name)  # must exist in source
            if s.vars != tvars or s.spec != tspec:
                raise SeriesError("replacement series must share one variable set and spec")

        if "u" in repls:
            u_repl = repls["u"]
            if not _has_positive_bounded_order(u_repl):
                raise SeriesError(
                    "substituting u requires a replacement of positive order "
                    "in a truncated direction (u <- constant is unsound)"
                )

        src_names = self.vars.names
        carried: list[tuple[int, int]] = []  # (source position, target position)
        subst_pos: dict[int, TruncatedSeries] = {}
        for i, name in enumerate(src_names):
            if name in repls:
                subst_pos[i] = repls[name]
            else:
                carried.append((i, tvars.index(name)))

        power_cache: dict[tuple[int, int], TruncatedSeries] = {}

        def repl_power(i: int, e: int) -> TruncatedSeries:
            key = (i, e)
            got = power_cache.get(key)
            if got is None:
                series = subst_pos[i]
                if e >= 0:
                    got = series ** e
                else:
                    got = _invert_term(series) ** (-e)
                power_cache[key] = got
            return got

        nt = tvars.nvars
        out = TruncatedSeries.zero(tvars, tspec)
        for mono, c in self.coeffs.items():
            base = [0] * nt
            for i_src, i_tgt in carried:
                base[i_tgt] = mono[i_src]
            term = TruncatedSeries(tvars, tspec, {tuple(base): c})
            for i in subst_pos:
                e = mono[i]
                if e:
                    term = term * repl_power(i, e)
                if term.is_zero():
                    break
            out = out + term
        return out

    # ------------------------------------------------------- extraction

    def coefficient(self, exponents: Mapping[str, int]):
        """Coefficient of the given monomial; out-of-bounds is an error, never 0."""
        mono = [0] * self.vars.nvars
        for name, e in exponents.items():
            mono[self.vars.index(name)] = e
        mono = tuple(mono)
        if not _in_bounds(self.spec, _metric(self.vars, mono)):
            raise OutOfBoundsError(
                f"monomial {dict(exponents)} lies outside the truncation spec {self.spec}"
            )
        return self.coeffs.get(mono, QQ(0))

    def grade_extract(self, name: str, degree: int) -> "TruncatedSeries":
        """Sub-series with the exact exponent ``degree`` in ``name``, factor removed."""
        i = self.vars.index(name)
        out = {}
        for mono, c in self.coeffs.items():
            if mono[i] == degree:
                m = list(mono)
                m[i] = 0
                out[tuple(m)] = c
        return TruncatedSeries(self.vars, self.spec, out, _trusted=True)

    def exponents_of(self, name: str) -> set[int]:
        i = self.vars.index(name)
        return {mono[i] for mono in self.coeffs}

    def truncate(self, spec: TruncationSpec) -> "TruncatedSeries":
        """Re-truncate to a (smaller) spec."""
        spec = self.spec.meet(spec)
        vars_ = self.vars
        out = {
            m: c for m, c in self.coeffs.items() if _in_bounds(spec, _metric(vars_, m))
        }
        return TruncatedSeries(vars_, spec, out, _trusted=True)

    def map_monomials(self, fn) -> "TruncatedSeries":
        """Apply fn(mono, coeff) -> (mono', coeff') and re-truncate; internal helper."""
        out: dict[tuple[int, ...], object] = {}
        for mono, c in self.coeffs.items():
            m2, c2 = fn(mono, c)
            if c2 == 0 or not _in_bounds(self.spec, _metric(self.vars, m2)):
                continue
            acc = out.get(m2)
            out[m2] = c2 if acc is None else acc + c2
        return TruncatedSeries(
            self.vars, self.spec, {m: c for m, c in out.items() if c != 0}, _trusted=True
        )

    # ------------------------------------------------------ presentation

    def sorted_monomials(self) -> list[tuple[int, ...]]:
        """Graded-lex order: weighted total degree first (weight(p_l) = l), then lex."""
        vars_ = self.vars
        p_start = vars_.p_start()

        def grade(mono):
            g = sum(abs(e) for e in mono[:p_start])
            for l in range(vars_.pcount):
                g += (l + 1) * mono[p_start + l]
            return g

        return sorted(self.coeffs, key=lambda m: (grade(m), m))

    def monomial_str(self, mono: tuple[int, ...]) -> str:
        parts = []
        for name, e in zip(self.vars.names, mono):
            if e == 1:
                parts.append(name)
            elif e != 0:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def to_text(self) -> str:
        """Canonical text form: graded-lex monomials, rational coefficients."""
        if not self.coeffs:
            return "0"
        terms = []
        for mono in self.sorted_monomials():
            c = self.coeffs[mono]
            ms = self.monomial_str(mono)
            cs = qq_str(c)
            if ms == "1":
                terms.append(cs)
            elif cs == "1":
                terms.append(ms)
            elif cs == "-1":
                terms.append(f"-{ms}")
            else:
                terms.append(f"{cs}*{ms}")
        return " + ".join(terms)

    def __repr__(self):
        text = self.to_text()
        if len(text) > 120:
            text = text[:117] + "..."
        return f"<TruncatedSeries {text}>"


def _has_positive_bounded_order(series: TruncatedSeries) -> bool:
    """True if every monomial has positive degree in a direction bounded above."""
    spec, vars_ = series.spec, series.vars
    if series.is_zero():
        return True
    for mono in series.coeffs:
        xtot, u, _z, hb, pw = _metric(vars_, mono)
        ok = False
        if spec.u_max is not None and u >= 1:
            ok = True
        if spec.x_total_max is not None and xtot >= 1:
            ok = True
        if spec.p_weight_max is not None and pw >= 1:
            ok = True
        if spec.hbar_window is not None and hb >= 1:
            ok = True
        if not ok:
            return False
    return True


def _invert_term(series: TruncatedSeries) -> TruncatedSeries:
    """Inverse of a single-term series (negate exponents, invert coefficient)."""
    if len(series.coeffs) != 1:
        raise SeriesError(
            "negative exponents only substitutable by a single invertible term"
        )
    (mono, c), = series.coeffs.items()
    inv = tuple(-e for e in mono)
    if not _in_bounds(series.spec, _metric(series.vars, inv)):
        raise OutOfBoundsError(f"inverse monomial {inv} falls outside the spec")
    return TruncatedSeries(series.vars, series.spec, {inv: QQ(1) / QQ(c)}, _trusted=True)
