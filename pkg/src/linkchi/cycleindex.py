"""Cycle index sums: classical species, colored tensor powers, dihedral
induced characters, hairy-graph supercharacters, and the positive-arity
modular-envelope supercharacters.

A cycle index sum encodes a (virtual, graded) symmetric-sequence
representation as a series in power-sum variables p_1, p_2, ...:
``Z_V = sum_k (1/k!) sum_{sigma in Sigma_k} tr(sigma) prod_l p_l^{j_l(sigma)}``
with ``j_l`` the number of l-cycles.  Weight(p_l) = l grades by arity.
Specializing ``p_1 <- x, p_(l>=2) <- 0`` yields the exponential
generating function of (graded) dimensions; substituting the colored
power sums of :func:`color_power_sum` computes hom spaces out of a
colored tensor sequence.  Supercharacters are characters of the
alternating sum over homological degree, i.e. the z = -1 specialization.
"""

from __future__ import annotations

from .genfun import LinkConfig
from .rationals import QQ, divisors, mobius, totient
from .series import (
    SeriesError,
    TruncatedSeries,
    TruncationSpec,
    VariableSet,
)
from .special import f_poly, s_poly

__all__ = [
    "CycleIndexSum",
    "z_com",
    "z_lie_cyclic",
    "z_colors",
    "specialize_colors",
    "z_tree_homology",
    "z_hedgehog_homology",
    "z_graph_supercharacter",
    "mod_envelope_supercharacter",
    "mod_envelope_supercharacter_direct",
    "feynman_regrade",
    "dihedral_permutation",
    "hedgehog_symmetry_sign",
    "induced_cycle_index",
]

CycleIndexSum = TruncatedSeries


def _p_vars(weight_max: int, *, has_u=False, has_z=False, has_hbar=False, hodge=0):
    return VariableSet(
        hodge_count=hodge,
        has_u=has_u,
        has_z=has_z,
        has_hbar=has_hbar,
        pcount=weight_max,
    )


def _p_term(vars_, spec, l: int, coeff=1, **extra) -> TruncatedSeries:
    expo = {f"p{l}": 1}
    expo.update(extra)
    return TruncatedSeries.term(vars_, spec, expo, coeff)


def z_com(weight_max: int) -> CycleIndexSum:
    """Cycle index sum of the one-dimensional trivial representations:
    exp(sum_l p_l / l), truncated at weight W."""
    if weight_max < 0:
        raise ValueError("weight_max must be >= 0")
    vars_ = _p_vars(weight_max)
    spec = TruncationSpec(p_weight_max=weight_max)
    arg = TruncatedSeries.zero(vars_, spec)
    for l in range(1, weight_max + 1):
        arg = arg + _p_term(vars_, spec, l, QQ(1, l))
    return arg.exp()


def _log_one_minus_p(vars_, spec, l: int, weight_max: int, sign: int = 1):
    """log(1 - sign * p_l) expanded to the weight bound."""
    out = {}
    nv = vars_.nvars
    idx = vars_.index(f"p{l}")
    for k in range(1, weight_max // l + 1):
        mono = [0] * nv
        mono[idx] = k
        out[tuple(mono)] = QQ(-(sign ** k), k)
    return TruncatedSeries(vars_, spec, out)


def z_lie_cyclic(weight_max: int) -> CycleIndexSum:
    """Cycle index sum of the cyclic Lie sequence Lie((n)), n >= 1:
    (1 - p_1) sum_l mu(l)/l log(1 - p_l) + p_1.

    The arity-one term is compensated to zero; dimensions come out as
    dim Lie((k)) = (k-2)! for k >= 2, checked via the p_1 <- x EGF.
    """
    if weight_max < 1:
        raise ValueError("weight_max must be >= 1")
    vars_ = _p_vars(weight_max)
    spec = TruncationSpec(p_weight_max=weight_max)
    logs = TruncatedSeries.zero(vars_, spec)
    for l in range(1, weight_max + 1):
        ml = mobius(l)
        if ml:
            logs = logs + _log_one_minus_p(vars_, spec, l, weight_max).scaled(QQ(ml, l))
    p1 = _p_term(vars_, spec, 1)
    one = TruncatedSeries.one(vars_, spec)
    return (one - p1) * logs + p1


def z_colors(cfg: LinkConfig, weight_max: int) -> CycleIndexSum:
    """Cycle index sum of the colored tensor sequence V^(tensor bullet):
    exp(sum_l alpha_l(z, x) p_l / l) with
    alpha_l = sum_i (-1)^(m_i (l-1)) x_i^l z^(m_i l).

    The sign appears because an l-cycle acts on the l-th tensor power of
    an odd-degree line by (-1)^(l-1); x_i carries the i-th Hodge grading
    and z the homological degree m_i per tensor factor.
    """
    m_values, _ = cfg.require_values()
    if weight_max < 0:
        raise ValueError("weight_max must be >= 0")
    vars_ = _p_vars(weight_max, has_z=True, hodge=cfg.r)
    spec = TruncationSpec(
        p_weight_max=weight_max,
        x_total_max=weight_max,
        z_window=(0, max(m_values) * weight_max),
    )
    arg = TruncatedSeries.zero(vars_, spec)
    for l in range(1, weight_max + 1):
        for i, m in enumerate(m_values):
            sign = -1 if (m * (l - 1)) % 2 else 1
            arg = arg + TruncatedSeries.term(
                vars_, spec, {f"p{l}": 1, f"x{i + 1}": l, "z": m * l}, QQ(sign, l)
            )
    return arg.exp()


def _specialization_targets(z: CycleIndexSum, cfg: LinkConfig, mode: str):
    carries_u = z.vars.has_u
    weight_max = z.spec.p_weight_max
    if weight_max is None:
        raise SeriesError("cycle index sum needs a p-weight bound")
    if mode == "euler":
        vars_ = VariableSet(hodge_count=cfg.r, has_u=carries_u)
        spec = TruncationSpec(
            u_max=z.spec.u_max if carries_u else None,
            x_total_max=weight_max,
            u_min=z.spec.u_min if carries_u else 0,
        )
    elif mode == "dims":
        m_values, d = cfg.require_values()
        span = (abs(d) + 2 + max(m_values)) * (weight_max + 3)
        vars_ = VariableSet(hodge_count=cfg.r, has_u=carries_u, has_z=True)
        spec = TruncationSpec(
            u_max=z.spec.u_max if carries_u else None,
            x_total_max=weight_max,
            z_window=(-span, span),
            u_min=z.spec.u_min if carries_u else 0,
        )
    else:
        raise ValueError(f"mode must be 'euler' or 'dims', got {mode!r}")
    return vars_, spec


def color_power_sum(
    cfg: LinkConfig, vars_: VariableSet, spec: TruncationSpec, l: int, mode: str
) -> TruncatedSeries:
    """The value substituted for p_l: alpha_l(1/z, x) in dimension mode,
    alpha_l(-1) = sum_i (-1)^(m_i) x_i^l in Euler mode."""
    coeffs: dict[tuple[int, ...], object] = {}
    if mode == "euler":
        for i in range(cfg.r):
            mono = [0] * vars_.nvars
            mono[i] = l
            key = tuple(mono)
            coeffs[key] = coeffs.get(key, 0) + (-cfg.eps(i))
    else:
        m_values, _ = cfg.require_values()
        iz = vars_.index("z")
        for i, m in enumerate(m_values):
            mono = [0] * vars_.nvars
            mono[i] = l
            mono[iz] = -m * l
            sign = -1 if (m * (l - 1)) % 2 else 1
            key = tuple(mono)
            coeffs[key] = coeffs.get(key, 0) + sign
    return TruncatedSeries(vars_, spec, coeffs)


def specialize_colors(
    z: CycleIndexSum, cfg: LinkConfig, mode: str = "euler"
) -> TruncatedSeries:
    """Substitute the colored power sums for every p_l.

    Euler mode computes the generating function of Euler characteristics
    of hom(V^(tensor), -) (and sends any carried z to -1); dimension
    mode keeps the z-grading and needs integer dimensions in ``cfg``.
    """
    vars_, spec = _specialization_targets(z, cfg, mode)
    weight_max = z.spec.p_weight_max
    assignments = {
        f"p{l}": color_power_sum(cfg, vars_, spec, l, mode)
        for l in range(1, weight_max + 1)
    }
    if z.vars.has_z:
        if mode == "euler":
            assignments["z"] = TruncatedSeries.constant(vars_, spec, -1)
        else:
            assignments["z"] = TruncatedSeries.term(vars_, spec, {"z": 1})
    return z.substitute(assignments)


def z_tree_homology(d: int, weight_max: int) -> CycleIndexSum:
    """Cycle index sum of the homology of the genus-zero labeled hairy
    graph complexes (complexes of trees) in ambient dimension d.

    Tree-level homology is the cyclic Lie sequence placed in degree
    k(d-2) - d + 3 and complexity k - 1, realized here as
    ``z^-(d-3) u^-1 * Z_cyclic_lie(p_l <- (-1)^((l-1)d) (z^(d-2) u)^l p_l)``.
    """
    if weight_max < 1:
        raise ValueError("weight_max must be >= 1")
    vars_ = _p_vars(weight_max, has_u=True, has_z=True)
    span = (abs(d) + 2) * (weight_max + 3)
    wspec = TruncationSpec(
        p_weight_max=weight_max,
        u_max=weight_max,
        z_window=(-span, span),
        u_min=-1,
    )
    lie = z_lie_cyclic(weight_max)
    assignments = {
        f"p{l}": TruncatedSeries.term(
            vars_,
            wspec,
            {f"p{l}": 1, "z": (d - 2) * l, "u": l},
            -1 if ((l - 1) * d) % 2 else 1,
        )
        for l in range(1, weight_max + 1)
    }
    shifted = lie.substitute(assignments)
    pref = TruncatedSeries.term(vars_, wspec, {"z": -(d - 3), "u": -1})
    out = pref * shifted
    if not out.grade_extract("u", -1).is_zero():
        raise SeriesError("tree-level cycle index left a u^(-1) term")
    return out.truncate(
        TruncationSpec(
            p_weight_max=weight_max, u_max=weight_max, z_window=(-span, span)
        )
    )


def _z_dihedral_induced(weight_max: int, vars_, spec, *, d_parity: int | None):
    """Induced dihedral cycle index, summed over all n >= 1.

    With ``d_parity=None`` this is the trivial character:
    ``-1/2 sum_l phi(l)/l log(1 - p_l) + (p_1^2 + p_2 + 2 p_1)/(4 (1 - p_2))``.
    Otherwise the hedgehog orientation character for ambient parity d:
    ``-1/2 sum_l phi(l)/l log(1 - (-1)^(d(l-1)) p_l)
    + (-1)^(d+1) (p_1^2 + (-1)^d p_2 - 2 p_1) / (4 (1 - (-1)^d p_2))``.
    """
    out = TruncatedSeries.zero(vars_, spec)
    for l in range(1, weight_max + 1):
        sign = 1
        if d_parity is not None and (d_parity * (l - 1)) % 2:
            sign = -1
        out = out + _log_one_minus_p(vars_, spec, l, weight_max, sign).scaled(
            QQ(-totient(l), 2 * l)
        )
    p1 = _p_term(vars_, spec, 1)
    p2 = _p_term(vars_, spec, 2) if weight_max >= 2 else TruncatedSeries.zero(vars_, spec)
    one = TruncatedSeries.one(vars_, spec)
    if d_parity is None:
        numer = p1 * p1 + p2 + p1.scaled(2)
        denom = one - p2
        pref = QQ(1, 4)
    else:
        sd = -1 if d_parity % 2 else 1
        numer = p1 * p1 + p2.scaled(sd) - p1.scaled(2)
        denom = one - p2.scaled(sd)
        pref = QQ(-sd, 4)
    return out + (numer * denom.inverse()).scaled(pref)


def z_hedgehog_homology(d: int, weight_max: int) -> CycleIndexSum:
    """Cycle index sum of the homology of the genus-one labeled hairy
    graph complexes (spanned by hedgehogs) in ambient dimension d.

    The n-hair hedgehog sits in degree n(d-2) and complexity n; the
    symmetric group action is induced from the dihedral orientation
    character, so this is the induced dihedral cycle index with
    ``p_l <- z^((d-2)l) u^l p_l``.
    """
    if weight_max < 1:
        raise ValueError("weight_max must be >= 1")
    vars_ = _p_vars(weight_max, has_u=True, has_z=True)
    span = (abs(d) + 2) * (weight_max + 3)
    spec = TruncationSpec(
        p_weight_max=weight_max, u_max=weight_max, z_window=(-span, span)
    )
    base = _z_dihedral_induced(weight_max, vars_, spec, d_parity=d % 2)
    assignments = {
        f"p{l}": TruncatedSeries.term(vars_, spec, {f"p{l}": 1, "z": (d - 2) * l, "u": l})
        for l in range(1, weight_max + 1)
    }
    return base.substitute(assignments)


def _mu_divisor_p_sum(vars_, spec, l: int, k: int, weight_max: int, hbar_shift=False):
    """(1/l) sum_{a | l} mu(l/a) p_{ak}, dropping indices beyond the weight
    bound; with ``hbar_shift`` each p_{ak} carries hbar^(-ak)."""
    coeffs = {}
    nv = vars_.nvars
    ih = vars_.index("hbar") if hbar_shift else None
    for a in divisors(l):
        m = mobius(l // a)
        if m == 0 or a * k > weight_max:
            continue
        mono = [0] * nv
        mono[vars_.index(f"p{a * k}")] = 1
        if hbar_shift:
            mono[ih] = -(a * k)
        coeffs[tuple(mono)] = QQ(m, l)
    return TruncatedSeries(vars_, spec, coeffs)


def _f_poly_in(vars_, spec, l: int, k: int, var: str) -> TruncatedSeries:
    coeffs = {}
    iu = vars_.index(var)
    nv = vars_.nvars
    for power, c in enumerate(f_poly(l).coeffs):
        if c == 0:
            continue
        mono = [0] * nv
        mono[iu] = power * k
        coeffs[tuple(mono)] = c
    return TruncatedSeries(vars_, spec, coeffs)


def _supercharacter_sums(
    vars_,
    spec,
    weight_max: int,
    t_max: int,
    sigma_d: int,
    var: str,
    *,
    arg_sign: int,
    first_sign: int,
    second_sign: int,
    hbar_shift: bool,
) -> TruncatedSeries:
    """Shared double/triple sum engine for the graph supercharacters.

    first sum:  first_sign * sum_{kl j} mu(k)/(kj) S_j(arg_sign * A_{l,k})
                * (sigma_d l var^{kl} / F_l(var^k))^j
    second sum: second_sign * sum_{kl} mu(k)/(kl) (l A_{l,k}) log F_l(var^k)
    with A_{l,k} = (1/l) sum_{a|l} mu(l/a) p_{ak} (optionally / hbar^{ak}).
    """
    total = TruncatedSeries.zero(vars_, spec)
    base = TruncatedSeries.term(vars_, spec, {var: 1})
    for k in range(1, t_max + 1):
        mk = mobius(k)
        if mk == 0:
            continue
        for l in range(1, t_max // k + 1):
            arg = _mu_divisor_p_sum(vars_, spec, l, k, weight_max, hbar_shift)
            if arg.is_zero():
                continue
            arg = arg.scaled(arg_sign)
            fl = _f_poly_in(vars_, spec, l, k, var)
            u_arg = (base ** (k * l)).scaled(sigma_d * l) * fl.inverse()
            u_pow = TruncatedSeries.one(vars_, spec)
            arg_pows: list = [u_pow]
            for j in range(1, t_max // (k * l) + 1):
                u_pow = u_pow * u_arg
                if u_pow.is_zero():
                    break
                sj = s_poly(j).at_series(arg, arg_pows)
                if sj.is_zero():
                    continue
                total = total + (sj * u_pow).scaled(QQ(first_sign * mk, k * j))
    for k in range(1, 2 * t_max + 1):
        mk = mobius(k)
        if mk == 0:
            continue
        for l in range(2, 2 * t_max // k + 1):
            log_fl = _f_poly_in(vars_, spec, l, k, var).log()
            if log_fl.is_zero():
                continue
            arg = _mu_divisor_p_sum(vars_, spec, l, k, weight_max, hbar_shift)
            if arg.is_zero():
                continue
            total = total + (arg * log_fl).scaled(QQ(second_sign * mk, k))
    return total


def z_graph_supercharacter(d_parity, weight_max: int, t_max: int) -> CycleIndexSum:
    """Supercharacter cycle index of the symmetric group action on the
    labeled hairy graph complexes, graded by complexity u.

    ``sum_{k,l,j} mu(k)/(kj) S_j(-A_{l,k}) (sigma_d l u^{kl}/F_l(u^k))^j
    + sum_{k,l} mu(k)/(kl) (l A_{l,k}) log F_l(u^k)`` with
    ``A_{l,k} = (1/l) sum_{a|l} mu(l/a) p_{ak}``.  Substituting the Euler
    power sums recovers the homotopy generating function F^pi.
    """
    d_parity = 1 if str(d_parity) in ("1", "odd") else 0
    if weight_max < 1 or t_max < 1:
        raise ValueError("weight_max and t_max must be >= 1")
    sigma_d = 1 if d_parity else -1
    vars_ = _p_vars(weight_max, has_u=True)
    spec = TruncationSpec(p_weight_max=weight_max, u_max=t_max)
    return _supercharacter_sums(
        vars_,
        spec,
        weight_max,
        t_max,
        sigma_d,
        "u",
        arg_sign=-1,
        first_sign=1,
        second_sign=1,
        hbar_shift=False,
    )


def _genus_regrade(z: CycleIndexSum, genus_max: int, p_sign: int, overall: int):
    """u <- hbar, p_l <- p_sign * p_l / hbar^l, times overall * hbar.

    Monomial u^t with p-weight w maps to hbar^(t - w + 1); any negative
    final exponent is a hard error (the cancellation this encodes is the
    point of the construction, not a truncation artifact).
    """
    vars_ = _p_vars(z.vars.pcount, has_hbar=True)
    spec = TruncationSpec(p_weight_max=z.spec.p_weight_max, hbar_window=(0, genus_max))
    p_start_src = z.vars.p_start()
    iu = z.vars.index("u")
    ih = vars_.index("hbar")
    out: dict[tuple[int, ...], object] = {}
    for mono, c in z.coeffs.items():
        t = mono[iu]
        p_part = mono[p_start_src:]
        w = sum((l + 1) * e for l, e in enumerate(p_part))
        n_p = sum(p_part)
        g = t - w + 1
        sign = overall * (p_sign ** n_p)
        m2 = [0] * vars_.nvars
        m2[ih] = g
        m2[ih + 1 :] = list(p_part)
        key = tuple(m2)
        prev = out.get(key, QQ(0))
        now = prev + sign * c
        if now == 0:
            out.pop(key, None)
        else:
            out[key] = now
    for mono, c in out.items():
        if mono[ih] < 0:
            raise SeriesError(
                f"negative genus hbar^{mono[ih]} survived in the modular "
                f"envelope supercharacter at {mono}"
            )
    return TruncatedSeries(vars_, spec, out)


def mod_envelope_supercharacter(
    twist: str, weight_max: int, genus_max: int
) -> CycleIndexSum:
    """Positive-arity supercharacter of the modular envelope of the
    homotopy Lie cyclic operad ('plain'), or of its Det-twist ('det'),
    graded by genus hbar and arity weight.

    plain: ``hbar * Z_odd(u <- hbar, p_l <- -p_l / hbar^l)``;
    det:  ``-hbar * Z_even(u <- hbar, p_l <- +p_l / hbar^l)``,
    where Z_odd/Z_even are the labeled graph supercharacters for odd and
    even ambient parity.  Arity zero is excluded by construction; the
    hbar-Laurent intermediates must cancel to nonnegative genus.
    """
    twist = twist.lower()
    if twist not in ("plain", "det"):
        raise ValueError(f"twist must be 'plain' or 'det', got {twist!r}")
    if weight_max < 1 or genus_max < 0:
        raise ValueError("weight_max >= 1 and genus_max >= 0 required")
    t_max = genus_max + weight_max - 1
    if twist == "plain":
        z = z_graph_supercharacter("odd", weight_max, max(t_max, 1))
        return _genus_regrade(z, genus_max, p_sign=-1, overall=1)
    z = z_graph_supercharacter("even", weight_max, max(t_max, 1))
    return _genus_regrade(z, genus_max, p_sign=1, overall=-1)


def mod_envelope_supercharacter_direct(
    twist: str, weight_max: int, genus_max: int
) -> CycleIndexSum:
    """Second route to :func:`mod_envelope_supercharacter`: evaluate the
    hbar-Laurent sums directly (S_j at p_{ak}/hbar^{ak} arguments) and
    multiply by hbar at the end.  Used as a cross-check oracle."""
    twist = twist.lower()
    if twist not in ("plain", "det"):
        raise ValueError(f"twist must be 'plain' or 'det', got {twist!r}")
    t_max = genus_max + weight_max - 1
    vars_ = _p_vars(weight_max, has_hbar=True)
    # Every monomial here satisfies hbar-exp >= -(p-weight) >= -W, and a
    # monomial with hbar-exp e and p-weight w can still reach final genus
    # <= G as long as e - (W - w) <= G - 1, so (-W, G + W - 1) loses nothing.
    spec = TruncationSpec(
        p_weight_max=weight_max,
        hbar_window=(-weight_max, genus_max + weight_max - 1),
    )
    if twist == "plain":
        body = _supercharacter_sums(
            vars_, spec, weight_max, max(t_max, 1), 1, "hbar",
            arg_sign=1, first_sign=1, second_sign=-1, hbar_shift=True,
        )
    else:
        body = _supercharacter_sums(
            vars_, spec, weight_max, max(t_max, 1), -1, "hbar",
            arg_sign=-1, first_sign=-1, second_sign=-1, hbar_shift=True,
        )
    shifted = body.map_monomials(
        lambda m, c: (
            tuple(e + 1 if i == vars_.index("hbar") else e for i, e in enumerate(m)),
            c,
        )
    )
    for mono in shifted.coeffs:
        if mono[vars_.index("hbar")] < 0:
            raise SeriesError("negative genus survived in the direct route")
    return shifted.truncate(
        TruncationSpec(p_weight_max=weight_max, hbar_window=(0, genus_max))
    )


def feynman_regrade(z: CycleIndexSum) -> CycleIndexSum:
    """-Z with every p_l <- -p_l: passes between the modular envelope
    supercharacters and those of the Feynman transforms of the
    commutative modular operad.  An involution."""
    p_start = z.vars.p_start()
    out = {}
    for mono, c in z.coeffs.items():
        n_p = sum(mono[p_start:])
        out[mono] = -c if n_p % 2 == 0 else c
    return TruncatedSeries(z.vars, z.spec, out, _trusted=True)


# ------------------------------------------------------------------ dihedral


def dihedral_permutation(n: int, element: tuple[str, int]) -> tuple[int, ...]:
    """Permutation of n cyclically arranged points under a dihedral element.

    ``('r', k)`` rotates by 2 pi k / n (i -> i + k); ``('s', j)`` reflects
    about the axis through the point j/2 (i -> j - i).  Returned as the
    image tuple of 0..n-1.
    """
    kind, k = element
    if kind == "r":
        return tuple((i + k) % n for i in range(n))
    if kind == "s":
        return tuple((k - i) % n for i in range(n))
    raise ValueError(f"unknown dihedral element {element!r}")


def _perm_parity(perm) -> int:
    seen = [False] * len(perm)
    parity = 0
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        parity ^= (length - 1) % 2
    return parity


def _cycle_type(perm) -> dict[int, int]:
    seen = [False] * len(perm)
    out: dict[int, int] = {}
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        out[length] = out.get(length, 0) + 1
    return out


def hedgehog_symmetry_sign(n: int, d: int, element: tuple[str, int]) -> int:
    """Sign by which a dihedral symmetry acts on the standard n-hedgehog
    orientation: sign(perm)^d * or(element)^(n + d + 1), where 'or' is -1
    exactly on reflections."""
    perm = dihedral_permutation(n, element)
    sign = -1 if (_perm_parity(perm) * d) % 2 else 1
    if element[0] == "s" and (n + d + 1) % 2:
        sign = -sign
    return sign


def induced_cycle_index(pairs, weight_max: int) -> CycleIndexSum:
    """Cycle index of a representation induced along a homomorphism
    H -> Sigma_n: (1/|H|) sum_h chi(h) prod_l p_l^(j_l(image of h)).

    ``pairs`` lists (image permutation, trace) for *every* element of H;
    elements with equal images must each appear (the homomorphism need
    not be injective, e.g. dihedral groups at n <= 2).
    """
    vars_ = _p_vars(weight_max)
    spec = TruncationSpec(p_weight_max=weight_max)
    pairs = list(pairs)
    if not pairs:
        raise ValueError("need at least one (permutation, trace) pair")
    total = TruncatedSeries.zero(vars_, spec)
    for perm, trace in pairs:
        expo = {}
        for l, count in _cycle_type(perm).items():
            expo[f"p{l}"] = count
        total = total + TruncatedSeries.term(vars_, spec, expo, trace)
    return total.scaled(QQ(1, len(pairs)))
