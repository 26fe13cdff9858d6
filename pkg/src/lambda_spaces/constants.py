"""Geometric constants: exact two-dimensional closed forms, grid+refine
numeric lower bounds, the psi-ratio route, and the extremal sequence
constructions witnessing the James-type constants of the full spaces."""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DomainError, InvalidWeightsError
from .norms import Bracket, pnorm, supnorm, tail_sum_bracket
from .weights import FiniteSequence

_EPS = np.finfo(np.float64).eps


@dataclass(frozen=True)
class TwoDimPoint:
    u: float
    v: float

    def __iter__(self):
        yield self.u
        yield self.v


@dataclass(frozen=True)
class OptimizerConfig:
    grid: int = 512
    refine: int = 64
    seed: int = 0


@dataclass(frozen=True)
class ConstantEstimate:
    value: float
    certify: Bracket
    method: str
    evaluations: int = 1
    seed: int = 0
    flags: tuple = ()
    witness: tuple = None


def _check_weights(l0, l1):
    if not (0 < l0 < l1):
        raise InvalidWeightsError("need 0 < lambda0 < lambda1")


def norm2d(pt, l0, l1, p):
    """Norm of the two-dimensional space:
    (|u|^p + ((l0|u| + (l1-l0)|v|)/l1)^p)^(1/p), sup-variant for p = inf."""
    _check_weights(l0, l1)
    u, v = pt
    w = (l0 * abs(u) + (l1 - l0) * abs(v)) / l1
    if p == math.inf:
        return max(abs(u), w)
    if p < 1:
        raise DomainError("p must be >= 1")
    return (abs(u) ** p + w ** p) ** (1.0 / p)


def cnj2_exact(l0, l1):
    """Closed-form von Neumann-Jordan constant of the 2-D space at p = 2."""
    _check_weights(l0, l1)
    v = 1.0 + l0 / math.hypot(l0, l1)
    pad = 4.0 * _EPS * v
    return ConstantEstimate(v, Bracket(v - pad, v + pad), "closed_form")


def james2_exact(l0, l1):
    """Closed-form James constant of the 2-D space at p = 2."""
    _check_weights(l0, l1)
    v = math.sqrt(2.0 + 2.0 * l0 / math.hypot(l0, l1))
    pad = 4.0 * _EPS * v
    return ConstantEstimate(v, Bracket(v - pad, v + pad), "closed_form")


# ---------------------------------------------------------------------------
# numeric sphere search

def _u_max(l0, l1, p):
    return l1 / (l0 ** p + l1 ** p) ** (1.0 / p)


def _v_of_u(u, l0, l1, p):
    """The v >= 0 with ||(u, v)|| = 1; the norm equation is affine in v
    inside the p-th power, so this is exact algebra."""
    return max((l1 * (max(1.0 - u ** p, 0.0)) ** (1.0 / p) - l0 * u)
               / (l1 - l0), 0.0)


def _pair_objective(u1, u2, cls, l0, l1, p, objective):
    v1 = _v_of_u(u1, l0, l1, p)
    v2 = _v_of_u(u2, l0, l1, p)
    s = -1.0 if cls else 1.0
    a = norm2d((u1 + u2, v1 + s * v2), l0, l1, p)
    b = norm2d((u1 - u2, v1 - s * v2), l0, l1, p)
    if objective == 0:
        return (a * a + b * b) / 4.0
    return min(a, b)


_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_max(f, a, b, iters=28):
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    return (c, fc) if fc > fd else (d, fd)


def _sphere_search(l0, l1, p, cfg, objective):
    _check_weights(l0, l1)
    if p <= 1:
        raise DomainError("p must exceed 1")
    cfg = cfg or OptimizerConfig()
    umax = _u_max(l0, l1, p)
    us = np.linspace(0.0, umax, cfg.grid)
    vs = np.array([_v_of_u(u, l0, l1, p) for u in us])
    best, bi, bj, bcls = _kernels.pair_sweep(us, vs, l0, l1, float(p),
                                             objective)
    evals = 2 * cfg.grid * cfg.grid
    cur = [float(us[bi]), float(us[bj])]
    h = umax / max(cfg.grid - 1, 1)
    grid_gap = h
    for _ in range(cfg.refine):
        for coord in (0, 1):
            def f(t, coord=coord):
                args = list(cur)
                args[coord] = t
                return _pair_objective(args[0], args[1], bcls, l0, l1, p,
                                       objective)
            a = max(0.0, cur[coord] - h)
            b = min(umax, cur[coord] + h)
            t, fv = _golden_max(f, a, b)
            evals += 30
            if fv > best:
                best = fv
                cur[coord] = t
        h *= 0.6
    x = (cur[0], _v_of_u(cur[0], l0, l1, p))
    y = (cur[1], (-1.0 if bcls else 1.0) * _v_of_u(cur[1], l0, l1, p))
    return ConstantEstimate(
        best, Bracket(best, best + grid_gap), "grid_refine",
        evaluations=evals, seed=cfg.seed, witness=(x, y))


def cnj2_numeric(l0, l1, p, cfg=None):
    """Certified lower bound for the von Neumann-Jordan constant of the 2-D
    space, by deterministic grid sweep plus local golden-section refinement."""
    return _sphere_search(l0, l1, p, cfg, objective=0)


def james2_numeric(l0, l1, p, cfg=None):
    """Certified lower bound for the James constant of the 2-D space."""
    return _sphere_search(l0, l1, p, cfg, objective=1)


# ---------------------------------------------------------------------------
# psi route

def psi(t, l0, l1, p):
    """The absolute normalized norm profile of the 2-D space."""
    _check_weights(l0, l1)
    if not 0.0 <= t <= 1.0:
        raise DomainError("t must lie in [0, 1]")
    if p <= 1:
        raise DomainError("p must exceed 1")
    denom = l0 ** p + l1 ** p
    return ((l1 ** p * (1.0 - t) ** p) / denom
            + (l0 * (1.0 - t) / denom ** (1.0 / p) + t) ** p) ** (1.0 / p)


def psi2(t):
    if not 0.0 <= t <= 1.0:
        raise DomainError("t must lie in [0, 1]")
    return math.sqrt((1.0 - t) ** 2 + t ** 2)


def cnj_from_psi(l0, l1, p, grid_cfg=None):
    """Von Neumann-Jordan constant as the squared sup of psi/psi2.

    The closed form is established for 1 < p <= 2; outside that range the
    number is still computed but flagged ``out_of_hypothesis``.
    """
    _check_weights(l0, l1)
    cfg = grid_cfg or OptimizerConfig()
    flags = () if 1.0 < p <= 2.0 else ("out_of_hypothesis",)

    def ratio(t):
        return psi(t, l0, l1, p) / psi2(t)

    ts = np.linspace(0.0, 1.0, cfg.grid)
    rs = np.array([ratio(t) for t in ts])
    i = int(np.argmax(rs))
    a = ts[max(i - 1, 0)]
    b = ts[min(i + 1, cfg.grid - 1)]
    t_best, r_best = _golden_max(ratio, a, b, iters=max(cfg.refine, 28))
    r_best = max(r_best, float(rs[i]))
    value = r_best ** 2
    sq = rs ** 2
    gap = max(abs(sq[min(i + 1, cfg.grid - 1)] - sq[i]),
              abs(sq[i] - sq[max(i - 1, 0)]), 4.0 * _EPS * value)
    return ConstantEstimate(value, Bracket(value, value + gap), "grid_refine",
                            evaluations=cfg.grid + 2 * max(cfg.refine, 28),
                            seed=cfg.seed, flags=flags,
                            witness=((t_best, r_best),))


# ---------------------------------------------------------------------------
# extremal sequence constructions

def _rel_tw(w, m, p, rel):
    coarse = tail_sum_bracket(w, m, p, 1e-6)
    return max(1e-15, rel * max(coarse.lo, 1e-300))


def james_pair_construction(w, p, m):
    """The two-basis-vector witness pair for the James constant.

    Returns (lower_bound, direct): the analytic lower bound
    1 + (delta_m/delta_{m+1}) * ||e_{m+1}||/||e_m|| for
    min(||x+y||, ||x-y||) with x = e_m/||e_m||, y = e_{m+1}/||e_{m+1}||,
    and a direct certified bracket of that min.
    """
    if p <= 1:
        raise DomainError("p must exceed 1")
    tm = tail_sum_bracket(w, m, p, _rel_tw(w, m, p, 1e-12))
    tm1 = tail_sum_bracket(w, m + 1, p, _rel_tw(w, m + 1, p, 1e-12))
    lower = 1.0 + (tm1.lo / tm.hi) ** (1.0 / p)
    dm, dm1 = w.delta_at(m), w.delta_at(m + 1)
    a = Bracket(1.0 / (dm * tm.hi ** (1.0 / p)),
                1.0 / (dm * tm.lo ** (1.0 / p)))
    b = Bracket(1.0 / (dm1 * tm1.hi ** (1.0 / p)),
                1.0 / (dm1 * tm1.lo ** (1.0 / p)))
    # ||x+y|| = ||x-y|| here (disjoint supports, absolute transform), and the
    # norm is monotone in each coefficient.
    lo = pnorm(FiniteSequence([m, m + 1], [a.lo, b.lo]), w, p, 1e-11).lo
    hi = pnorm(FiniteSequence([m, m + 1], [a.hi, b.hi]), w, p, 1e-11).hi
    return lower, Bracket(lo, hi)


def jns_construction(w, p, n, m):
    """The n-basis-vector witness for the n-th strong James constant.

    Returns (lower_bound, direct) for ||sum_j e_{m+j}/||e_{m+j}|| ||_p.
    """
    if n < 2:
        raise DomainError("need n >= 2")
    if p <= 1:
        raise DomainError("p must exceed 1")
    tails = [tail_sum_bracket(w, m + j, p, _rel_tw(w, m + j, p, 1e-12))
             for j in range(n)]
    lower = n * (tails[-1].lo / tails[0].hi) ** (1.0 / p)
    coeffs_lo, coeffs_hi, idxs = [], [], []
    for j in range(n):
        d = w.delta_at(m + j)
        idxs.append(m + j)
        coeffs_lo.append(1.0 / (d * tails[j].hi ** (1.0 / p)))
        coeffs_hi.append(1.0 / (d * tails[j].lo ** (1.0 / p)))
    lo = pnorm(FiniteSequence(idxs, coeffs_lo), w, p, 1e-11).lo
    hi = pnorm(FiniteSequence(idxs, coeffs_hi), w, p, 1e-11).hi
    return lower, Bracket(lo, hi)


def james_inf_pair(w, m):
    """Exact sup-norm James witness value 1 + lambda_m/lambda_{m+1}.

    The pair x = (lambda_m/delta_m) e_m, y = (lambda_{m+1}/delta_{m+1})
    e_{m+1} is unit in the sup-norm and ||x +- y|| equals the returned
    value; all three facts are verified via supnorm before returning.
    """
    lm, lm1 = w.lambda_at(m), w.lambda_at(m + 1)
    val = 1.0 + lm / lm1
    x = FiniteSequence.basis(m, lm / w.delta_at(m))
    y = FiniteSequence.basis(m + 1, lm1 / w.delta_at(m + 1))
    slack = 64.0 * _EPS * max(val, 1.0)
    if abs(supnorm(x, w) - 1.0) > slack or abs(supnorm(y, w) - 1.0) > slack:
        raise DomainError("constructed pair is not unit in the sup-norm")
    if abs(supnorm(x + y, w) - val) > slack:
        raise DomainError("sup-norm cross-check failed")
    return val


def jns_inf(w, n, m):
    """Exact sup-norm n-vector value 1 + sum_{i<n-1} lambda_{m+i}/lambda_{m+n-1},
    cross-checked by supnorm on the explicit combination."""
    if n < 2:
        raise DomainError("need n >= 2")
    top = w.lambda_at(m + n - 1)
    val = 1.0 + sum(w.lambda_at(m + i) / top for i in range(n - 1))
    total = FiniteSequence.zero()
    slack = 64.0 * _EPS * max(val, 1.0) * n
    for j in range(n):
        xj = FiniteSequence.basis(m + j,
                                  w.lambda_at(m + j) / w.delta_at(m + j))
        if abs(supnorm(xj, w) - 1.0) > slack:
            raise DomainError("constructed vector is not unit in the sup-norm")
        total = total + xj
    if abs(supnorm(total, w) - val) > slack:
        raise DomainError("sup-norm cross-check failed")
    return val
