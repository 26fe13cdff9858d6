"""Certified evaluation of the p-norm, sup-norm, convex modular and
Luxemburg norm over a weight family.

All infinite series are reduced to an exact finite head plus an analytic
tail bracket: for n beyond the support, the transform equals S/lambda_n
with S the constant weighted sum, so tails reduce to sum lambda_n^(-p)
which is sandwiched by integral bounds (trapezoid below, midpoint above,
both valid because t -> lambda(t)^(-p) is positive, decreasing and convex
for the supported families).
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import (BracketingFailedError, DomainError, NoTailBoundError,
                     NonconvergentError)
from .weights import FiniteSequence, segments

_EPS = np.finfo(np.float64).eps
_M_CAP = 1 << 26


@dataclass(frozen=True)
class Bracket:
    """A certified interval [lo, hi] containing an exact real value."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise DomainError("bracket endpoints must be finite")
        if self.lo > self.hi:
            raise DomainError(f"bracket out of order: [{self.lo}, {self.hi}]")

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def mid(self):
        return 0.5 * (self.lo + self.hi)

    def contains(self, v):
        return self.lo <= v <= self.hi

    def scale(self, c):
        if c >= 0:
            return Bracket(self.lo * c, self.hi * c)
        return Bracket(self.hi * c, self.lo * c)

    def shift(self, c):
        return Bracket(self.lo + c, self.hi + c)


@dataclass(frozen=True)
class ExponentSeq:
    """Bounded exponent sequence p_n > 1: explicit prefix, then a constant."""

    prefix: tuple
    tail_value: float

    def __post_init__(self):
        if self.tail_value <= 1 or any(p <= 1 for p in self.prefix):
            raise DomainError("all exponents must exceed 1")

    @classmethod
    def constant(cls, p):
        return cls((), float(p))

    def at(self, n):
        if n < len(self.prefix):
            return float(self.prefix[n])
        return self.tail_value

    @property
    def p_sup(self):
        return float(max([*self.prefix, self.tail_value]))


@dataclass(frozen=True)
class ModularValue:
    bracket: Bracket
    truncation_index: int
    tail_bound_method: str


# ---------------------------------------------------------------------------
# tail machinery


def _known_values(w):
    """Explicitly stored lambda values (riesz/custom), else None."""
    return getattr(w, "_memo", None)


def _exact_partial(w, a, b, p):
    """sum_{n=a}^{b-1} lambda_n^(-p), exact up to rounding."""
    if b <= a:
        return 0.0
    model = w.tail_model()
    if model is not None and model[0] == "power":
        _, coeff, alpha, _ = model
        return coeff ** (-p) * _kernels.power_prefix_sum(a, b, p * alpha)
    vals = _known_values(w)
    total = 0.0
    if model is not None and model[0] == "affine":
        _, c0, c1, start = model
        if a < start:
            end = min(b, start)
            total += float(np.sum(vals[a:end] ** (-p)))
        if b > start:
            total += _kernels.affine_prefix_sum(max(a, start), b, c0, c1, p)
        return total
    # explicit values only
    if vals is None or b > vals.size:
        raise NoTailBoundError("weights not defined over the requested range")
    return float(np.sum(vals[a:b] ** (-p)))


def _power_tail(m, q, coeff_pow, target_width):
    """Bracket of coeff_pow * sum_{n>=m} (n+1)^(-q) for q > 1."""
    # width of the integral sandwich at cut M is about q*M^(-q-1)/8
    M = max(m + 1, int((q / (8.0 * max(target_width / coeff_pow, 1e-300)))
                       ** (1.0 / (q + 1.0))) + 1)
    M = min(M, _M_CAP)
    while True:
        prefix = _kernels.power_prefix_sum(m, M, q)
        integral = (M + 1.0) ** (1.0 - q) / (q - 1.0)
        lo = prefix + integral + 0.5 * (M + 1.0) ** (-q)
        hi = prefix + (M + 0.5) ** (1.0 - q) / (q - 1.0)
        if coeff_pow * (hi - lo) <= target_width or M >= _M_CAP:
            pad = 32.0 * _EPS * hi
            return Bracket(coeff_pow * (lo - pad), coeff_pow * (hi + pad)), M
        M = min(2 * M, _M_CAP)


def _affine_tail(m, c0, c1, p, target_width):
    """Bracket of sum_{n>=m} (c0 + c1*n)^(-p) for p > 1, c0 + c1*m > 0."""
    lam_target = (p * c1 / (8.0 * max(target_width, 1e-300))) ** (1.0 / (p + 1.0))
    M = max(m + 1, int((lam_target - c0) / c1) + 1)
    M = min(M, _M_CAP)
    while True:
        prefix = _kernels.affine_prefix_sum(m, M, c0, c1, p)
        integral = (c0 + c1 * M) ** (1.0 - p) / (c1 * (p - 1.0))
        lo = prefix + integral + 0.5 * (c0 + c1 * M) ** (-p)
        hi = prefix + (c0 + c1 * (M - 0.5)) ** (1.0 - p) / (c1 * (p - 1.0))
        if hi - lo <= target_width or M >= _M_CAP:
            pad = 32.0 * _EPS * hi
            return Bracket(lo - pad, hi + pad), M
        M = min(2 * M, _M_CAP)


def _tail_info(w, m, p, target_width):
    """Certified bracket of sum_{n>=m} lambda_n^(-p), plus cut index/method."""
    model = w.tail_model()
    if model is None:
        raise NoTailBoundError(
            "no analytic tail control for this weight family")
    if model[0] == "power":
        _, coeff, alpha, _ = model
        q = p * alpha
        if q <= 1.0:
            raise NonconvergentError(
                f"sum lambda_n^(-p) diverges (p*alpha = {q} <= 1)")
        br, M = _power_tail(m, q, coeff ** (-p), target_width)
        return br, M, "integral-sandwich(power)"
    if model[0] == "affine":
        _, c0, c1, start = model
        if p <= 1.0:
            raise NonconvergentError("sum lambda_n^(-p) diverges (p <= 1)")
        head = 0.0
        lo_from = m
        if m < start:
            head = _exact_partial(w, m, start, p)
            lo_from = start
        br, M = _affine_tail(lo_from, c0, c1, p, target_width)
        pad = 32.0 * _EPS * (head + br.hi)
        return (Bracket(head + br.lo - pad, head + br.hi + pad), M,
                "integral-sandwich(affine)")
    # lower_power: only a growth lower bound is known beyond the data
    _, c, alpha, start, known_end = model
    if start > known_end:
        raise NoTailBoundError(
            "tail bound starts beyond the provided weight values")
    q = p * alpha
    if q <= 1.0:
        raise NonconvergentError(
            f"tail bound cannot certify convergence (p*alpha = {q} <= 1)")
    head = _exact_partial(w, m, max(m, known_end), p)
    L = max(m, known_end)
    # remainder in [0, c^-p * sum_{n>=L} (n+1)^(-q)]
    rem, M = _power_tail(L, q, c ** (-p), target_width)
    pad = 32.0 * _EPS * (head + rem.hi)
    return Bracket(head - pad, head + rem.hi + pad), M, "lower-bound-only"


def tail_sum_bracket(w, m, p, target_width=1e-10):
    """Certified bracket for sum_{n>=m} lambda_n^(-p)."""
    if m < 0 or p <= 1 or target_width <= 0:
        raise DomainError("need m >= 0, p > 1, target_width > 0")
    return _tail_info(w, m, p, target_width)[0]


def _tail_rel(w, m, p, rel):
    """Tail bracket with relative width about ``rel``."""
    coarse, _, _ = _tail_info(w, m, p, 1e-6)
    tw = max(1e-15, rel * max(coarse.lo, 1e-300))
    return _tail_info(w, m, p, tw)


# ---------------------------------------------------------------------------
# norms and modular


def supnorm(x, w):
    """Exact sup-norm: the sup of Lx(n) is attained at a support index."""
    if x.is_zero:
        return 0.0
    starts, cums = segments(x, w)
    return max(float(c) / w.lambda_at(int(s)) for s, c in zip(starts, cums))


def pnorm(x, w, p, target_width=1e-10):
    """Certified bracket for the p-norm, width <= target_width for families
    with two-sided tail control."""
    if p <= 1:
        raise DomainError("p must exceed 1")
    if target_width <= 0:
        raise DomainError("target_width must be positive")
    if x.is_zero:
        return Bracket(0.0, 0.0)
    starts, cums = segments(x, w)
    head = 0.0
    for i in range(len(starts) - 1):
        head += float(cums[i]) ** p * _exact_partial(
            w, int(starts[i]), int(starts[i + 1]), p)
    S = float(cums[-1])
    m_star = int(starts[-1])
    tw = target_width
    for _ in range(6):
        tail, _, _ = _tail_info(w, m_star, p, tw * max(S, 1.0) ** (-p))
        pad = 32.0 * _EPS * (head + S ** p * tail.hi)
        lo_sum = max(head + S ** p * tail.lo - pad, 0.0)
        hi_sum = head + S ** p * tail.hi + pad
        br = Bracket(lo_sum ** (1.0 / p), hi_sum ** (1.0 / p))
        if br.width <= target_width or tw <= 1e-15:
            return br
        tw *= 0.25 * target_width / br.width
    return br


def _head_terms(x, w, pe, K):
    """Transform values Lx(n) and exponents p_n for n = 0..K-1."""
    lams = np.empty(K)
    exps = np.empty(K)
    run = 0.0
    ptr = 0
    for n in range(K):
        while ptr < x.idx.size and x.idx[ptr] == n:
            run += w.delta_at(n) * abs(float(x.vals[ptr]))
            ptr += 1
        lams[n] = run / w.lambda_at(n)
        exps[n] = pe.at(n)
    return lams, exps


def modular(x, w, pe, target_width=1e-10):
    """Certified bracket for sigma(x) = sum_n Lx(n)^(p_n)."""
    if target_width <= 0:
        raise DomainError("target_width must be positive")
    if x.is_zero:
        return ModularValue(Bracket(0.0, 0.0), 0, "exact")
    K = max(x.max_support, len(pe.prefix))
    lams, exps = _head_terms(x, w, pe, K)
    head = float(np.sum(lams ** exps))
    S = float(np.sum(np.abs(x.vals) *
                     np.array([w.delta_at(int(k)) for k in x.idx])))
    p_t = pe.tail_value
    scale = S ** p_t
    tail, M, method = _tail_info(w, K, p_t, target_width / max(scale, 1.0))
    pad = 32.0 * _EPS * (head + scale * tail.hi)
    return ModularValue(
        Bracket(max(head + scale * tail.lo - pad, 0.0),
                head + scale * tail.hi + pad),
        M, method)


def _sigma_evaluator(x, w, pe, rel=1e-12):
    """Returns g(r) -> Bracket for sigma(x/r), with the r-independent tail
    sum precomputed once (the tail exponent is constant)."""
    K = max(x.max_support, len(pe.prefix))
    lams, exps = _head_terms(x, w, pe, K)
    S = float(sum(w.delta_at(int(k)) * abs(float(v))
                  for k, v in zip(x.idx, x.vals)))
    p_t = pe.tail_value
    tail, _, _ = _tail_rel(w, K, p_t, rel)

    def g(r):
        head = float(np.sum((lams / r) ** exps))
        t = (S / r) ** p_t
        pad = 32.0 * _EPS * (head + t * tail.hi)
        return Bracket(head + t * tail.lo - pad, head + t * tail.hi + pad)

    start = max(float(np.max(lams)) if K else 0.0, S / w.lambda_at(K))
    return g, start


def luxemburg(x, w, pe, tol=1e-9):
    """Certified bracket for the Luxemburg norm inf{r > 0 : sigma(x/r) <= 1}.

    The returned bracket [lo, hi] always satisfies sigma(x/hi) <= 1 and
    sigma(x/lo) >= 1 at certified-bracket level.
    """
    if tol <= 0:
        raise DomainError("tol must be positive")
    if x.is_zero:
        return Bracket(0.0, 0.0)
    g, r0 = _sigma_evaluator(x, w, pe)
    hi = max(r0, 1e-300)
    for _ in range(300):
        if g(hi).hi <= 1.0:
            break
        hi *= 2.0
    else:
        raise BracketingFailedError("upper expansion exceeded bound")
    lo = hi * 0.5
    for _ in range(300):
        if g(lo).lo >= 1.0:
            break
        lo *= 0.5
    else:
        raise BracketingFailedError("lower expansion exceeded bound")
    for _ in range(500):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        b = g(mid)
        if b.hi <= 1.0:
            hi = mid
        elif b.lo >= 1.0:
            lo = mid
        else:
            # sigma(x/mid) is indistinguishable from 1 at bracket precision;
            # both assignments would be unsound, so stop here.
            break
    return Bracket(lo, hi)
