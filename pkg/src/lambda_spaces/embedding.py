"""Block-sequence (Nakano) space over l1-normed blocks and the isometric
embedding of the weighted sequence space into it.

Block n of the embedded image is
(lambda_0 x_0/lambda_n, (lambda_1-lambda_0) x_1/lambda_n, ...,
 (lambda_n-lambda_{n-1}) x_n/lambda_n), whose l1 norm is exactly the
transform Lx(n); the Luxemburg norms therefore agree.
"""

from dataclasses import dataclass

import numpy as np

from .errors import BracketingFailedError, DomainError
from .norms import Bracket, luxemburg, tail_sum_bracket
from .weights import weighted_sum

_EPS = np.finfo(np.float64).eps


@dataclass(frozen=True)
class BlockVector:
    """Blocks 0..N, block n holding exactly n+1 finite entries."""

    blocks: tuple

    def __post_init__(self):
        for n, b in enumerate(self.blocks):
            if len(b) != n + 1:
                raise DomainError(f"block {n} must have {n + 1} entries")
            if not np.all(np.isfinite(b)):
                raise DomainError("block entries must be finite")

    @property
    def count(self):
        return len(self.blocks)

    def block_l1(self, n):
        return float(np.sum(np.abs(self.blocks[n])))


def embed(x, w, N):
    """Materialize blocks 0..N of the isometric embedding of x."""
    if N < 0:
        raise DomainError("N must be nonnegative")
    deltas = np.array([w.delta_at(k) for k in range(N + 1)])
    dense = np.zeros(N + 1)
    for k, v in zip(x.idx, x.vals):
        if k <= N:
            dense[k] = v
    blocks = tuple((deltas[:n + 1] * dense[:n + 1]) / w.lambda_at(n)
                   for n in range(N + 1))
    return BlockVector(blocks)


def nakano_luxemburg(b, pe, tail, tol=1e-9):
    """Luxemburg norm bracket of the block sequence whose blocks beyond the
    materialized range contribute the certified modular ``tail`` at unit
    scale.  The omitted blocks all carry the constant tail exponent, so the
    tail rescales exactly as r**(-p_tail)."""
    if tol <= 0:
        raise DomainError("tol must be positive")
    if b.count < len(pe.prefix) and tail.hi > 0:
        raise DomainError(
            "materialized blocks must cover the exponent prefix")
    l1s = np.array([b.block_l1(n) for n in range(b.count)])
    exps = np.array([pe.at(n) for n in range(b.count)])
    if not np.any(l1s) and tail.hi == 0.0:
        return Bracket(0.0, 0.0)
    p_t = pe.tail_value

    def g(r):
        head = float(np.sum((l1s / r) ** exps))
        scale = r ** (-p_t)
        pad = 32.0 * _EPS * (head + scale * tail.hi)
        return Bracket(head + scale * tail.lo - pad,
                       head + scale * tail.hi + pad)

    hi = max(float(np.max(l1s)), tail.hi ** (1.0 / p_t), 1e-300)
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
        br = g(mid)
        if br.hi <= 1.0:
            hi = mid
        elif br.lo >= 1.0:
            lo = mid
        else:
            break
    return Bracket(lo, hi)


def isometry_residual(x, w, pe, N, tol=1e-9):
    """Numerical check of the isometry: the gap between the Luxemburg norm
    of x and the Nakano-space Luxemburg norm of its embedded image.

    Returns |mid difference| + half the combined bracket widths, an upper
    bound on the disagreement of the two certified routes."""
    direct = luxemburg(x, w, pe, tol)
    if x.is_zero:
        return abs(direct.mid)
    N = max(N, x.max_support, len(pe.prefix))
    b = embed(x, w, N)
    S = weighted_sum(x, w)
    p_t = pe.tail_value
    # the tail is rescaled by S**p_t, which can be large: pick the target
    # width so the scaled bracket stays at the 1e-12 level, floored at the
    # relative precision the summation can deliver
    coarse = tail_sum_bracket(w, N + 1, p_t, 1e-6)
    scale = max(S ** p_t, 1.0)
    tw = max(1e-12 * coarse.lo, 1e-12 / scale, 16.0 * _EPS * coarse.lo)
    t = tail_sum_bracket(w, N + 1, p_t, tw)
    tail = Bracket(S ** p_t * t.lo, S ** p_t * t.hi)
    nak = nakano_luxemburg(b, pe, tail, tol)
    return abs(direct.mid - nak.mid) + 0.5 * (direct.width + nak.width)
