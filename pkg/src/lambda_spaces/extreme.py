"""Extreme-point criterion on the unit sphere, the non-extremeness witness
decomposition, and the quantitative Kadec-Klee arithmetic."""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NotOnSphereError, WitnessUnavailableError
from .norms import luxemburg, modular
from .weights import FiniteSequence, lambda_transform

_EPS = np.finfo(np.float64).eps


@dataclass(frozen=True)
class ExtremeVerdict:
    on_sphere_modular: bool
    affine_card: int
    verdict: str  # extreme | not_extreme_modular | indeterminate


def _affine_intervals(p):
    """Affine intervals of t -> |t|^p on (0, inf).  Strict convexity for
    p > 1 leaves none; the hook exists so an extended exponent family with
    flat pieces would be detected by the same scan."""
    return ()


def affine_interval_card(x, pe, w=None):
    """Card(A_x): support indices n whose transform run up to the next
    support index is nonzero and sits inside the interior of an affine
    interval of the exponent functions.  Identically 0 while every exponent
    exceeds 1; the scan is kept explicit so an extended exponent family
    with flat pieces (supplied with weights ``w`` for the transform values)
    would be detected."""
    if x.is_zero:
        return 0
    card = 0
    support = [int(k) for k in x.idx]
    for pos, n in enumerate(support):
        if pos + 1 >= len(support):
            # no next support index: n is excluded from A_x
            continue
        m = support[pos + 1]
        run_ok = True
        for j in range(n, m):
            intervals = _affine_intervals(pe.at(j))
            if not intervals or w is None:
                run_ok = False
                break
            val = lambda_transform(x, w, j)
            if val == 0.0 or not any(a < val < b for a, b in intervals):
                run_ok = False
                break
        if run_ok:
            card += 1
    return card


def extreme_check(x, w, pe, tol=1e-8):
    """Extreme-point criterion for a unit-sphere point: the modular must be
    certified equal to 1 and Card(A_x) at most 1."""
    if tol <= 0:
        raise DomainError("tol must be positive")
    lux = luxemburg(x, w, pe, min(tol * 0.1, 1e-9)) if not x.is_zero else None
    if x.is_zero or abs(lux.mid - 1.0) > tol + lux.width:
        raise NotOnSphereError("input is not on the unit sphere")
    mv = modular(x, w, pe, min(tol * 1e-2, 1e-10))
    br = mv.bracket
    card = affine_interval_card(x, pe)
    if br.lo >= 1.0 - tol and br.hi <= 1.0 + tol:
        on_sphere = True
        verdict = "extreme" if card <= 1 else "indeterminate"
    elif br.hi < 1.0 - tol:
        on_sphere = False
        verdict = "not_extreme_modular"
    else:
        on_sphere = False
        verdict = "indeterminate"
    return ExtremeVerdict(on_sphere, card, verdict)


def non_extreme_witness(x, w, pe):
    """Midpoint decomposition 2x = y + z witnessing non-extremeness when the
    modular is certified below 1.

    One coordinate a is split as b + c = 2a with b != c; the split is exact
    in floating point (c = a + a*2^-j is rounded once, then b = 2a - c is a
    Sterbenz subtraction).  Since |b| < |a| < |c| the y-side stays inside
    the ball automatically; the perturbation is shrunk until sigma(z) is
    certified below 1 as well."""
    sx = modular(x, w, pe).bracket
    if sx.hi >= 1.0:
        raise DomainError("witness requires sigma(x) certified below 1")
    if x.is_zero:
        k, a = 0, 0.0
    else:
        k = x.max_support
        a = float(x.at(k))
    base = x + FiniteSequence.basis(k, -a)  # coordinate k removed exactly
    for j in range(2, 60):
        if a == 0.0:
            c = 2.0 ** (-j)
            b = -c
        else:
            c = a + a * 2.0 ** (-j)
            b = 2.0 * a - c  # exact: |a| <= |c| <= 2|a|, same sign
            if c == a or b == a:
                break
        y = base + FiniteSequence.basis(k, b)
        z = base + FiniteSequence.basis(k, c)
        if modular(z, w, pe).bracket.hi < 1.0 \
                and modular(y, w, pe).bracket.hi < 1.0:
            return y, z
    raise WitnessUnavailableError("no admissible perturbation found")


def ukk_delta(eps, p_sup):
    """Quantitative Kadec-Klee pair: eta = (eps/4)^p_sup and the largest
    delta with (1-delta)^p_sup >= 1 - eta."""
    if not 0.0 < eps < 1.0:
        raise DomainError("eps must lie in (0, 1)")
    if p_sup <= 1.0:
        raise DomainError("p_sup must exceed 1")
    eta = (eps / 4.0) ** p_sup
    delta = 1.0 - (1.0 - eta) ** (1.0 / p_sup)
    return eta, delta


def superadditivity_check(u, v, p):
    """(u+v)^p >= u^p + v^p for u, v >= 0, p >= 1 (convexity consequence),
    allowing numerical slack."""
    if u < 0 or v < 0 or p < 1:
        raise DomainError("need u, v >= 0 and p >= 1")
    lhs = (u + v) ** p
    slack = 64.0 * _EPS * max(lhs, 1.0)
    return lhs + slack >= u ** p + v ** p
