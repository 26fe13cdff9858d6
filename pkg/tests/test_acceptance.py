"""Acceptance gate: one test per criterion, each printing a single
pass/fail line with the pinned tolerance it enforces."""

import math

import numpy as np

from lambda_spaces import (ExponentSeq, FiniteSequence, LambdaWeights,
                           affine_interval_card, cnj2_exact, cnj2_numeric,
                           cnj_from_psi, extreme_check, isometry_residual,
                           james2_exact, james2_numeric, james_inf_pair,
                           james_pair_construction, jns_construction,
                           jns_inf, luxemburg, modular, non_extreme_witness,
                           pnorm, supnorm, superadditivity_check,
                           tail_sum_bracket, ukk_delta)

CESARO = LambdaWeights.cesaro()
POWER15 = LambdaWeights.power(1.5)


def _report(num, name, ok):
    print(f"[criterion {num:02d}] {name}: {'PASS' if ok else 'FAIL'}",
          flush=True)
    assert ok, f"criterion {num} failed: {name}"


def _rand_sequence(rng, max_index=20, max_terms=8, lo=-10.0, hi=10.0):
    k = int(rng.integers(1, max_terms + 1))
    idx = rng.choice(max_index, size=k, replace=False)
    vals = rng.uniform(lo, hi, size=k)
    vals[vals == 0.0] = 1.0
    return FiniteSequence(idx, vals)


def _rand_exponents(rng):
    m = int(rng.integers(0, 5))
    prefix = tuple(rng.uniform(1.1, 4.0, size=m))
    return ExponentSeq(prefix, float(rng.uniform(1.1, 4.0)))


def _scale_to_modular(x, w, pe, target):
    lo, hi = 1e-9, 1e9
    for _ in range(200):
        c = math.sqrt(lo * hi)
        s = modular(x.scale(c), w, pe, 1e-13).bracket
        if abs(s.mid - target) < 1e-11:
            return x.scale(c)
        if s.mid > target:
            hi = c
        else:
            lo = c
    return x.scale(math.sqrt(lo * hi))


def test_criterion_01_closed_form_cnj():
    val = cnj2_exact(1.0, 2.0).value
    ok = abs(val - (1.0 + 1.0 / math.sqrt(5.0))) <= 1e-12
    _report(1, "closed-form constant 1 + 1/sqrt(5) to 1e-12", ok)


def test_criterion_02_numeric_vs_closed_form():
    checks = []
    for exact_fn, numeric_fn in ((cnj2_exact, cnj2_numeric),
                                 (james2_exact, james2_numeric)):
        ex = exact_fn(1.0, 2.0).value
        num = numeric_fn(1.0, 2.0, 2.0).value
        checks.append(ex - num <= 2e-3)
        checks.append(num <= ex + 1e-9)
    _report(2, "numeric search within 2e-3 below closed forms, "
               "never above by more than 1e-9", all(checks))


def test_criterion_03_psi_route():
    a = cnj_from_psi(1.0, 2.0, 2.0).value
    b = cnj_from_psi(1.0, 3.0, 2.0).value
    ok = (abs(a - (1.0 + 1.0 / math.sqrt(5.0))) <= 1e-6
          and abs(b - (1.0 + 1.0 / math.sqrt(10.0))) <= 1e-6)
    _report(3, "psi-ratio route matches both closed forms to 1e-6", ok)


def test_criterion_04_exact_sup_norm_constructions():
    ok = (james_inf_pair(CESARO, 98) == 1.99
          and jns_inf(CESARO, 3, 997) == 2.997)
    _report(4, "sup-norm witnesses 1.99 and 2.997 exactly, "
               "cross-checked by supnorm", ok)


def test_criterion_05_convergence_tables():
    pair_vals = [james_pair_construction(CESARO, 2.0, m)[0]
                 for m in (10, 100, 1000, 10 ** 4)]
    jns_lower = jns_construction(CESARO, 2.0, 3, 10 ** 4)[0]
    ok = (pair_vals == sorted(pair_vals)
          and pair_vals[-1] >= 1.999
          and all(v <= 2.0 for v in pair_vals)
          and 2.99 <= jns_lower <= 3.0)
    _report(5, "witness tables non-decreasing, >= 1.999 / >= 2.99 at "
               "m = 1e4, bounded by 2 and 3", ok)


def test_criterion_06_isometry_suite():
    rng = np.random.default_rng(2026)
    worst = 0.0
    for _ in range(100):
        x = _rand_sequence(rng)
        pe = _rand_exponents(rng)
        for w in (CESARO, POWER15):
            r = isometry_residual(x, w, pe, x.max_support, 1e-10)
            worst = max(worst, r)
    _report(6, f"block-embedding residual <= 1e-8 on 200 cases "
               f"(worst {worst:.2e})", worst <= 1e-8)


def test_criterion_07_luxemburg_properties():
    rng = np.random.default_rng(7)
    checks = []
    prev = None
    for _ in range(1000):
        x = _rand_sequence(rng)
        pe = _rand_exponents(rng)
        b = luxemburg(x, CESARO, pe, 1e-10)
        # unit rescaling puts the modular in the 1e-8 band
        s = modular(x.scale(1.0 / b.mid), CESARO, pe, 1e-10).bracket
        checks.append(1.0 - 1e-8 <= s.mid <= 1.0 + 1e-8)
        # homogeneity
        b2 = luxemburg(x.scale(2.0), CESARO, pe, 1e-10)
        checks.append(abs(b2.mid - 2.0 * b.mid) <= 1e-9)
        # triangle inequality against the previous draw, same exponents
        if prev is not None:
            bp = luxemburg(prev, CESARO, pe, 1e-10)
            bs = luxemburg(x + prev, CESARO, pe, 1e-10)
            slack = b.width + bp.width + bs.width
            checks.append(bs.lo <= b.hi + bp.hi + slack)
        prev = x
    for p in (1.5, 2.0, 3.0):
        for _ in range(25):
            x = _rand_sequence(rng)
            b1 = luxemburg(x, CESARO, ExponentSeq.constant(p), 1e-10)
            b2 = pnorm(x, CESARO, p, 1e-10)
            checks.append(abs(b1.mid - b2.mid) <= 1e-8)
    _report(7, "Luxemburg norm: unit modular band 1e-8, homogeneity 1e-9, "
               "triangle, constant-exponent reduction 1e-8", all(checks))


def test_criterion_08_tail_bracket_oracle():
    t = tail_sum_bracket(CESARO, 0, 2.0, 1e-10)
    b = pnorm(FiniteSequence.basis(0), CESARO, 2.0, 1e-10)
    ok = (t.contains(math.pi ** 2 / 6.0) and t.width <= 1e-8
          and b.contains(math.pi / math.sqrt(6.0)) and b.width <= 1e-8)
    _report(8, "certified tails contain pi^2/6 and pi/sqrt(6) "
               "with width <= 1e-8", ok)


def test_criterion_09_extreme_point_suite():
    rng = np.random.default_rng(9)
    checks = []
    for i in range(100):
        k = int(rng.integers(2, 7))
        idx = rng.choice(15, size=k, replace=False)
        raw = FiniteSequence(idx, rng.uniform(0.2, 3.0, size=k))
        pe = _rand_exponents(rng)
        x = _scale_to_modular(raw, CESARO, pe, 0.9)
        y, z = non_extreme_witness(x, CESARO, pe)
        checks.append(y != z)
        checks.append(y + z == x + x)
        checks.append(modular(y, CESARO, pe).bracket.hi < 1.0)
        checks.append(modular(z, CESARO, pe).bracket.hi < 1.0)
        checks.append(affine_interval_card(x, pe, CESARO) == 0)
        if i % 10 == 0:
            xs = _scale_to_modular(raw, CESARO, pe, 1.0)
            checks.append(extreme_check(xs, CESARO, pe).verdict == "extreme")
    _report(9, "midpoint witnesses exact and inside the ball on 100 cases; "
               "sphere points extreme; affine card identically 0",
            all(checks))


def test_criterion_10_kadec_klee_arithmetic():
    checks = []
    for eps in np.linspace(0.05, 0.95, 19):
        for p in np.linspace(1.1, 6.0, 25):
            eta, delta = ukk_delta(float(eps), float(p))
            checks.append(abs((1.0 - delta) ** p - (1.0 - eta)) <= 1e-12)
            checks.append(eta == (eps / 4.0) ** p)
    rng = np.random.default_rng(10)
    for u, v, p in zip(rng.uniform(0, 20, 10 ** 4),
                       rng.uniform(0, 20, 10 ** 4),
                       rng.uniform(1, 8, 10 ** 4)):
        checks.append(superadditivity_check(u, v, p))
    _report(10, "(1-delta)^p = 1 - (eps/4)^p to 1e-12; superadditivity on "
                "1e4 samples", all(checks))


def test_criterion_11_brute_force_optimizer_oracle():
    # independent angle parametrization of the sphere: the optimizer uses
    # u -> v(u), this oracle uses theta -> (cos, sin)/norm with the norm
    # recomputed from scratch
    l0, l1, p = 1.0, 2.0, 2.0

    def raw_norm(u, v):
        return (np.abs(u) ** p
                + ((l0 * np.abs(u) + (l1 - l0) * np.abs(v)) / l1) ** p) \
            ** (1.0 / p)

    t = np.arange(0.0, 1.0 + 1e-12, 1e-3)
    theta = t * (math.pi / 2.0)
    xu, xv = np.cos(theta), np.sin(theta)
    n = raw_norm(xu, xv)
    xu, xv = xu / n, xv / n
    best_cnj, best_james = 0.0, 0.0
    for sign in (1.0, -1.0):
        yu, yv = xu, sign * xv
        su = xu[:, None] + yu[None, :]
        sv = xv[:, None] + yv[None, :]
        du = xu[:, None] - yu[None, :]
        dv = xv[:, None] - yv[None, :]
        a = raw_norm(su, sv)
        b = raw_norm(du, dv)
        best_cnj = max(best_cnj, float(np.max((a * a + b * b) / 4.0)))
        best_james = max(best_james, float(np.max(np.minimum(a, b))))
    ok = (abs(best_cnj - cnj2_exact(l0, l1).value) <= 5e-3
          and abs(best_james - james2_exact(l0, l1).value) <= 5e-3)
    _report(11, "dense angle-grid sweep reproduces both closed forms "
                "within 5e-3", ok)
