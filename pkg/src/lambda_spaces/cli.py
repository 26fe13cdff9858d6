"""Command-line surface: every computation as a subcommand emitting a JSON
report (or CSV rows for the tabular subcommands)."""

import argparse
import json
import math
import sys

import numpy as np

from .constants import (OptimizerConfig, cnj2_exact, cnj2_numeric,
                        cnj_from_psi, james2_exact, james2_numeric,
                        james_inf_pair, james_pair_construction,
                        jns_construction, jns_inf, psi, psi2)
from .embedding import isometry_residual
from .errors import (BracketingFailedError, LambdaSpaceError,
                     NonconvergentError)
from .extreme import extreme_check, ukk_delta
from .norms import ExponentSeq, luxemburg, pnorm, supnorm
from .weights import FiniteSequence, LambdaWeights


class _Parser(argparse.ArgumentParser):
    # input errors must exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _parse_x(spec):
    """Sequence literal: 'e<k>' for a basis vector, or 'i:v,i:v,...'."""
    spec = spec.strip()
    if spec.startswith("e") and spec[1:].isdigit():
        return FiniteSequence.basis(int(spec[1:]))
    pairs = []
    for item in spec.split(","):
        i, v = item.split(":")
        pairs.append((int(i), float(v)))
    return FiniteSequence.from_pairs(pairs)


def _parse_floats(spec):
    return [float(t) for t in spec.split(",") if t.strip()]


def _weights(args):
    cfg = {"family": args.family}
    if args.family == "power":
        cfg["alpha"] = args.alpha
    elif args.family == "riesz":
        cfg["q"] = _parse_floats(args.q)
        cfg["q_tail"] = args.q_tail
    elif args.family == "custom":
        cfg["values"] = _parse_floats(args.values)
    return LambdaWeights.from_config(cfg)


def _exponents(args):
    prefix = tuple(_parse_floats(args.p_prefix)) if args.p_prefix else ()
    return ExponentSeq(prefix, args.p_tail)


def _parse_p(s):
    if s in ("inf", "Inf", "INF"):
        return math.inf
    return float(s)


def _bracket(b):
    return [float(b.lo), float(b.hi)]


def _emit(report):
    print(json.dumps(report, indent=2))


def _add_family(sp):
    sp.add_argument("--family", default="cesaro",
                    choices=["cesaro", "power", "riesz", "custom"])
    sp.add_argument("--alpha", type=float, default=1.0)
    sp.add_argument("--q", default="")
    sp.add_argument("--q-tail", type=float, default=None)
    sp.add_argument("--values", default="")


def _add_exponents(sp):
    sp.add_argument("--p-prefix", default="",
                    help="comma-separated exponent prefix")
    sp.add_argument("--p-tail", type=float, default=2.0,
                    help="constant exponent beyond the prefix")


def _add_precision(sp):
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--width", type=float, default=1e-10)
    sp.add_argument("--grid", type=int, default=512)
    sp.add_argument("--refine", type=int, default=64)
    sp.add_argument("--seed", type=int, default=0)


def build_parser():
    p = _Parser(prog="lambda-spaces",
                description="Certified numerics for weighted-mean sequence "
                            "spaces and their geometric constants")
    sub = p.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("norm", help="p-norm bracket of a finite sequence")
    _add_family(sp)
    _add_precision(sp)
    sp.add_argument("--p", required=True)
    sp.add_argument("--x", required=True)

    sp = sub.add_parser("supnorm", help="exact sup-norm")
    _add_family(sp)
    sp.add_argument("--x", required=True)

    sp = sub.add_parser("luxemburg", help="Luxemburg norm bracket")
    _add_family(sp)
    _add_exponents(sp)
    _add_precision(sp)
    sp.add_argument("--x", required=True)

    for name in ("cnj2", "james2"):
        sp = sub.add_parser(name, help=f"{name} constant: closed form plus "
                                       "numeric lower bound")
        sp.add_argument("--lambda0", type=float, required=True)
        sp.add_argument("--lambda1", type=float, required=True)
        sp.add_argument("--p", type=float, default=2.0)
        _add_precision(sp)

    sp = sub.add_parser("psi-sup", help="constant via the psi-ratio route")
    sp.add_argument("--lambda0", type=float, required=True)
    sp.add_argument("--lambda1", type=float, required=True)
    sp.add_argument("--p", type=float, default=2.0)
    sp.add_argument("--table", action="store_true")
    sp.add_argument("--csv", action="store_true")
    _add_precision(sp)

    sp = sub.add_parser("james-seq", help="James witness values along m")
    _add_family(sp)
    _add_precision(sp)
    sp.add_argument("--p", required=True, help="exponent, or 'inf'")
    sp.add_argument("--m", required=True, help="comma-separated indices")
    sp.add_argument("--csv", action="store_true")

    sp = sub.add_parser("jns-seq", help="n-vector James witness values")
    _add_family(sp)
    _add_precision(sp)
    sp.add_argument("--p", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", required=True)
    sp.add_argument("--csv", action="store_true")

    sp = sub.add_parser("embed-check", help="isometry residual of the "
                                            "block-space embedding")
    _add_family(sp)
    _add_exponents(sp)
    _add_precision(sp)
    sp.add_argument("--x", required=True)
    sp.add_argument("--N", type=int, default=0)

    sp = sub.add_parser("extreme-check", help="extreme-point criterion")
    _add_family(sp)
    _add_exponents(sp)
    _add_precision(sp)
    sp.add_argument("--x", required=True)

    sp = sub.add_parser("ukk-delta", help="Kadec-Klee eta/delta arithmetic")
    sp.add_argument("--eps", type=float, required=True)
    sp.add_argument("--p-sup", type=float, required=True)

    return p


def _run(args):
    if args.cmd == "norm":
        x = _parse_x(args.x)
        p = _parse_p(args.p)
        inputs = {"family": args.family, "p": args.p, "x": args.x,
                  "width": args.width}
        if p == math.inf:
            val = supnorm(x, _weights(args))
            return {"subcommand": "norm", "inputs": inputs,
                    "results": [{"label": "supnorm", "value": val}],
                    "provenance": ["exact"]}
        b = pnorm(x, _weights(args), p, args.width)
        return {"subcommand": "norm", "inputs": inputs,
                "results": [{"label": "pnorm", "bracket": _bracket(b)}],
                "provenance": ["certified-tail-bracket"]}

    if args.cmd == "supnorm":
        val = supnorm(_parse_x(args.x), _weights(args))
        return {"subcommand": "supnorm",
                "inputs": {"family": args.family, "x": args.x},
                "results": [{"label": "supnorm", "value": val}],
                "provenance": ["exact"]}

    if args.cmd == "luxemburg":
        b = luxemburg(_parse_x(args.x), _weights(args), _exponents(args),
                      args.tol)
        return {"subcommand": "luxemburg",
                "inputs": {"family": args.family, "x": args.x,
                           "p_prefix": args.p_prefix, "p_tail": args.p_tail,
                           "tol": args.tol},
                "results": [{"label": "luxemburg", "bracket": _bracket(b)}],
                "provenance": ["bisection-on-certified-modular"]}

    if args.cmd in ("cnj2", "james2"):
        cfg = OptimizerConfig(args.grid, args.refine, args.seed)
        results = []
        prov = []
        if args.cmd == "cnj2":
            if args.p == 2.0:
                ex = cnj2_exact(args.lambda0, args.lambda1)
                results.append({"label": "closed_form", "value": ex.value})
                prov.append("closed_form")
            num = cnj2_numeric(args.lambda0, args.lambda1, args.p, cfg)
        else:
            if args.p == 2.0:
                ex = james2_exact(args.lambda0, args.lambda1)
                results.append({"label": "closed_form", "value": ex.value})
                prov.append("closed_form")
            num = james2_numeric(args.lambda0, args.lambda1, args.p, cfg)
        results.append({"label": "numeric_lower_bound", "value": num.value,
                        "bracket": _bracket(num.certify),
                        "evaluations": num.evaluations})
        prov.append("grid_refine")
        return {"subcommand": args.cmd,
                "inputs": {"lambda0": args.lambda0, "lambda1": args.lambda1,
                           "p": args.p, "grid": args.grid,
                           "refine": args.refine, "seed": args.seed},
                "results": results, "provenance": prov}

    if args.cmd == "psi-sup":
        if args.table:
            rows = [(t, psi(t, args.lambda0, args.lambda1, args.p), psi2(t))
                    for t in np.linspace(0.0, 1.0, args.grid)]
            if args.csv:
                print("t,psi,psi2,ratio")
                for t, a, b in rows:
                    print(f"{t!r},{a!r},{b!r},{a / b!r}")
                return None
            return {"subcommand": "psi-sup",
                    "inputs": {"lambda0": args.lambda0,
                               "lambda1": args.lambda1, "p": args.p,
                               "grid": args.grid},
                    "results": [{"label": "table",
                                 "rows": [[t, a, b, a / b]
                                          for t, a, b in rows]}],
                    "provenance": ["grid"]}
        est = cnj_from_psi(args.lambda0, args.lambda1, args.p,
                           OptimizerConfig(args.grid, args.refine, args.seed))
        return {"subcommand": "psi-sup",
                "inputs": {"lambda0": args.lambda0, "lambda1": args.lambda1,
                           "p": args.p, "grid": args.grid,
                           "refine": args.refine},
                "results": [{"label": "cnj_from_psi", "value": est.value,
                             "bracket": _bracket(est.certify),
                             "flags": list(est.flags)}],
                "provenance": ["grid_refine"]}

    if args.cmd in ("james-seq", "jns-seq"):
        w = _weights(args)
        p = _parse_p(args.p)
        ms = [int(t) for t in args.m.split(",")]
        rows = []
        for m in ms:
            if args.cmd == "james-seq":
                if p == math.inf:
                    rows.append([m, james_inf_pair(w, m), None, None])
                else:
                    lb, d = james_pair_construction(w, p, m)
                    rows.append([m, lb, float(d.lo), float(d.hi)])
            else:
                if p == math.inf:
                    rows.append([m, jns_inf(w, args.n, m), None, None])
                else:
                    lb, d = jns_construction(w, p, args.n, m)
                    rows.append([m, lb, float(d.lo), float(d.hi)])
        if args.csv:
            print("m,value,direct_lo,direct_hi")
            for r in rows:
                print(",".join("" if c is None else repr(c) for c in r))
            return None
        inputs = {"family": args.family, "p": args.p, "m": args.m}
        if args.cmd == "jns-seq":
            inputs["n"] = args.n
        return {"subcommand": args.cmd, "inputs": inputs,
                "results": [{"label": "rows", "rows": rows}],
                "provenance": ["exact" if p == math.inf
                               else "certified-tail-bracket"]}

    if args.cmd == "embed-check":
        res = isometry_residual(_parse_x(args.x), _weights(args),
                                _exponents(args), args.N, args.tol)
        return {"subcommand": "embed-check",
                "inputs": {"family": args.family, "x": args.x, "N": args.N,
                           "p_prefix": args.p_prefix, "p_tail": args.p_tail,
                           "tol": args.tol},
                "results": [{"label": "isometry_residual", "value": res}],
                "provenance": ["dual-route-luxemburg"]}

    if args.cmd == "extreme-check":
        v = extreme_check(_parse_x(args.x), _weights(args), _exponents(args),
                          args.tol)
        return {"subcommand": "extreme-check",
                "inputs": {"family": args.family, "x": args.x,
                           "p_prefix": args.p_prefix, "p_tail": args.p_tail,
                           "tol": args.tol},
                "results": [{"label": "verdict", "value": v.verdict},
                            {"label": "on_sphere_modular",
                             "value": v.on_sphere_modular},
                            {"label": "affine_card", "value": v.affine_card}],
                "provenance": ["certified-modular"]}

    if args.cmd == "ukk-delta":
        eta, delta = ukk_delta(args.eps, args.p_sup)
        return {"subcommand": "ukk-delta",
                "inputs": {"eps": args.eps, "p_sup": args.p_sup},
                "results": [{"label": "eta", "value": eta},
                            {"label": "delta", "value": delta}],
                "provenance": ["closed_form"]}

    raise AssertionError(f"unhandled subcommand {args.cmd}")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = _run(args)
    except (NonconvergentError, BracketingFailedError) as exc:
        print(f"numerical failure [{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except LambdaSpaceError as exc:
        print(f"input error [{exc.code}]: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    if report is not None:
        _emit(report)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
