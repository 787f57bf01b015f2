"""Command-line front-end: exact, classical, quantum, and verify modes.

Exit codes: 0 success, 2 usage error, 3 domain error, 4 verification
failure. Reports go to stdout (JSON or compact text), diagnostics to
stderr. The default seed is 0, overridable by the JONES3_SEED environment
variable and by --seed.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import os
import sys
from fractions import Fraction

import numpy as np

from .bracket import CapExceeded, bracket_state_sum
from .braid import BraidParseError, parse_braid, to_text, writhe
from .hadamard import InvalidPrecision, quantum_3sb, shots_for
from .rep2 import PHI_MAX, OutsideUnitarityRegion, classical_3sb, make_params
from .tl3 import jones_exact


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jones3",
        description="Jones polynomial of a 3-strand braid closure: "
        "exact Laurent polynomial, closed-form evaluation, or sampled quantum estimate.",
    )
    parser.add_argument("--braid", required=True, help="braid word, e.g. 's1 s2^-1 s1' or '1 -2 1'")
    parser.add_argument(
        "--mode", required=True, choices=["exact", "classical", "quantum", "verify"]
    )
    angle = parser.add_mutually_exclusive_group()
    angle.add_argument("--phi", type=float, help="evaluation angle in radians, t = e^{i phi}")
    angle.add_argument(
        "--phi-frac",
        metavar="P/Q",
        help="evaluation angle as a rational multiple of pi, e.g. 2/3 for 2*pi/3",
    )
    parser.add_argument("--eps1", type=float, help="precision of the quantum estimate")
    parser.add_argument("--eps2", type=float, help="failure probability bound")
    parser.add_argument("--seed", type=int, help="shot-stream seed (default: JONES3_SEED or 0)")
    parser.add_argument("--bound-mode", choices=["paper", "rigorous"], default="paper")
    parser.add_argument("--output", choices=["json", "text"], default="text")
    parser.add_argument(
        "--oracle-cap", type=int, default=20, help="max word length for the 2^L state-sum check"
    )
    return parser


def _resolve_phi(parser: argparse.ArgumentParser, args) -> float | None:
    if args.phi_frac is not None:
        try:
            return float(Fraction(args.phi_frac)) * math.pi
        except (ValueError, ZeroDivisionError):
            parser.error(f"--phi-frac expects a fraction like 2/3, got {args.phi_frac!r}")
    return args.phi


def _run_exact(word, phi):
    poly = jones_exact(word)
    report = {"polynomial": str(poly)}
    if phi is not None:
        params = make_params(phi)
        value = poly.eval(params.alpha)
        report.update(
            phi=phi,
            theta=params.theta,
            delta=params.delta,
            result={"re": value.real, "im": value.imag},
        )
    return report


def _run_classical(word, phi):
    params = make_params(phi)
    value = classical_3sb(word, params)
    return {
        "phi": phi,
        "theta": params.theta,
        "delta": params.delta,
        "result": {"re": value.real, "im": value.imag},
    }


def _run_quantum(word, phi, eps1, eps2, seed, bound_mode):
    params = make_params(phi)
    plan = shots_for(eps1, eps2, bound_mode)
    value, estimate = quantum_3sb(word, phi, eps1, eps2, seed=seed, bound_mode=bound_mode)
    return {
        "phi": phi,
        "theta": params.theta,
        "delta": params.delta,
        "n": plan.n,
        "seed": seed,
        "bound_mode": bound_mode,
        "result": {"re": value.real, "im": value.imag},
        "trace_estimate": {
            "re": estimate.re_estimate,
            "im": estimate.im_estimate,
            "n": estimate.n,
            "seed": estimate.seed,
            "shot_counts": estimate.shot_counts,
        },
    }


def _run_verify(word, phi, oracle_cap):
    poly = jones_exact(word)
    report: dict = {"polynomial": str(poly)}
    ok = True

    if len(word) <= oracle_cap:
        w = writhe(word)
        from .laurent import LaurentPoly

        framing = LaurentPoly.monomial(-1 if w % 2 else 1, 3 * w)
        state_sum = framing * bracket_state_sum(word, cap=oracle_cap)
        match = state_sum == poly
        report["state_sum_match"] = match
        ok = ok and match

    angles = [phi] if phi is not None else list(np.linspace(-PHI_MAX, PHI_MAX, 11)[1:-1])
    deviation = 0.0
    for angle in angles:
        params = make_params(angle)
        exact_value = poly.eval(params.alpha)
        deviation = max(deviation, abs(classical_3sb(word, params) - exact_value))
    report["oracle_deviation"] = deviation
    ok = ok and deviation <= 1e-9
    return report, ok


def _render_text(mode: str, report: dict) -> str:
    if mode == "exact":
        return report["polynomial"]
    if mode == "verify":
        return json.dumps(
            {
                "oracle_deviation": report["oracle_deviation"],
                "state_sum_match": report.get("state_sum_match"),
            }
        )
    return json.dumps(report["result"])


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    phi = _resolve_phi(parser, args)

    if args.mode in ("classical", "quantum") and phi is None:
        parser.error(f"--mode {args.mode} requires --phi or --phi-frac")
    if args.mode == "quantum" and (args.eps1 is None or args.eps2 is None):
        parser.error("--mode quantum requires --eps1 and --eps2")

    seed = args.seed if args.seed is not None else int(os.environ.get("JONES3_SEED", "0"))

    try:
        word = parse_braid(args.braid)
        report = {
            "mode": args.mode,
            "braid": to_text(word),
            "L": len(word),
            "writhe": writhe(word),
        }
        status = 0
        if args.mode == "exact":
            report.update(_run_exact(word, phi))
        elif args.mode == "classical":
            report.update(_run_classical(word, phi))
        elif args.mode == "quantum":
            report.update(_run_quantum(word, phi, args.eps1, args.eps2, seed, args.bound_mode))
        else:
            body, ok = _run_verify(word, phi, args.oracle_cap)
            report.update(body)
            status = 0 if ok else 4
    except (BraidParseError, OutsideUnitarityRegion, InvalidPrecision, CapExceeded) as exc:
        error = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        print(json.dumps(error))
        print(f"error: {exc}", file=sys.stderr)
        return 3

    if args.output == "json":
        print(json.dumps(report))
    else:
        print(_render_text(args.mode, report))
    return status


if __name__ == "__main__":
    sys.exit(main())
