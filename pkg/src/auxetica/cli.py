"""Command line interface.

Exit codes of ``decide``: 0 auxetic, 1 not auxetic, 2 not regular, 3 input
error, 4 any other failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

import numpy as np

from .cubic import MONOMIALS, CubicError, TernaryCubic, determinant_cubic, invariants
from .decision import (
    EXACT_MAX_N,
    DecideOptions,
    DecisionError,
    DecisionReport,
    Verdict,
    decide,
    simulate_path,
)
from .deformation import GramVelocityPencil
from .document import DocumentError, format_number, read_document, read_framework, write_framework
from .framework import SYM_LABELS, PeriodicFramework
from .lab import family_framework

EXIT_CODES = {Verdict.AUXETIC: 0, Verdict.NOT_AUXETIC: 1, Verdict.NOT_REGULAR: 2}
EXIT_INPUT_ERROR = 3
EXIT_FAILURE = 4

MESSAGES = {
    Verdict.AUXETIC: "yes: a strictly auxetic infinitesimal deformation exists",
    Verdict.NOT_AUXETIC: "no: the Gram-velocity pencil misses the positive definite cone",
    Verdict.NOT_REGULAR: "not regular: no verdict",
}


def _num(v):
    """JSON value: exact rationals as strings, floats with 12 significant digits."""
    if v is None:
        return None
    if isinstance(v, (Fraction, int)):
        return format_number(v)
    return float(f"{float(v):.12g}")


def _txt(v) -> str:
    if isinstance(v, (Fraction, int)):
        return format_number(v)
    return f"{float(v):.12g}"


def _monomial_name(e) -> str:
    parts = []
    for var, p in zip("XYZ", e):
        if p:
            parts.append(var if p == 1 else f"{var}^{p}")
    return "".join(parts)


def invariants_dict(inv, cubic: TernaryCubic | None) -> dict:
    out = {
        "S": _num(inv.S),
        "T": _num(inv.T),
        "delta": _num(inv.delta),
        "delta_sign": inv.sign,
        "singular": inv.singular,
        "J": _num(inv.J) if inv.J is not None else "INFINITE",
        "k": _num(inv.k) if inv.k is not None else None,
        "k_4dp": f"{inv.k:.4f}" if inv.k is not None else None,
        "k_interval": [_num(v) for v in inv.k_interval] if inv.k_interval else None,
    }
    if cubic is not None:
        out["cubic"] = {_monomial_name(e): _num(c) for e, c in zip(MONOMIALS, cubic.coeffs)}
    return out


def report_dict(report: DecisionReport, timings: bool = False) -> dict:
    out: dict = {"verdict": report.verdict.value, "mode": report.mode,
                 "message": MESSAGES[report.verdict]}
    if report.diagnosis:
        out["diagnosis"] = {"condition": report.diagnosis.condition.value,
                            "detail": report.diagnosis.detail}
    if report.pencil:
        out["free_variables"] = ["omegadot" + lab for lab in report.pencil.free_labels]
        out["pencil"] = {"omegadot" + lab: [_num(c) for c in f]
                         for lab, f in zip(SYM_LABELS, report.pencil.forms)}
    if report.invariants:
        out["invariants"] = invariants_dict(report.invariants, report.cubic)
    if report.preimage is not None:
        out["preimage_of_111"] = [_num(v) for v in report.preimage]
    if report.transform is not None:
        out["hesse_transform"] = [[_num(v) for v in row] for row in report.transform.matrix]
    if report.definiteness is not None:
        out["definiteness"] = report.definiteness.value
    if report.certificate is not None:
        out["certificate"] = certificate_dict(report.certificate)
    if timings:
        out["timings"] = report.timings
    return out


def certificate_dict(cert) -> dict:
    return {
        "xyz": [_num(v) for v in cert.xyz],
        "gram_velocity": [[_num(v) for v in row] for row in cert.gram_velocity.rows()],
        "vertex_velocities": [[_num(v) for v in q] for q in cert.vertex_velocities],
        "residual": _num(cert.residual),
    }


def _print_report(path, report: DecisionReport) -> None:
    print(f"{path}: {report.verdict.value} ({report.mode} mode)")
    print(f"  {MESSAGES[report.verdict]}")
    if report.diagnosis:
        print(f"  diagnosis: {report.diagnosis.condition.value}: {report.diagnosis.detail}")
    inv = report.invariants
    if inv:
        print(f"  S = {_txt(inv.S)}")
        print(f"  T = {_txt(inv.T)}")
        print(f"  Delta = {_txt(inv.delta)}")
        if inv.J is not None:
            print(f"  J = {_txt(inv.J)}")
        if inv.k is not None:
            print(f"  k = {inv.k:.12g} (k = {inv.k:.4f})")
    if report.certificate:
        rows = report.certificate.gram_velocity.rows()
        print("  certificate omegadot:")
        for row in rows:
            print("    [" + ", ".join(_txt(v) for v in row) + "]")


def _options(args) -> DecideOptions:
    exact = None
    if getattr(args, "exact", False):
        exact = True
    elif getattr(args, "float", False):
        exact = False
    return DecideOptions(exact=exact, tolerance=args.tolerance, seed=args.seed)


def _decide_one(path: str, opts: DecideOptions):
    fw = read_framework(path)
    return decide(fw, opts)


def cmd_decide(args) -> int:
    opts = _options(args)
    paths = args.paths
    if args.jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_decide_one, paths, [opts] * len(paths)))
    else:
        results = [_decide_one(p, opts) for p in paths]
    if args.json:
        payload = [dict(path=str(p), **report_dict(r, args.timings)) for p, r in zip(paths, results)]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
    else:
        for p, r in zip(paths, results):
            _print_report(p, r)
    return max(EXIT_CODES[r.verdict] for r in results)


def cmd_invariants(args) -> int:
    obj = read_document(args.path)
    if isinstance(obj, PeriodicFramework):
        report = decide(obj, _options(args))
        if report.cubic is None:
            print(f"{args.path}: no cubic ({report.diagnosis.detail})", file=sys.stderr)
            return EXIT_CODES[report.verdict]
        cubic = report.cubic
        inv = report.invariants
    else:
        cubic = determinant_cubic(obj) if isinstance(obj, GramVelocityPencil) else obj
        inv = invariants(cubic)
    data = invariants_dict(inv, cubic)
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        for key in ("S", "T", "delta", "J", "k"):
            value = data[key]
            print(f"{key} = {value}")
        if inv.singular:
            print("cubic is singular")
        print("cubic: " + " + ".join(f"({v})*{m}" for m, v in data["cubic"].items()))
    return 2 if inv.singular else 0


def cmd_family(args) -> int:
    lam = Fraction(args.lam)
    write_framework(family_framework(lam), args.out)
    print(f"wrote family framework lambda={format_number(lam)} to {args.out}")
    return 0


def cmd_deform(args) -> int:
    report = decide(read_framework(args.path), _options(args))
    if report.certificate is None:
        print(f"{args.path}: {report.verdict.value}, no auxetic infinitesimal deformation")
        return EXIT_CODES[report.verdict]
    cert = certificate_dict(report.certificate)
    if args.json:
        print(json.dumps(cert, indent=2))
    else:
        print("omegadot =")
        for row in cert["gram_velocity"]:
            print("  [" + ", ".join(str(v) for v in row) + "]")
        for i, q in enumerate(cert["vertex_velocities"], start=1):
            print(f"qdot_{i} = [" + ", ".join(str(v) for v in q) + "]")
        print(f"residual = {cert['residual']}")
    return 0


def trajectory_records(traj):
    for pt in traj.points:
        g = pt.framework.gram.rows()
        yield {
            "tau": float(f"{pt.tau:.12g}"),
            "gram": [float(f"{float(v):.12g}") for row in g for v in row],
            "coords": [float(f"{float(c):.12g}") for v in pt.framework.vertices[1:] for c in v],
            "drift": float(f"{pt.drift:.12g}"),
        }


def cmd_simulate(args) -> int:
    fw = read_framework(args.path)
    traj = simulate_path(fw, step=args.tau, steps=args.steps, opts=_options(args))
    lines = [json.dumps(r) for r in trajectory_records(traj)]
    if args.out:
        Path(args.out).write_text("\n".join(lines) + "\n")
        print(f"wrote {len(lines)} records to {args.out}")
    else:
        print("\n".join(lines))
    if traj.stop_reason:
        print(f"stopped early: {traj.stop_reason}", file=sys.stderr)
    return 0


def curve_polylines(cubic: TernaryCubic, center, radius: float = 3.0, samples: int = 241):
    """Zero set of the cubic in the affine chart through ``center`` orthogonal to it."""
    import contourpy

    c = np.asarray(center, dtype=float)
    c = c / np.linalg.norm(c)
    _, _, vt = np.linalg.svd(c[None, :])
    e1, e2 = vt[1], vt[2]
    u = np.linspace(-radius, radius, samples)
    uu, vv = np.meshgrid(u, u)
    pts = c[None, None, :] + uu[..., None] * e1 + vv[..., None] * e2
    cf = cubic.to_float()
    vals = cf(pts[..., 0], pts[..., 1], pts[..., 2])
    lines = contourpy.contour_generator(u, u, vals).lines(0.0)
    return {"chart": {"origin": c.tolist(), "basis": [e1.tolist(), e2.tolist()]},
            "polylines": [np.round(line, 12).tolist() for line in lines]}


def cmd_plot(args) -> int:
    obj = read_document(args.path)
    center = (1.0, 1.0, 1.0)
    if isinstance(obj, PeriodicFramework):
        report = decide(obj, _options(args))
        if report.cubic is None:
            print(f"{args.path}: no cubic ({report.diagnosis.detail})", file=sys.stderr)
            return EXIT_CODES[report.verdict]
        cubic = report.cubic
        if report.preimage is not None:
            center = report.preimage
    else:
        cubic = determinant_cubic(obj) if isinstance(obj, GramVelocityPencil) else obj
    data = curve_polylines(cubic, center, args.radius, args.samples)
    data["cubic"] = {_monomial_name(e): _num(v) for e, v in zip(MONOMIALS, cubic.coeffs)}
    Path(args.out).write_text(json.dumps(data) + "\n")
    print(f"wrote {len(data['polylines'])} polylines to {args.out}")
    return 0


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


class _Parser(argparse.ArgumentParser):
    # argparse would exit with 2, which collides with the NOT_REGULAR code
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="auxetica", description=__doc__.splitlines()[0])
    common = _Parser(add_help=False)
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true",
                      help=f"exact rational arithmetic (default for n <= {EXACT_MAX_N})")
    mode.add_argument("--float", action="store_true", help="floating point arithmetic")
    common.add_argument("--tolerance", type=_positive_float, default=1e-10,
                        help="relative threshold for degenerate definiteness tests")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decide", parents=[common], help="decide auxetic capability")
    p.add_argument("paths", nargs="+")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("invariants", parents=[common], help="cubic, S, T, Delta, J, k")
    p.add_argument("path")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("family", help="write the two-orbit test framework F(lambda)")
    p.add_argument("lam", metavar="LAMBDA")
    p.add_argument("out")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("deform", parents=[common], help="print an auxetic infinitesimal deformation")
    p.add_argument("path")
    p.set_defaults(func=cmd_deform)

    p = sub.add_parser("simulate", parents=[common], help="simulate an auxetic trajectory")
    p.add_argument("path")
    p.add_argument("--tau", type=_positive_float, default=1e-3)
    p.add_argument("--steps", type=int, default=50)
    p.add_argument("--out")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("plot", parents=[common], help="sample the determinant curve as polylines")
    p.add_argument("path")
    p.add_argument("out")
    p.add_argument("--radius", type=_positive_float, default=3.0)
    p.add_argument("--samples", type=int, default=241)
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CubicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except (DocumentError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (DecisionError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
