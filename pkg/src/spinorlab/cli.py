"""Batch command-line front-end.

Commands: classify, decompose, map, homotopy, mdo, verify.  Exit codes:
0 success, 1 classification produced but with near-degenerate flags,
2 invalid input, 3 identity-suite failure.  The SPINORLAB_TOL environment
variable overrides the default tolerance (1e-9); report order always equals
input order.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import bilinear, homotopy, io, lounesto, mdo, plane, rim, spinor
from .errors import IntegrabilityViolation, SpinorlabError
from .spinor import DEFAULT_TOL
from .suites import SuiteConfig, run_suites

EXIT_OK = 0
EXIT_FLAGGED = 1
EXIT_INVALID_INPUT = 2
EXIT_SUITE_FAILURE = 3


def _tol_default() -> float:
    env = os.environ.get("SPINORLAB_TOL")
    if env is None:
        return DEFAULT_TOL
    try:
        tol = float(env)
    except ValueError as exc:
        raise io.InputError(f"SPINORLAB_TOL={env!r} is not a number") from exc
    if tol <= 0:
        raise io.InputError("SPINORLAB_TOL must be positive")
    return tol


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spinorlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="Lounesto class of each input spinor")
    p.add_argument("--input", required=True)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--output", default=None)

    p = sub.add_parser("decompose", help="plane coordinates against a base spinor")
    p.add_argument("--input", required=True)
    p.add_argument("--base", required=True)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--output", default=None)

    p = sub.add_parser("map", help="block-scalar map between Dirac and MDO images")
    p.add_argument("--direction", required=True, choices=["dirac-to-mdo", "mdo-to-dirac"])
    p.add_argument("--params", required=True)
    p.add_argument("--coeffs", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--output", default=None)

    p = sub.add_parser("homotopy", help="straight-line path between two spinors")
    p.add_argument("--from", dest="from_path", required=True)
    p.add_argument("--to", dest="to_path", required=True)
    p.add_argument("--base", required=True)
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--output", default=None)

    p = sub.add_parser("mdo", help="construct a dual-helicity spinor and its residuals")
    p.add_argument("--momentum", required=True)
    p.add_argument("--conj", choices=["S", "A"], default="S")
    p.add_argument("--helicity", choices=["+", "-"], default="+")
    p.add_argument("--output", default=None)

    p = sub.add_parser("verify", help="run the randomized identity suites")
    p.add_argument(
        "--suite",
        required=True,
        choices=["clifford", "fpk", "rim", "plane", "homotopy", "mdo", "props", "all"],
    )
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--output", default=None)
    return parser


def _emit(report: dict, output: str | None) -> None:
    text = io.write_report(report, output)
    if output is None:
        sys.stdout.write(text)


def _cmd_classify(args) -> int:
    tol = args.tol if args.tol is not None else _tol_default()
    opt = lounesto.ClassifyOptions(tol=tol)
    psis = io.load_spinors(args.input)
    rows = []
    flagged = False
    for i in range(psis.shape[0]):
        b = bilinear.compute(psis[i])
        try:
            cls = lounesto.classify(b, opt)
        except SpinorlabError as exc:
            rows.append({"id": i, "error": type(exc).__name__, "detail": str(exc)})
            continue
        res = bilinear.fpk_residuals(b)
        near = lounesto.bilinears_near_degenerate(b, opt)
        rows.append(
            {
                "id": i,
                "lounesto_class": int(cls),
                "regular": cls.regular,
                "near_degenerate": near,
                "A": float(np.real(b.A)),
                "B": float(np.real(b.B)),
                "J": [float(x) for x in np.real(b.J)],
                "K": [float(x) for x in np.real(b.K)],
                "S": [[float(x) for x in row] for row in np.real(b.S)],
                "fpk_residuals": [float(x) for x in res],
            }
        )
        flagged = flagged or near
    report = {"command": "classify", "config": {"tol": tol, "input": str(args.input)}, "rows": rows}
    _emit(report, args.output)
    return EXIT_FLAGGED if flagged else EXIT_OK


def _cmd_decompose(args) -> int:
    tol = args.tol if args.tol is not None else _tol_default()
    opt = lounesto.ClassifyOptions(tol=tol)
    psis = io.load_spinors(args.input)
    base = io.load_spinors(args.base)[0]
    base_cov = bilinear.compute(base)
    a_val = float(np.real(base_cov.A))
    b_val = float(np.real(base_cov.B))
    rows = []
    flagged = False
    for i in range(psis.shape[0]):
        try:
            coords = plane.decompose(psis[i], base)
        except SpinorlabError as exc:
            rows.append({"id": i, "error": type(exc).__name__, "detail": str(exc)})
            continue
        res = plane.decomposition_residuals(psis[i], base, coords)
        row = {
            "id": i,
            "r1": spinor.complex_to_json(coords.r1),
            "r2": spinor.complex_to_json(coords.r2),
            "residuals": [res[0], res[1]],
        }
        try:
            cls = lounesto.classify_by_coefficients(coords.r1, coords.r2, a_val, b_val, opt)
            near = lounesto.near_degenerate(coords.r1, coords.r2, a_val, b_val, opt)
            row.update(
                {"lounesto_class": int(cls), "regular": cls.regular, "near_degenerate": near}
            )
            flagged = flagged or near
        except SpinorlabError as exc:
            row.update({"error": type(exc).__name__, "detail": str(exc)})
        rows.append(row)
    report = {
        "command": "decompose",
        "config": {"tol": tol, "input": str(args.input), "base": str(args.base)},
        "base": {"A": a_val, "B": b_val},
        "rows": rows,
    }
    _emit(report, args.output)
    return EXIT_FLAGGED if flagged else EXIT_OK


def _cmd_map(args) -> int:
    tol = args.tol if args.tol is not None else _tol_default()
    a, b = io.load_params(args.params)
    params = rim.validate(a, b, tol)
    inputs = io.load_coeff_inputs(args.coeffs)
    psi = io.load_spinors(args.input)[0]
    cov = bilinear.from_scalars(
        inputs["A"], inputs["B"], [0.0] * 4, [0.0] * 4, np.zeros((4, 4))
    )
    c = plane.coefficient_set(
        params, cov, inputs["M"], inputs["m"], inputs["theta"], inputs["sign"], tol
    )
    mapped = plane.map_dirac_mdo(psi, c, args.direction)
    reverse = "mdo-to-dirac" if args.direction == "dirac-to-mdo" else "dirac-to-mdo"
    back = plane.map_dirac_mdo(mapped, c, reverse)
    roundtrip = float(np.linalg.norm(back - psi))
    chi = plane.chi_factors(c)
    report = {
        "command": "map",
        "config": {
            "tol": tol,
            "direction": args.direction,
            "params": str(args.params),
            "coeffs": str(args.coeffs),
            "input": str(args.input),
        },
        "chi1": spinor.complex_to_json(chi.chi1),
        "chi2": spinor.complex_to_json(chi.chi2),
        "mapped": spinor.to_json(mapped),
        "roundtrip_residual": roundtrip,
    }
    _emit(report, args.output)
    return EXIT_OK


def _cmd_homotopy(args) -> int:
    tol = args.tol if args.tol is not None else _tol_default()
    opt = lounesto.ClassifyOptions(tol=tol)
    psi = io.load_spinors(args.from_path)[0]
    phi = io.load_spinors(args.to_path)[0]
    base = io.load_spinors(args.base)[0]
    base_cov = bilinear.compute(base)
    a_val = float(np.real(base_cov.A))
    b_val = float(np.real(base_cov.B))
    psi_c = plane.decompose(psi, base)
    phi_c = plane.decompose(phi, base)
    path = homotopy.spinor_homotopy(psi_c, phi_c)
    steps = max(args.steps, 1)
    rows = []
    for i in range(steps + 1):
        t = i / steps
        coords = homotopy.eval_path(path, psi_c.r1, t)
        wt = homotopy.multiplier_at(path, t)
        degenerate = path.degenerate_t is not None and abs(t - path.degenerate_t) <= 1.0 / (2 * steps)
        row = {
            "t": t,
            "coords": {
                "r1": spinor.complex_to_json(coords.r1),
                "r2": spinor.complex_to_json(coords.r2),
            },
            "multiplier": spinor.complex_to_json(wt),
            "degenerate": degenerate,
        }
        try:
            cls = lounesto.classify_by_coefficients(coords.r1, coords.r2, a_val, b_val, opt)
            row["lounesto_class"] = int(cls)
            row["regular"] = cls.regular
        except SpinorlabError as exc:
            row["error"] = type(exc).__name__
        rows.append(row)
    transition = homotopy.class_transition(path, a_val, b_val, opt, steps=steps)
    report = {
        "command": "homotopy",
        "config": {
            "tol": tol,
            "from": str(args.from_path),
            "to": str(args.to_path),
            "base": str(args.base),
            "steps": steps,
        },
        "base": {"A": a_val, "B": b_val},
        "degenerate_t": path.degenerate_t,
        "rows": rows,
        "transition": None
        if transition is None
        else {
            "t": transition[0],
            "class_before": int(transition[1]),
            "class_after": int(transition[2]),
        },
    }
    _emit(report, args.output)
    return EXIT_OK


def _cmd_mdo(args) -> int:
    payload = io.load_momentum(args.momentum)
    mom = mdo.Momentum(payload["m"], payload["p"], payload["theta"], payload["phi"])
    hel = +1 if args.helicity == "+" else -1
    e = mdo.elko(mom, hel, args.conj)
    res, eta = mdo.diraclike_residual(e, mom)
    chirality = mdo.chirality_current_residuals(e, mom)
    inv, comm = mdo.xi_checks(mom)
    ev_top, ev_bottom = mdo.dual_helicity_eigenvalues(e, mom)
    d = spinor.dirac_dual(e.spinor)
    report = {
        "command": "mdo",
        "config": {
            "momentum": str(args.momentum),
            "conj": args.conj,
            "helicity": args.helicity,
        },
        "energy": mom.E,
        "spinor": spinor.to_json(e.spinor),
        "diraclike_residual": res,
        "diraclike_sign": eta,
        "chirality_current_residuals": [float(x) for x in chirality],
        "xi_involution_error": inv,
        "xi_commutator_error": comm,
        "helicity_eigenvalues": {"top": ev_top, "bottom": ev_bottom},
        "dirac_dual_norm": spinor.complex_to_json(complex(d @ e.spinor)),
        "mdo_dual_norm": spinor.complex_to_json(mdo.mdo_norm(e, mom)),
    }
    _emit(report, args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    tol = args.tol if args.tol is not None else _tol_default()
    cfg = SuiteConfig(trials=args.trials, seed=args.seed, tol=tol)
    report = run_suites([args.suite], cfg)
    report = {"command": "verify", **report}
    _emit(report, args.output)
    return EXIT_OK if report["pass"] else EXIT_SUITE_FAILURE


_COMMANDS = {
    "classify": _cmd_classify,
    "decompose": _cmd_decompose,
    "map": _cmd_map,
    "homotopy": _cmd_homotopy,
    "mdo": _cmd_mdo,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (io.InputError, IntegrabilityViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except SpinorlabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
