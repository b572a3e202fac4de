"""Command-line front end with deterministic, machine-readable output.

Subcommands: poly, lr, pieri, spectrum, fusion, smatrix, verify.  Output is
canonical JSON (CSV for the tabular commands): keys in fixed order, floats
in shortest round-trip form, complex numbers as {"re":, "im":} pairs, and
the full parameter header plus RNG seed embedded in every payload.  Files
are written atomically.  Exit codes: 0 success, 1 computational error
(error class name on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from .errors import ComputationError
from .kernel import ModelParams
from .littlewood import lr_coefficients
from .operators import joint_spectrum
from .partitions import canonical_key, vertical_strips
from .polynomials import build_P
from .fusion import fusion_pieri, fusion_table, s_matrix
from .verification import run_suite
from . import coeffs
from .kernel import realify


def _partition_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}")


def _add_model_flags(sub: argparse.ArgumentParser, locked_only: bool, require_gp: bool = True) -> None:
    sub.add_argument("--n", type=int, required=True, help="number of rows/variables")
    sub.add_argument("--m", type=int, default=0, help="level (level-locked mode)")
    sub.add_argument("--g", type=float, required=require_gp, default=0.8, help="coupling")
    sub.add_argument("--p", type=float, required=require_gp, default=0.3, help="nome in (-1, 1)")
    sub.add_argument("--precision", default="double", help="double or mp<digits>")
    if locked_only:
        return
    sub.add_argument("--alpha", type=float, default=None, help="phase scale (free mode)")
    sub.add_argument(
        "--level-locked",
        action="store_true",
        help="lock alpha = 2*pi/(m + n*g) instead of taking --alpha",
    )


def _add_output_flags(sub: argparse.ArgumentParser, formats=("json",)) -> None:
    sub.add_argument("--out", default=None, help="output path (default: stdout)")
    sub.add_argument("--format", choices=formats, default="json")
    sub.add_argument("--seed", type=int, default=0, help="RNG seed, recorded in output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellfusion",
        description="Elliptic difference operators on partitions and level-truncated fusion rings",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("poly", help="monomial expansion of an eigenpolynomial")
    _add_model_flags(sp, locked_only=False)
    _add_output_flags(sp)
    sp.add_argument("--mu", type=_partition_arg, required=True)

    sp = subs.add_parser("lr", help="structure coefficients of a basis product")
    _add_model_flags(sp, locked_only=False)
    _add_output_flags(sp, formats=("json", "csv"))
    sp.add_argument("--lam", type=_partition_arg, required=True)
    sp.add_argument("--mu", type=_partition_arg, required=True)

    sp = subs.add_parser("pieri", help="strip weights for multiplication by e_r")
    _add_model_flags(sp, locked_only=False)
    _add_output_flags(sp, formats=("json", "csv"))
    sp.add_argument("--lam", type=_partition_arg, required=True)
    sp.add_argument("--r", type=int, required=True)

    sp = subs.add_parser("spectrum", help="joint spectrum of the truncated operators")
    _add_model_flags(sp, locked_only=True)
    _add_output_flags(sp)

    sp = subs.add_parser("fusion", help="fusion structure constants over the level cone")
    _add_model_flags(sp, locked_only=True)
    _add_output_flags(sp, formats=("json", "csv"))
    sp.add_argument("--route", choices=("verlinde", "lr", "both"), default="verlinde")

    sp = subs.add_parser("smatrix", help="spectral transform, its inverse, and checks")
    _add_model_flags(sp, locked_only=True)
    _add_output_flags(sp)

    sp = subs.add_parser("verify", help="run a verification suite")
    _add_model_flags(sp, locked_only=True, require_gp=False)
    _add_output_flags(sp)
    sp.add_argument("--suite", choices=("limits", "ring", "spectrum", "all"), default="all")

    return parser


def _make_params(args, parser: argparse.ArgumentParser, locked_only: bool) -> ModelParams:
    if locked_only or getattr(args, "level_locked", False):
        if getattr(args, "alpha", None) is not None and getattr(args, "level_locked", False):
            parser.error("--alpha conflicts with --level-locked")
        return ModelParams.locked(args.n, args.m, args.g, args.p, precision=args.precision)
    if args.alpha is None:
        parser.error("free mode needs --alpha (or pass --level-locked)")
    return ModelParams.free(
        args.n, g=args.g, p=args.p, alpha=args.alpha, m=args.m, precision=args.precision
    )


def _cnum(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out_path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".ellfusion-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, out_path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit_json(payload: dict, out_path: str | None) -> None:
    _emit(json.dumps(payload, indent=2) + "\n", out_path)


def _emit_csv(rows: list[list], header: list[str], out_path: str | None) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(str(x) for x in row))
    _emit("\n".join(lines) + "\n", out_path)


def _header(command: str, params: ModelParams, seed: int) -> dict:
    return {"command": command, "params": params.as_dict(), "seed": seed}


def _fmt_partition(lam) -> str:
    return " ".join(str(x) for x in lam)


def _cmd_poly(args, parser) -> int:
    params = _make_params(args, parser, locked_only=False)
    P = build_P(args.mu, params)
    payload = _header("poly", params, args.seed)
    payload["mu"] = list(args.mu)
    payload["coeffs"] = [
        {"key": list(k), "value": v}
        for k, v in sorted(P.items(), key=lambda kv: canonical_key(kv[0]))
    ]
    _emit_json(payload, args.out)
    return 0


def _cmd_lr(args, parser) -> int:
    params = _make_params(args, parser, locked_only=False)
    table = lr_coefficients(args.lam, args.mu, params)
    entries = [
        {"nu": list(k), "value": v}
        for k, v in sorted(table.items(), key=lambda kv: canonical_key(kv[0]))
    ]
    if args.format == "csv":
        _emit_csv([[_fmt_partition(e["nu"]), e["value"]] for e in entries], ["nu", "value"], args.out)
        return 0
    payload = _header("lr", params, args.seed)
    payload["lam"] = list(args.lam)
    payload["mu"] = list(args.mu)
    payload["entries"] = entries
    _emit_json(payload, args.out)
    return 0


def _cmd_pieri(args, parser) -> int:
    params = _make_params(args, parser, locked_only=False)
    if params.level_locked:
        table = fusion_pieri(args.lam, args.r, params)
    else:
        table = {
            nu: realify(coeffs.psi_prime(tuple(args.lam), nu, params))
            for nu in vertical_strips(tuple(args.lam), args.r)
        }
    entries = [
        {"nu": list(k), "value": v}
        for k, v in sorted(table.items(), key=lambda kv: canonical_key(kv[0]))
    ]
    if args.format == "csv":
        _emit_csv([[_fmt_partition(e["nu"]), e["value"]] for e in entries], ["nu", "value"], args.out)
        return 0
    payload = _header("pieri", params, args.seed)
    payload["lam"] = list(args.lam)
    payload["r"] = args.r
    payload["entries"] = entries
    _emit_json(payload, args.out)
    return 0


def _cmd_spectrum(args, parser) -> int:
    params = _make_params(args, parser, locked_only=True)
    spec = joint_spectrum(params, seed=args.seed)
    payload = _header("spectrum", params, args.seed)
    payload["labels"] = [list(nu) for nu in spec.labels]
    payload["points"] = [
        {
            "nu": list(nu),
            "e": [_cnum(z) for z in spec.points[nu].e],
            "dual_norm": spec.points[nu].dual_norm,
            "eigenvector": [
                {"lam": list(lam), "value": _cnum(spec.points[nu].eigenvector[lam])}
                for lam in spec.labels
            ],
        }
        for nu in spec.labels
    ]
    payload["homotopy_steps"] = list(spec.homotopy_steps)
    _emit_json(payload, args.out)
    return 0


def _fusion_payload(table) -> list[dict]:
    out = []
    for lam in table.labels:
        for mu in table.labels:
            entries = table.entries[(lam, mu)]
            out.append(
                {
                    "lam": list(lam),
                    "mu": list(mu),
                    "entries": [
                        {"kappa": list(k), "value": v}
                        for k, v in sorted(entries.items(), key=lambda kv: canonical_key(kv[0]))
                    ],
                    "flagged": [
                        list(k)
                        for k in sorted(table.flagged.get((lam, mu), ()), key=canonical_key)
                    ],
                }
            )
    return out


def _cmd_fusion(args, parser) -> int:
    params = _make_params(args, parser, locked_only=True)
    payload = _header("fusion", params, args.seed)
    payload["route"] = args.route
    if args.route in ("verlinde", "lr"):
        table = fusion_table(params, route=args.route, seed=args.seed)
        payload["table"] = _fusion_payload(table)
        if args.format == "csv":
            rows = []
            for block in payload["table"]:
                for e in block["entries"]:
                    rows.append(
                        [
                            _fmt_partition(block["lam"]),
                            _fmt_partition(block["mu"]),
                            _fmt_partition(e["kappa"]),
                            e["value"],
                        ]
                    )
            _emit_csv(rows, ["lam", "mu", "kappa", "value"], args.out)
            return 0
    else:
        t_v = fusion_table(params, route="verlinde", seed=args.seed)
        t_lr = fusion_table(params, route="lr", seed=args.seed)
        payload["table"] = _fusion_payload(t_v)
        payload["lr_table"] = _fusion_payload(t_lr)
        payload["diff"] = {"max_abs": t_v.max_difference(t_lr)}
        if args.format == "csv":
            parser.error("--format csv is not available with --route both")
    _emit_json(payload, args.out)
    return 0


def _cmd_smatrix(args, parser) -> int:
    params = _make_params(args, parser, locked_only=True)
    sm = s_matrix(params, seed=args.seed)
    payload = _header("smatrix", params, args.seed)
    payload["labels"] = [list(nu) for nu in sm.labels]
    payload["S"] = [[_cnum(z) for z in row] for row in sm.S]
    payload["Sinv"] = [[_cnum(z) for z in row] for row in sm.Sinv]
    payload["normalization"] = sm.normalization
    payload["identity_residual"] = sm.identity_residual()
    payload["det_magnitude"] = sm.det_magnitude()
    payload["det_closed_form"] = sm.det_closed_form()
    payload["det_residual"] = sm.det_residual()
    _emit_json(payload, args.out)
    return 0


def _cmd_verify(args, parser) -> int:
    params = _make_params(args, parser, locked_only=True)
    reports = run_suite(args.suite, params.n, params.m, seed=args.seed)
    width = max(len(r.comparison) for r in reports)
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(
            f"{status}  {r.comparison:<{width}}  max_abs={r.max_abs:.3e}  "
            f"max_rel={r.max_rel:.3e}  tol={r.tol:.1e}"
        )
    passed = all(r.passed for r in reports)
    print(f"{'OK' if passed else 'FAILED'}: {sum(r.passed for r in reports)}/{len(reports)} checks passed")
    if args.out:
        payload = _header("verify", params, args.seed)
        payload["suite"] = args.suite
        payload["reports"] = [r.as_dict() for r in reports]
        payload["passed"] = passed
        _emit_json(payload, args.out)
    return 0 if passed else 1


_HANDLERS = {
    "poly": _cmd_poly,
    "lr": _cmd_lr,
    "pieri": _cmd_pieri,
    "spectrum": _cmd_spectrum,
    "fusion": _cmd_fusion,
    "smatrix": _cmd_smatrix,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args, parser)
    except SystemExit as exc:  # parser.error inside a handler
        return int(exc.code or 0)
    except ComputationError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
