"""Command-line front end.

    pathstruve eval-struve --k 1 --nu 0 --c 0 --x 2
    pathstruve eval-wright --spec '{"upper":[[1,1]],"lower":[[1,1]]}' --z 1
    pathstruve pathway --family power --beta 1 --eta 1 --alpha 0 --a 1 --x 2
    pathstruve verify --case all --format json --out report.json

Exit codes: 0 ok, 2 bad flags, 3 evaluation error, 4 a verification FAILed.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import time

import numpy as np

from .errors import EvaluationError
from .foxwright import FoxWrightSpec, eval_fox_wright
from .identities import CaseId, Status, default_grid, verify
from .kstruve import KStruveParams, Trig, TrigKind, eval_k_struve, k_struve_array, trig_closed_form
from .pathway import PathwayParams, pathway_integral, pathway_power_closed, power_integrand

EXIT_USAGE = 2
EXIT_EVAL = 3
EXIT_VERIFY_FAIL = 4


class UsageError(Exception):
    pass


def _num(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if math.isnan(v):
        return "NaN"
    if math.isinf(v):
        return "Infinity" if v > 0 else "-Infinity"
    return format(v, ".17g")


def dumps(obj, indent: int | None = None, _level: int = 0) -> str:
    """JSON text with every float written to 17 significant digits."""
    if obj is None or isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (bool, int, float, np.floating, np.integer)):
        return _num(obj.item() if isinstance(obj, np.generic) else obj)
    pad = "" if indent is None else "\n" + " " * (indent * (_level + 1))
    end = "" if indent is None else "\n" + " " * (indent * _level)
    sep = ", " if indent is None else ","
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{" + sep.join(items) + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[" + sep.join(items) + end + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _emit(record: dict, fmt: str, out=None):
    out = out or sys.stdout
    if fmt == "json":
        out.write(dumps(record) + "\n")
        return
    cols = ["command", *record["params"], "value", "err_estimate", "work", *record.get("extra", {})]
    row = [record["command"], *record["params"].values(), record["value"], record["err_estimate"],
           record["work"], *record.get("extra", {}).values()]
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(cols)
    writer.writerow([v if isinstance(v, str) else _num(v) for v in row])


def _record(command, params, res, t0, extra=None):
    rec = {
        "command": command,
        "params": params,
        "value": res.value,
        "err_estimate": res.err_estimate,
        "work": res.work,
    }
    if extra:
        rec["extra"] = extra
    rec["wall_time_ms"] = (time.perf_counter() - t0) * 1e3
    return rec


def _pathway_params(args) -> PathwayParams:
    try:
        return PathwayParams(args.eta, args.alpha, args.a)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_eval_struve(args) -> int:
    t0 = time.perf_counter()
    try:
        sp = KStruveParams(args.k, args.nu, args.c)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = eval_k_struve(sp, args.x, args.tol)
    params = {"k": args.k, "nu": args.nu, "c": args.c, "x": args.x, "tol": args.tol}
    _emit(_record("eval-struve", params, res, t0), args.format)
    return 0


def cmd_eval_wright(args) -> int:
    t0 = time.perf_counter()
    try:
        obj = json.loads(args.spec)
        spec = FoxWrightSpec.from_json(obj)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad --spec: {exc}") from None
    z = args.z if args.z is not None else obj.get("z")
    tol = args.tol if args.tol is not None else obj.get("tol", 1e-10)
    if z is None:
        raise UsageError("--z is required (flag or 'z' key in --spec)")
    res = eval_fox_wright(spec, float(z), float(tol))
    params = {"spec": json.dumps(spec.to_json(), separators=(",", ":")), "z": float(z), "tol": float(tol)}
    _emit(_record("eval-wright", params, res, t0), args.format)
    return 0


def _family_integrand(args):
    fam = args.family
    if fam == "power":
        if args.beta is None or not args.beta > 0:
            raise UsageError("--beta > 0 is required for the power family")
        return power_integrand(args.beta), {"beta": args.beta}
    rho = args.rho
    if not rho > 0:
        raise UsageError("--rho must be positive")
    if fam == "struve":
        try:
            sp = KStruveParams(args.k, args.nu, args.c)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        stol = args.tol / 10

        def f(t):
            return np.power(t, rho - 1.0) * k_struve_array(sp, t, stol)[0]

        return f, {"rho": rho, "k": args.k, "nu": args.nu, "c": args.c}
    if args.gamma is None or not args.k > 0:
        raise UsageError("--gamma and --k > 0 are required for trig families")
    kind = TrigKind(Trig(fam), args.gamma)
    k = args.k
    return (lambda t: np.power(t, rho - 1.0) * trig_closed_form(kind, k, t)), {
        "rho": rho, "k": k, "gamma": args.gamma,
    }


def cmd_pathway(args) -> int:
    t0 = time.perf_counter()
    params = _pathway_params(args)
    if not args.x > 0:
        raise UsageError("--x must be positive")
    f, fparams = _family_integrand(args)
    res = pathway_integral(params, f, args.x, args.tol)
    extra = None
    if args.family == "power":
        closed = pathway_power_closed(params, args.beta, args.x)
        extra = {"closed_form": closed, "rel_gap": abs(res.value - closed) / max(1.0, abs(closed))}
    rec_params = {"family": args.family, "eta": args.eta, "alpha": args.alpha, "a": args.a,
                  "x": args.x, "tol": args.tol, **fparams}
    _emit(_record("pathway", rec_params, res, t0, extra), args.format)
    return 0


def _table(reports, out):
    head = f"{'case':<6}{'points':>8}  {'max err corrected':>18}  {'max err printed':>16}  status"
    out.write(head + "\n" + "-" * len(head) + "\n")
    for r in reports:
        note = f" ({r['printed_reading']} reading)" if r.get("printed_reading") else ""
        out.write(
            f"{r['case']:<6}{r['n_points']:>8}  {r['max_rel_err_corrected']:>18.3e}  "
            f"{r['max_rel_err_printed']:>16.3e}  {r['status']}{note}\n"
        )
        for fail in r["failures"][:3]:
            out.write(f"      failure at {fail['point']}: {fail['error']}\n")


def cmd_verify(args) -> int:
    ids = list(CaseId) if args.case == "all" else [CaseId(args.case)]
    reports = []
    for cid in ids:
        grid = default_grid(cid, dense=args.grid == "dense")
        rep = verify(cid, grid, tol=args.tol, quad_tol=args.quad_tol, workers=args.workers)
        reports.append(rep.to_json())
    payload = dumps(reports, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    if args.format == "json":
        sys.stdout.write(payload)
    else:
        _table(reports, sys.stdout)
    return EXIT_VERIFY_FAIL if any(r["status"] == Status.FAIL.value for r in reports) else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pathstruve", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, choices=("csv", "json"), default="csv"):
        sp.add_argument("--format", choices=choices, default=default)

    s = sub.add_parser("eval-struve", help="evaluate S^k_{nu,c}(x)")
    s.add_argument("--k", type=float, required=True)
    s.add_argument("--nu", type=float, required=True)
    s.add_argument("--c", type=float, required=True)
    s.add_argument("--x", type=float, required=True)
    s.add_argument("--tol", type=float, default=1e-10)
    fmt(s)
    s.set_defaults(func=cmd_eval_struve)

    s = sub.add_parser("eval-wright", help="evaluate a Fox-Wright function")
    s.add_argument("--spec", required=True, help='JSON {"upper":[[a,alpha],...],"lower":[[b,beta],...]}')
    s.add_argument("--z", type=float)
    s.add_argument("--tol", type=float)
    fmt(s)
    s.set_defaults(func=cmd_eval_wright)

    s = sub.add_parser("pathway", help="pathway integral of a built-in integrand family")
    s.add_argument("--family", required=True, choices=["power", "struve", "cos1m", "cosh1m", "sin", "sinh"])
    for name in ("eta", "alpha", "a", "x"):
        s.add_argument(f"--{name}", type=float, required=True)
    s.add_argument("--beta", type=float, help="power family: integrand t^(beta-1)")
    s.add_argument("--rho", type=float, default=1.0)
    s.add_argument("--k", type=float, default=1.0)
    s.add_argument("--nu", type=float, default=0.0)
    s.add_argument("--c", type=float, default=1.0)
    s.add_argument("--gamma", type=float)
    s.add_argument("--tol", type=float, default=1e-10)
    fmt(s)
    s.set_defaults(func=cmd_pathway)

    s = sub.add_parser("verify", help="check the pathway theorems against quadrature")
    s.add_argument("--case", required=True, choices=[c.value for c in CaseId] + ["all"])
    s.add_argument("--grid", choices=["default", "dense"], default="default")
    s.add_argument("--tol", type=float, default=1e-6)
    s.add_argument("--quad-tol", type=float, default=1e-9)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--out")
    fmt(s, ("table", "json"), "table")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    tol = getattr(args, "tol", None)
    if tol is not None and not 0 < tol < 1:
        parser.error("--tol must lie in (0, 1)")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except EvaluationError as exc:
        print(f"pathstruve: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_EVAL


if __name__ == "__main__":
    sys.exit(main())
