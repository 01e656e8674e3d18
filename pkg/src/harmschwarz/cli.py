"""Command-line front end: analyze, norm, sweep, coeffs, verify.

Exit codes: 0 ok, 1 verification failure, 2 evaluation or usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys

import numpy as np

from . import families as fam
from .coeffs import g_coefficients
from .errors import HarmonicError
from .harmonic import derivative_bundle
from .norms import GridConfig, estimate
from .verify import SUITES, run_suite

JSON_DIGITS = 17
CSV_DIGITS = 12


def parse_complex(text: str) -> complex:
    """Parse ``"a+bi"`` style literals (``i`` or ``j``; ``"i"`` alone means 1j)."""
    s = text.strip().replace(" ", "").replace("I", "i").replace("i", "j")
    s = re.sub(r"(^|[+\-])j", r"\g<1>1j", s)
    try:
        return complex(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex literal: {text!r}") from None


def parse_assignment(text: str) -> tuple[str, complex]:
    if "=" not in text:
        raise argparse.ArgumentTypeError(f"expected name=value, got {text!r}")
    k, v = text.split("=", 1)
    return k.strip(), parse_complex(v)


def _params(pairs) -> dict:
    return {k: (v.real if v.imag == 0 else v) for k, v in (pairs or [])}


def _num(x):
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (complex, np.complexfloating)):
        return {"re": _num(float(x.real)), "im": _num(float(x.imag))}
    if isinstance(x, (float, np.floating)):
        return float(x)
    if isinstance(x, dict):
        return {k: _num(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_num(v) for v in x]
    if isinstance(x, np.integer):
        return int(x)
    return x


class _Encoder(json.JSONEncoder):
    def iterencode(self, o, _one_shot=False):
        return _dump(o, 0, self.indent)


def _dump(o, level, indent):
    pad = "" if indent is None else "\n" + " " * (indent * (level + 1))
    end = "" if indent is None else "\n" + " " * (indent * level)
    sep = ", " if indent is None else ","
    if isinstance(o, bool) or o is None or isinstance(o, (int, str)):
        yield json.dumps(o)
    elif isinstance(o, float):
        yield format(o, f".{JSON_DIGITS}g") if math.isfinite(o) else json.dumps(str(o))
    elif isinstance(o, dict):
        yield "{"
        for i, (k, v) in enumerate(o.items()):
            yield (sep if i else "") + pad + json.dumps(str(k)) + ": "
            yield from _dump(v, level + 1, indent)
        yield end + "}"
    else:
        yield "["
        for i, v in enumerate(o):
            yield (sep if i else "") + pad
            yield from _dump(v, level + 1, indent)
        yield end + "]"


def dumps(obj, indent: int | None = 2) -> str:
    return "".join(_dump(_num(obj), 0, indent))


def _csv_cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (float, np.floating)):
        return format(float(x), f".{CSV_DIGITS}g")
    return str(x)


def _grid(args) -> GridConfig:
    return GridConfig(
        n_theta=args.n_theta,
        n_radii=args.n_radii,
        r_max=args.r_max,
        refine=not getattr(args, "no_refine", False),
    )


# -- commands -------------------------------------------------------------------


def cmd_analyze(args, out) -> int:
    f = fam.build(args.family, **_params(args.params))
    b = derivative_bundle(f, args.at)
    doc = {
        "family": args.family,
        "point": complex(args.at),
        "omega": b.omega_value,
        "jacobian": b.jacobian,
        "p_analytic": b.p_analytic,
        "s_analytic": b.s_analytic,
        "p_hm": b.p_hm,
        "s_hm": b.s_hm,
        "q_functional": b.q_functional,
    }
    if b.p_cdo is not None:
        doc["p_cdo"] = b.p_cdo
        doc["s_cdo"] = b.s_cdo
    out.write(dumps(doc) + "\n")
    return 0


def cmd_norm(args, out) -> int:
    f = fam.build(args.family, **_params(args.params))
    est = estimate(f, args.which, args.flavor, _grid(args))
    doc = {"family": args.family, "which": args.which, "flavor": args.flavor if args.which != "bloch" else None}
    doc.update(est.as_dict())
    out.write(dumps(doc) + "\n")
    return 0


def cmd_sweep(args, out) -> int:
    spec = fam.get(args.family)
    if args.param not in spec.params:
        raise fam.ParamError(f"{args.family} has no parameter {args.param!r}")
    fixed = _params(args.params)
    ref_key = fam.SWEEP_REFERENCE.get((args.family, args.which))
    cfg = _grid(args)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["param", "reference_value", "sampled_norm", "argmax_r", "argmax_theta", "boundary_limit"])
    for value in np.linspace(args.start, args.stop, args.steps):
        p = dict(fixed, **{args.param: float(value)})
        est = estimate(fam.build(args.family, **p), args.which, args.flavor, _grid(args) if cfg is None else cfg)
        d = est.as_dict()
        ref = fam.reference(args.family, ref_key, **p) if ref_key else None
        writer.writerow([_csv_cell(x) for x in
                         (float(value), ref, d["value"], d["argmax_r"], d["argmax_theta"], d["boundary_limit"])])
    return 0


def cmd_coeffs(args, out) -> int:
    params = _params(args.params)
    f = fam.build(args.family, **params)
    b = g_coefficients(f, args.n_max)
    has_ref = "b_n" in fam.get(args.family).references
    refs = [fam.reference(args.family, "b_n", **params, n=n) if has_ref else None for n in range(1, args.n_max + 1)]
    if args.json:
        rows = [{"n": n, "b_n": complex(c), "abs": abs(c), "reference": r}
                for n, (c, r) in enumerate(zip(b, refs), start=1)]
        out.write(dumps({"family": args.family, "coefficients": rows, "max_abs": float(np.max(np.abs(b)))}) + "\n")
        return 0
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n", "re", "im", "abs", "reference"])
    for n, (c, r) in enumerate(zip(b, refs), start=1):
        writer.writerow([n] + [_csv_cell(x) for x in (c.real, c.imag, abs(c), r)])
    return 0


def cmd_verify(args, out) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = [run_suite(n, _grid(args), seed=args.seed) for n in names]
    if args.json:
        out.write(dumps({"passed": all(r.passed for r in results), "suites": [r.as_dict() for r in results]}) + "\n")
    else:
        for r in results:
            out.write(r.table() + "\n")
        for r in results:
            for c in r.failures():
                out.write(f"FAILED {r.suite}: {c.name} [{c.claim}]\n")
    return 0 if all(r.passed for r in results) else 1


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable JSON output")
    common.add_argument("--seed", type=int, default=42, help="RNG seed for random-point suites")
    common.add_argument("--r-max", type=float, default=1 - 1e-6)
    common.add_argument("--n-theta", type=int, default=256)
    common.add_argument("--n-radii", type=int, default=200)

    parser = argparse.ArgumentParser(prog="harmschwarz", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    families = sorted(fam.REGISTRY)

    p = sub.add_parser("analyze", parents=[common], help="all derivatives at one point")
    p.add_argument("family", choices=families)
    p.add_argument("params", nargs="*", type=parse_assignment, metavar="name=value")
    p.add_argument("--at", "--point", dest="at", type=parse_complex, default=0j)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("norm", parents=[common], help="sampled norm or Bloch constant")
    p.add_argument("family", choices=families)
    p.add_argument("params", nargs="*", type=parse_assignment, metavar="name=value")
    p.add_argument("--which", choices=["pre", "schwarzian", "bloch"], default="pre")
    p.add_argument("--flavor", choices=["analytic", "hm", "cdo"], default="hm")
    p.add_argument("--no-refine", action="store_true")
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("sweep", parents=[common], help="norm over a parameter range, CSV")
    p.add_argument("family", choices=families)
    p.add_argument("param")
    p.add_argument("start", type=float)
    p.add_argument("stop", type=float)
    p.add_argument("steps", type=int)
    p.add_argument("params", nargs="*", type=parse_assignment, metavar="name=value")
    p.add_argument("--which", choices=["pre", "schwarzian", "bloch"], default="pre")
    p.add_argument("--flavor", choices=["analytic", "hm", "cdo"], default="hm")
    p.add_argument("--no-refine", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("coeffs", parents=[common], help="Taylor coefficients b_n of g")
    p.add_argument("family", choices=families)
    p.add_argument("params", nargs="*", type=parse_assignment, metavar="name=value")
    p.add_argument("--n-max", type=int, default=50)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    # accept "analyze FAMILY ... at Z" as a spelling of --at Z
    argv = ["--at" if a == "at" else a for a in argv]
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (HarmonicError, KeyError, ValueError) as exc:
        out.write(dumps({"error": type(exc).__name__, "message": str(exc).strip("'\"")}) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
