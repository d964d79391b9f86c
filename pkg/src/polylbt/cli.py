"""Command line: ``python -m polylbt {fvector,verify,scan,construct}``.

Exit codes: 0 success, 1 verification failure or mismatch, 2 usage/domain error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import bounds, verify
from .catalog import FamilySpec, build
from .construct import evaluate_recipe
from .errors import DomainError, GeometryError, InvalidIncidence
from .lattice import build_lattice

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FAMILY_PARAMS = {
    "SIMPLEX": (), "TRIPLEX": ("s",), "J": ("ell_plus_1",), "A": (), "SIGMA": (), "C": (),
    "TSTAR_DUAL": ("a", "m"), "T_M_DPLUS2": ("a", "m"), "PYR_OVER_J": ("t",),
    "CONJ": ("i", "s"),
}

# formula name -> (callable(args, k), k range, required flags)
FORMULAS = {
    "theta": (lambda a, k: bounds.theta(a.d, a.s, k), "all", ("s",)),
    "eta": (lambda a, k: bounds.eta(a.n, a.d, k), "all", ("n",)),
    "rho": (lambda a, k: bounds.rho(a.a, a.m, a.d, k), "all", ("a", "m")),
    "tau": (lambda a, k: bounds.tau(a.n, a.d, k), "inner", ("n",)),
    "zeta": (lambda a, k: bounds.zeta(a.d, a.s, k), "inner", ("s",)),
    "sigma": (lambda a, k: bounds.sigma_fvector(a.d, k), "all", ()),
    "pyr_over_j": (lambda a, k: bounds.pyr_over_J(a.d, a.t, k), "all", ("t",)),
    "lbt_simple": (lambda a, k: bounds.lbt_simple(a.d, a.facets, k), "simple", ("facets",)),
    "conj": (lambda a, k: bounds.conjecture_f(a.i, a.d, a.s, k), "all", ("i", "s")),
}


class UsageError(Exception):
    pass


def write_output(text: str, out: str | None):
    """Print, or write ``out`` atomically (temp file in the same directory, then rename)."""
    if not out:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(out))
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _ints(xs) -> str:
    return " ".join(str(x) for x in xs)


# --------------------------------------------------------------------------

def cmd_fvector(args) -> int:
    if bool(args.family) == bool(args.formula):
        raise UsageError("give exactly one of --family or --formula")
    if args.d is None:
        raise UsageError("--d is required")
    rows = []
    if args.formula:
        fn, krange, needed = FORMULAS[args.formula]
        for flag in needed:
            if getattr(args, flag) is None:
                raise UsageError(f"--formula {args.formula} needs --{flag.replace('_', '-')}")
        ks = {"all": range(args.d), "inner": range(1, args.d - 1),
              "simple": range(args.d - 1)}[krange]
        rows.append(("formula", [fn(args, k) for k in ks]))
        ok = True
    else:
        fam = args.family.upper()
        params = {}
        for key in FAMILY_PARAMS[fam]:
            val = getattr(args, key)
            if val is None:
                raise UsageError(f"--family {args.family} needs --{key.replace('_', '-')}")
            params[key] = val
        b = build(FamilySpec(fam, args.d, params))
        method = args.method or "both"
        if method in ("formula", "both"):
            rows.append(("formula", list(b.expected.proper)))
        if method in ("lattice", "both"):
            rows.append(("lattice", list(build_lattice(b.incidence).fvector().proper)))
        ok = len({tuple(v) for _, v in rows}) == 1
    fmt = args.format or "text"
    if fmt == "json":
        text = json.dumps({"d": args.d, "fvectors": {m: v for m, v in rows}, "match": ok})
    elif fmt == "csv":
        width = max(len(v) for _, v in rows)
        head = "method," + ",".join(f"f{k}" for k in range(width))
        text = "\n".join([head] + [m + "," + ",".join(map(str, v)) for m, v in rows])
    else:
        text = "\n".join(_ints(v) for _, v in rows)
    write_output(text, args.out)
    if not ok:
        print("formula and lattice f-vectors differ", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def _run_suite(args) -> verify.Report:
    name = args.suite
    if name == "dplus2":
        if args.d is not None:
            ns = [args.n] if args.n is not None else range(2 * args.d + 1, 3 * args.d)
            return verify.merge("dplus2", [verify.suite_dplus2_case(args.d, n) for n in ns])
        return verify.dplus2_all(args.d_max or 7)
    if name == "all":
        return verify.run_all(args.d_max or 5)
    if args.d_max is not None:
        return verify.SUITES[name](args.d_max)
    return verify.SUITES[name]()


def cmd_verify(args) -> int:
    rep = _run_suite(args)
    fmt = args.format or "json"
    if fmt == "text":
        lines = [rep.summary()] + [f"FAIL {c.params}: {c.witness}" for c in rep.failed()]
        text = "\n".join(lines)
    elif fmt == "csv":
        lines = ["params,expected,actual,pass"]
        lines += [",".join(json.dumps(x).replace(",", ";") for x in
                           (c.params, c.expected, c.actual, c.passed)) for c in rep.cases]
        text = "\n".join(lines)
    else:
        text = rep.dumps()
    write_output(text, args.out)
    if not rep.ok:
        print(rep.summary(), file=sys.stderr)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_scan(args) -> int:
    if args.d_min is None or args.d_max is None:
        raise UsageError("scan needs --d-min and --d-max")
    rows, rep = verify.scan_conjecture(args.d_min, args.d_max)
    fmt = args.format or "csv"
    if fmt == "json":
        text = json.dumps({"rows": rows, "report": rep.to_json()})
    elif fmt == "text":
        text = "\n".join(" ".join(str(r[c]) if r[c] != "" else "-" for c in verify.CSV_COLUMNS)
                         for r in rows)
    else:
        text = verify.table_csv(rows)
    write_output(text, args.out)
    for c in rep.failed():
        print(f"FAIL {c.params}: {c.witness}", file=sys.stderr)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_construct(args) -> int:
    if args.recipe == "-":
        recipe = json.load(sys.stdin)
    else:
        with open(args.recipe) as fh:
            recipe = json.load(fh)
    inc = evaluate_recipe(recipe)
    fv = build_lattice(inc).fvector()
    fmt = args.format or "json"
    if fmt == "text":
        text = _ints(fv.proper)
    else:
        text = json.dumps({"incidence": inc.to_json(), "fvector": list(fv.proper)})
    write_output(text, args.out)
    return EXIT_OK


# --------------------------------------------------------------------------

def _global_flags(p, suppress):
    default = argparse.SUPPRESS if suppress else None
    p.add_argument("--format", choices=("json", "csv", "text"), default=default)
    p.add_argument("--out", metavar="PATH", default=default)
    p.add_argument("--seedless", action="store_true",
                   default=argparse.SUPPRESS if suppress else False,
                   help="accepted for reproducibility scripts; nothing here is random")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polylbt", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    fv = sub.add_parser("fvector", parents=[common], help="f-vector of a family or formula")
    fv.add_argument("--family", choices=[f.lower() for f in FAMILY_PARAMS])
    fv.add_argument("--formula", choices=sorted(FORMULAS))
    fv.add_argument("--method", choices=("formula", "lattice", "both"))
    fv.add_argument("--d", type=int)
    for flag in ("s", "n", "a", "m", "t", "i", "facets"):
        fv.add_argument(f"--{flag}", type=int)
    fv.add_argument("--ell-plus-1", dest="ell_plus_1", type=int)
    fv.set_defaults(func=cmd_fvector)

    ve = sub.add_parser("verify", parents=[common], help="run a verification suite")
    ve.add_argument("--suite", required=True, choices=sorted(verify.SUITES) + ["dplus2", "all"])
    ve.add_argument("--d-max", type=int)
    ve.add_argument("--d", type=int)
    ve.add_argument("--n", type=int)
    ve.set_defaults(func=cmd_verify)

    sc = sub.add_parser("scan", parents=[common], help="candidate-minimiser table")
    sc.add_argument("--d-min", type=int)
    sc.add_argument("--d-max", type=int)
    sc.set_defaults(func=cmd_scan)

    co = sub.add_parser("construct", parents=[common], help="evaluate a recipe JSON")
    co.add_argument("recipe", help="path to recipe JSON, or - for stdin")
    co.set_defaults(func=cmd_construct)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))   # exits 2
    except (DomainError, GeometryError, InvalidIncidence, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
