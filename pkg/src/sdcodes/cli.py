"""Command-line interface: ``sdcodes build|table|mindist|verify|factor|cosets``.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 theorem violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

import numpy as np

from . import construct
from . import mindist as md
from .codes import EUCLIDEAN, HERMITIAN, CyclicCode, code_from_descriptor, is_self_dual_cyclic, is_self_dual_linear
from .cyclo import cyclotomic_cosets
from .errors import BudgetExceeded, CodeError, InputError, TheoremViolation
from .gf import field_of_order, field_to_literal

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_THEOREM = 0, 1, 2, 3

CSV_COLUMNS = ["construction", "params", "n", "k", "bound_kind", "bound", "distance_status", "d_or_ub", "runtime_ms"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _distance_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--engine", choices=["auto", "exhaustive", "bz", "witness"], default="auto",
                   help="distance engine (default: auto)")
    p.add_argument("--budget", type=int, default=None,
                   help="engine budget: codewords for exhaustive (2^26), evaluations for bz (1e9), samples for witness (1e7)")
    p.add_argument("--witness-budget", type=int, default=100,
                   help="information sets sampled by the auxiliary witness hunt (default: 100)")
    p.add_argument("--seed", type=int, default=0, help="seed for witness search (default: 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sdcodes", description="Self-dual codes from dual-containing BCH and QR codes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="run one construction pipeline and print its report")
    b.add_argument("construction", choices=sorted(construct.PIPELINES))
    b.add_argument("--q", type=int, help="field order (thm52: q1, the square root of the field order)")
    b.add_argument("--m", type=int, help="odd extension degree")
    b.add_argument("--mu", type=int, default=1, help="divisor mu (default: 1)")
    b.add_argument("--n", type=int, help="prime length for thm72")
    b.add_argument("--route", choices=construct.ROUTES, default="auto",
                   help="distance of the doubled code directly or from its halves (default: auto)")
    _distance_flags(b)
    b.add_argument("--format", choices=["text", "json"], default="json")
    b.add_argument("--out", help="write the report to this file")

    t = sub.add_parser("table", help="tabulate a family of constructions")
    t.add_argument("family", choices=["thm51", "thm72"])
    t.add_argument("--q", type=int, default=2, help="field order for thm51 (default: 2)")
    t.add_argument("--mu", type=int, default=1, help="divisor mu for thm51 (default: 1)")
    t.add_argument("--m-max", type=int, default=5, help="largest odd m for thm51 (default: 5)")
    t.add_argument("--n", type=int, nargs="*", default=None,
                   help="primes for thm72 (default: 7 23 31 47 71 79 103)")
    t.add_argument("--route", choices=construct.ROUTES, default="auto")
    _distance_flags(t)
    t.add_argument("--format", choices=["text", "json", "csv"], default="text")
    t.add_argument("--out")

    d = sub.add_parser("mindist", help="minimum distance of a code descriptor (JSON file)")
    d.add_argument("descriptor", help="path to a code descriptor, or '-' for stdin")
    _distance_flags(d)
    d.add_argument("--delta", type=int, default=1, help="known lower bound, e.g. a BCH designed distance")
    d.add_argument("--target", type=int, default=None, help="witness-search target weight (default: --delta)")
    d.add_argument("--even", action="store_true", help="binary code with only even weights")
    d.add_argument("--format", choices=["text", "json"], default="json")
    d.add_argument("--out")

    v = sub.add_parser("verify", help="re-check a report written by build")
    v.add_argument("report", help="path to a report, or '-' for stdin")

    f = sub.add_parser("factor", help="factor x^n - 1 into minimal polynomials")
    f.add_argument("--q", type=int, required=True)
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--format", choices=["text", "json"], default="text")
    f.add_argument("--out")

    c = sub.add_parser("cosets", help="q-cyclotomic cosets modulo n")
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.add_argument("--out")
    return parser


# -- build / table ---------------------------------------------------------------

def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise InputError(f"{args.construction} needs {' '.join(missing)}")


def _run_pipeline(name: str, args, **params) -> construct.ConstructionReport:
    kw = dict(route=args.route, engine=args.engine, budget=args.budget,
              witness_budget=args.witness_budget, seed=args.seed)
    return construct.PIPELINES[name](**params, **kw)


def _pipeline_params(args) -> dict:
    name = args.construction
    if name == "thm72":
        _need(args, "n")
        return {"n": args.n}
    _need(args, "q", "m")
    if name == "thm52":
        return {"q1": args.q, "m": args.m, "mu": args.mu}
    return {"q": args.q, "m": args.m, "mu": args.mu}


def _report_text(rep: construct.ConstructionReport) -> str:
    status, val = rep.distance_summary()
    lines = [
        f"{rep.construction} {rep.params}",
        f"  code: [{rep.n2}, {rep.k}] over GF({rep.code.field.order}), {rep.mode} self-dual: {rep.self_dual}",
        f"  bound: d >= {rep.bound} ({rep.bound_kind}), designed delta = {rep.delta}",
    ]
    if rep.distance is not None:
        r = rep.distance
        if r.exact:
            lines.append(f"  distance: {val} (exact, {r.engine})")
        else:
            lines.append(f"  distance: {int(r.lb)} <= d <= {val} ({r.engine})")
    for key, comp in rep.components.items():
        dist = comp["distance"]
        desc = f"  {key}: [{comp['n']}, {comp['k']}]"
        if dist:
            desc += f" d={dist['d']}" if dist["status"] == "exact" else f" d in [{dist['lb']}, {dist['ub']}]"
        lines.append(desc)
    for name, ok in rep.checks.items():
        lines.append(f"  check {name}: {'PASS' if ok else 'FAIL'}")
    for c in rep.claims:
        lines.append(f"  claim {c.name} = {c.value}: {c.status}")
    return "\n".join(lines) + "\n"


def cmd_build(args) -> int:
    rep = _run_pipeline(args.construction, args, **_pipeline_params(args))
    text = _report_text(rep) if args.format == "text" else _dumps(rep.to_json())
    _emit(text, args.out)
    return EXIT_OK if rep.ok else EXIT_VERIFY


def _table_instances(args) -> list[tuple[str, dict]]:
    if args.family == "thm72":
        primes = construct.QR_PRIMES if args.n is None else args.n
        return [("thm72", {"n": p}) for p in primes]
    return [("thm51", {"q": args.q, "m": m, "mu": args.mu}) for m in range(3, args.m_max + 1, 2)]


def _row(rep: construct.ConstructionReport) -> dict:
    status, val = rep.distance_summary()
    return {
        "construction": rep.construction,
        "params": ";".join(f"{k}={v}" for k, v in rep.params.items()),
        "n": rep.n2,
        "k": rep.k,
        "bound_kind": rep.bound_kind,
        "bound": rep.bound,
        "distance_status": status,
        "d_or_ub": val,
        "runtime_ms": round(rep.runtime_ms, 1),
    }


def cmd_table(args) -> int:
    reps = [_run_pipeline(name, args, **params) for name, params in _table_instances(args)]
    rows = [_row(r) for r in reps]
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        text = buf.getvalue()
    elif args.format == "json":
        text = _dumps([{k: v for k, v in r.items() if k != "runtime_ms"} for r in rows])
    else:
        cols = CSV_COLUMNS
        table = [cols] + [[str(r[c]) for c in cols] for r in rows]
        widths = [max(len(row[i]) for row in table) for i in range(len(cols))]
        text = "".join("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n" for row in table)
    _emit(text, args.out)
    return EXIT_OK if all(r.ok for r in reps) else EXIT_VERIFY


# -- mindist ---------------------------------------------------------------------

def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def cmd_mindist(args) -> int:
    obj = _load_json(args.descriptor)
    if not isinstance(obj, dict):
        raise InputError("descriptor must be a JSON object")
    code, notes = code_from_descriptor(obj)
    L = code.linear if isinstance(code, CyclicCode) else code
    if args.engine == "witness":
        target = args.target or max(args.delta, 1)
        r = md.witness_search(L, target, seed=args.seed, budget=args.budget or md.WITNESS_BUDGET,
                              lower_bound=args.delta, even_weights=args.even)
    else:
        r = construct.code_distance(L, args.engine, lower_bound=args.delta, even=args.even, budget=args.budget,
                                    witness_budget=args.witness_budget, seed=args.seed)
    out = r.to_json()
    out["n"], out["k"] = L.n, L.k
    if notes:
        out["notes"] = notes
    if isinstance(code, CyclicCode):
        out["generator"] = code.generator.to_json()
    if args.format == "text":
        text = f"[{L.n}, {L.k}] over GF({L.field.order}): "
        text += f"d = {out['d']}" if r.exact else f"{out['lb']} <= d <= {out['ub']}"
        text += "".join(f"\nnote: {n}" for n in notes) + "\n"
    else:
        text = _dumps(out)
    _emit(text, args.out)
    return EXIT_OK


# -- verify ----------------------------------------------------------------------

def _check_witness(code, dist: dict) -> bool:
    w = dist.get("witness")
    if w is None:
        return True
    w = np.asarray(w, dtype=np.int64)
    n = code.N if isinstance(code, CyclicCode) else code.n
    return w.shape == (n,) and int(np.count_nonzero(w)) == dist.get("ub") and bool(code.contains(w))


def _check_interval(dist: dict) -> bool:
    lb, ub = dist.get("lb"), dist.get("ub")
    if lb is None or ub is None:
        return lb is None and ub is None and dist.get("status") == "exact"
    if lb > ub:
        return False
    if (dist["status"] == "exact") != (lb == ub):
        return False
    return dist["status"] != "exact" or dist.get("d") == ub


def verify_report(rep: dict) -> list[tuple[str, bool]]:
    results: list[tuple[str, bool]] = []
    code, _ = code_from_descriptor(rep["code"])
    mode = rep.get("mode", EUCLIDEAN)
    if mode not in (EUCLIDEAN, HERMITIAN):
        raise InputError(f"unknown mode {mode!r}")
    n = code.N if isinstance(code, CyclicCode) else code.n
    k = code.dimension if isinstance(code, CyclicCode) else code.k
    results.append(("dimension", n == rep["n2"] and k == rep["k"] and 2 * k == n))
    sd = is_self_dual_cyclic(code, mode) if isinstance(code, CyclicCode) else is_self_dual_linear(code, mode)
    results.append(("self_dual", sd and bool(rep.get("self_dual"))))
    dist = rep.get("distance")
    if dist is not None:
        results.append(("witness", _check_witness(code, dist)))
        ok = _check_interval(dist)
        bound = rep.get("bound", {}).get("value")
        if ok and dist["status"] == "exact" and bound is not None and dist["ub"] is not None:
            ok = dist["ub"] >= bound
        results.append(("bounds", ok))
    comps = rep.get("components") or {}
    cd = {}
    for key, comp in comps.items():
        C, _ = code_from_descriptor(comp["code"])
        ck = C.dimension if isinstance(C, CyclicCode) else C.k
        good = ck == comp["k"]
        if comp.get("distance"):
            good = good and _check_witness(C, comp["distance"]) and _check_interval(comp["distance"])
            cd[key] = comp["distance"]
        results.append((f"component {key}", good))
    if dist is not None and set(cd) == {"C", "C_perp"}:
        c, d = cd["C"], cd["C_perp"]
        if None not in (c["lb"], c["ub"], d["lb"], d["ub"], dist["lb"], dist["ub"]):
            lo, hi = min(2 * c["lb"], d["lb"]), min(2 * c["ub"], d["ub"])
            results.append(("halves", dist["lb"] >= lo and dist["ub"] == hi))
    return results


def cmd_verify(args) -> int:
    rep = _load_json(args.report)
    if not isinstance(rep, dict) or "code" not in rep:
        raise InputError("not a construction report")
    try:
        results = verify_report(rep)
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed report: {exc}") from exc
    for name, ok in results:
        print(f"{name}: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if all(ok for _, ok in results) else EXIT_VERIFY


# -- factor / cosets -------------------------------------------------------------

def cmd_factor(args) -> int:
    from .polyring import factor_xn_minus_1

    F = field_of_order(args.q)
    facs = factor_xn_minus_1(F, args.n)
    if args.format == "json":
        text = _dumps({"q": args.q, "n": args.n, "field": field_to_literal(F),
                       "factors": [{"leader": l, "poly": f.to_json()} for l, f in facs]})
    else:
        text = "".join(f"M_{l}: {f}\n" for l, f in facs)
    _emit(text, args.out)
    return EXIT_OK


def cmd_cosets(args) -> int:
    part = cyclotomic_cosets(args.q, args.n)
    if args.format == "json":
        text = _dumps(part.to_json())
    else:
        text = "".join(f"C_{c[0]}: {' '.join(map(str, c))}\n" for c in part.cosets)
    _emit(text, args.out)
    return EXIT_OK


COMMANDS = {
    "build": cmd_build,
    "table": cmd_table,
    "mindist": cmd_mindist,
    "verify": cmd_verify,
    "factor": cmd_factor,
    "cosets": cmd_cosets,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return COMMANDS[args.command](args)
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_THEOREM
    except (InputError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
