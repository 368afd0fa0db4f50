"""Command-line front end.

Every subcommand prints either text or (with ``--json``) one object
``{command, inputs, results, witnesses, timing_ms}``. ``timing_ms`` stays
null unless ``--timing`` is given so that output is byte-for-byte
reproducible. Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Sequence

from .bits import DimensionError
from .clifford import CliffordAlgebra
from .dirac import dirac_apply, dirac_component_form, dirac_curl_form, laplacian, monomials, PolySpinor
from .parsing import ExpressionError, parse_expression, parse_spinor
from .periodicity import classify
from .process import (
    ProcessError,
    closed_associator,
    closed_braiding,
    clifford_spec,
    iterate_from_field,
    process_once,
)
from .scalars import ONE, ScalarParseError, format_scalar
from .spinor import exterior_matrices, full_rep_faithfulness, generator_matrices, relations_witness
from .twisted import Signature, TooLargeError, blade_name, braiding_R, clifford_cochain, coboundary3
from .verify import SUITES, SuiteConfig, run_suite

SHOW_MAX_N = 6


class UsageError(Exception):
    pass


def _signature(text: str | None) -> Signature:
    if text is None:
        raise UsageError("--signature is required")
    try:
        return Signature.parse(text)
    except (ScalarParseError, ValueError) as exc:
        raise UsageError(f"bad signature {text!r}: {exc}") from None


def _steps(text: str) -> list[int]:
    out = []
    for ch in text.replace(",", "").replace(" ", ""):
        if ch in "+0":
            out.append(0)
        elif ch in "-1":
            out.append(1)
        else:
            raise UsageError(f"bad step {ch!r}: use +, -, 0 or 1")
    return out


def _emit(args, command: str, inputs: dict, results: Any, witnesses: Any, text: list[str], t0: float) -> None:
    timing = round((time.perf_counter() - t0) * 1000, 3) if args.timing else None
    if args.json:
        obj = {"command": command, "inputs": inputs, "results": results, "witnesses": witnesses, "timing_ms": timing}
        print(json.dumps(obj, indent=2, sort_keys=False))
    else:
        for line in text:
            print(line)
        if timing is not None:
            print(f"time: {timing} ms")


def _table_strings(alg) -> list[list[str]]:
    return [[str(alg.blade(x) * alg.blade(y)) for y in range(alg.dim)] for x in range(alg.dim)]


# -- subcommands ----------------------------------------------------------------------------


def cmd_eval(args, t0) -> int:
    alg = CliffordAlgebra(_signature(args.signature))
    value = parse_expression(args.expr, alg)
    _emit(args, "eval", {"signature": args.signature, "expr": args.expr}, {"value": str(value), "coeffs": value.to_json()}, None, [str(value)], t0)
    return 0


def cmd_table(args, t0) -> int:
    sig = _signature(args.signature)
    if sig.n > SHOW_MAX_N:
        raise UsageError(f"table is limited to n <= {SHOW_MAX_N}")
    alg = CliffordAlgebra(sig)
    table = _table_strings(alg)
    names = [blade_name(x) for x in range(alg.dim)]
    width = max(len(c) for row in table + [names] for c in row)
    lines = [" " * width + " | " + " ".join(n.rjust(width) for n in names)]
    lines.append("-" * len(lines[0]))
    for name, row in zip(names, table):
        lines.append(name.rjust(width) + " | " + " ".join(c.rjust(width) for c in row))
    _emit(args, "table", {"signature": args.signature}, {"blades": names, "table": table}, None, lines, t0)
    return 0


def cmd_verify(args, t0) -> int:
    if args.all or not args.suite:
        names = sorted(SUITES)
    else:
        names = sorted(set(args.suite))
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}; available: {', '.join(sorted(SUITES))}")
    if args.signature is not None:
        _signature(args.signature)
    cfg = SuiteConfig(max_n=args.max_n, seed=args.seed, signature=args.signature)
    results, witnesses, lines = [], {}, []
    ok = True
    for name in names:
        try:
            res = run_suite(name, cfg)
        except TooLargeError as exc:
            raise UsageError(str(exc)) from None
        results.append(res.to_json())
        ok &= res.ok
        if res.witness is not None:
            witnesses[name] = res.witness
        status = "PASS" if res.ok else "FAIL"
        line = f"{status} {name} ({res.cases} cases)"
        if res.witness is not None:
            line += f" witness={json.dumps(res.witness, sort_keys=True)}"
        lines.append(line)
    lines.append("all passed" if ok else "FAILED")
    inputs = {"suites": names, "signature": args.signature, "max_n": args.max_n, "seed": args.seed}
    _emit(args, "verify", inputs, results, witnesses or None, lines, t0)
    return 0 if ok else 1


def cmd_process(args, t0) -> int:
    steps = _steps(args.steps)
    spec = iterate_from_field(steps)
    sig = "".join("-" if e else "+" for e in steps)
    matches = spec.F.unit_logs() is not None and (spec.F.unit_logs() == clifford_cochain(sig).unit_logs()).all() if spec.n <= 12 else None
    results: dict[str, Any] = {"n": spec.n, "signature": sig, "equals_clifford": bool(matches)}
    lines = [f"n = {spec.n}, signature {sig}", f"cochain equals the Clifford cochain: {bool(matches)}"]
    witnesses = None
    code = 0
    if args.show:
        if spec.n > SHOW_MAX_N:
            raise UsageError(f"--show is limited to n <= {SHOW_MAX_N}")
        N = 1 << spec.n
        F = spec.F
        if args.show == "cochain":
            rows = [[format_scalar(F.value(x, y)) for y in range(N)] for x in range(N)]
        elif args.show == "braiding":
            rows = [[format_scalar(braiding_R(F, x, y)) for y in range(N)] for x in range(N)]
        else:
            rows = [
                [x, y, z, format_scalar(coboundary3(F, x, y, z))]
                for x in range(N) for y in range(N) for z in range(N)
                if coboundary3(F, x, y, z) != 1
            ]
        results[args.show] = rows
        if args.show == "assoc":
            lines.append(f"associator != 1 on {len(rows)} triples")
        else:
            lines.append(f"{args.show}:")
            lines.extend(" ".join(r.rjust(3) for r in row) for row in rows)
    if args.verify == "closed-forms":
        if not steps:
            raise UsageError("closed-forms needs at least one step")
        if spec.n > SHOW_MAX_N:
            raise UsageError(f"closed-form verification is limited to n <= {SHOW_MAX_N}")
        parent = clifford_spec(sig[:-1])
        bar = process_once(parent, -ONE if steps[-1] else ONE)
        N = 1 << bar.n
        bad = None
        for x in range(N):
            for y in range(N):
                if closed_braiding(bar, x, y) != braiding_R(bar.F, x, y):
                    bad = {"x": x, "y": y, "check": "braiding"}
                    break
                for z in range(N):
                    if closed_associator(bar, x, y, z) != coboundary3(bar.F, x, y, z):
                        bad = {"x": x, "y": y, "z": z, "check": "associator"}
                        break
                if bad:
                    break
            if bad:
                break
        results["closed_forms_ok"] = bad is None
        witnesses = bad
        lines.append("closed forms: " + ("PASS" if bad is None else f"FAIL {bad}"))
        code = 0 if bad is None else 1
    _emit(args, "process", {"steps": args.steps, "show": args.show, "verify": args.verify}, results, witnesses, lines, t0)
    return code


def cmd_classify(args, t0) -> int:
    alg = CliffordAlgebra(_signature(args.signature))
    lab = classify(alg)
    res = lab.to_json()
    lines = [lab.label, f"center dimension: {lab.center_dim}"]
    if lab.mu is not None:
        lines.append(f"mu: {format_scalar(lab.mu)}")
    lines += [f"check: {c}" for c in lab.checks]
    if lab.reason:
        lines.append(f"reason: {lab.reason}")
    _emit(args, "classify", {"signature": args.signature}, res, None, lines, t0)
    return 0 if lab.kind != "unclassified" else 1


def cmd_spinor(args, t0) -> int:
    alg = CliffordAlgebra(_signature(args.signature))
    if alg.n > 4:
        raise UsageError("spinor matrices are limited to n <= 4")
    mats = exterior_matrices(alg) if args.model == "exterior" else generator_matrices(alg)
    results: dict[str, Any] = {"model": args.model, "matrices": [M.to_json() for M in mats]}
    lines = []
    for k, M in enumerate(mats, 1):
        lines.append(f"M{k}:")
        lines.extend("  " + " ".join(c.rjust(4) for c in row) for row in M.to_json())
    code = 0
    witnesses = None
    if args.check == "relations":
        w = relations_witness(mats, list(alg.q) * 2) if mats else None
        results["relations_ok"] = w is None
        witnesses = None if w is None else {"pair": list(w)}
    elif args.check == "faithful":
        if alg.n > 3:
            raise UsageError("faithfulness check is limited to n <= 3")
        results["faithful"] = full_rep_faithfulness(alg)
        witnesses = None if results["faithful"] else {"rank_deficient": True}
    elif args.check == "compare":
        results["models_equal"] = exterior_matrices(alg) == generator_matrices(alg)
        witnesses = None if results["models_equal"] else {"models_differ": True}
    if args.check:
        passed = witnesses is None
        lines.append(f"{args.check}: {'PASS' if passed else 'FAIL'}")
        code = 0 if passed else 1
    if args.emit == "json":
        args.json = True
    _emit(args, "spinor", {"signature": args.signature, "model": args.model, "check": args.check}, results, witnesses, lines, t0)
    return code


def cmd_dirac(args, t0) -> int:
    if not args.check_square and args.apply is None:
        raise UsageError("give --check-square and/or --apply EXPR")
    results: dict[str, Any] = {}
    lines = []
    witnesses = None
    code = 0
    if args.apply is not None:
        psi = parse_spinor(args.apply)
        d = dirac_apply(psi)
        results["input"] = str(psi)
        results["dirac"] = str(d)
        results["forms_agree"] = d == dirac_component_form(psi) == dirac_curl_form(psi)
        lines += [f"psi   = {psi}", f"D psi = {d}", f"three forms agree: {results['forms_agree']}"]
        if not results["forms_agree"]:
            code = 1
    if args.check_square:
        count = 0
        for m in monomials(args.max_degree):
            for x in range(4):
                psi = PolySpinor.term(m, x)
                count += 1
                if dirac_apply(dirac_apply(psi)) != -laplacian(psi):
                    witnesses = {"monomial": list(m), "component": x}
                    break
            if witnesses:
                break
        results["square_ok"] = witnesses is None
        results["cases"] = count
        lines.append(f"D^2 = -Laplacian on {count} cases: {'PASS' if witnesses is None else 'FAIL'}")
        if witnesses:
            code = 1
    _emit(args, "dirac", {"apply": args.apply, "check_square": args.check_square, "max_degree": args.max_degree}, results, witnesses, lines, t0)
    return code


# -- parser -------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument("--timing", action="store_true", help="report wall time (makes output nondeterministic)")

    p = argparse.ArgumentParser(prog="cliffordtwist", description="Exact Clifford algebras as twisted group algebras of Z2^n.")
    sub = p.add_subparsers(dest="command", required=True)

    sig_help = 'signature: "+-+" shorthand or comma-separated scalars such as "1,-1,2/3,1i"'

    e = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    e.add_argument("--signature", "-s", required=True, help=sig_help)
    e.add_argument("expr", help='e.g. "e1*e2 - e2*e1"')
    e.set_defaults(func=cmd_eval)

    t = sub.add_parser("table", parents=[common], help="blade multiplication table")
    t.add_argument("--signature", "-s", required=True, help=sig_help)
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", action="append", help=f"suite name (repeatable): {', '.join(sorted(SUITES))}")
    v.add_argument("--all", action="store_true", help="run every suite (default when no --suite)")
    v.add_argument("--signature", "-s", help="restrict signature-dependent suites to one signature")
    v.add_argument("--max-n", type=int, help="override the per-suite dimension caps")
    v.add_argument("--seed", type=int, default=0, help="seed for randomized suites (default 0)")
    v.set_defaults(func=cmd_verify)

    pr = sub.add_parser("process", parents=[common], help="iterate the doubling process from the field")
    pr.add_argument("--steps", required=True, help='step signs, e.g. "+,-,+"')
    pr.add_argument("--show", choices=["cochain", "assoc", "braiding"])
    pr.add_argument("--verify", choices=["closed-forms"])
    pr.set_defaults(func=cmd_process)

    c = sub.add_parser("classify", parents=[common], help="matrix-algebra type over Q(i)")
    c.add_argument("--signature", "-s", required=True, help=sig_help)
    c.set_defaults(func=cmd_classify)

    sp = sub.add_parser("spinor", parents=[common], help="spinor generator matrices")
    sp.add_argument("--signature", "-s", required=True, help=sig_help)
    sp.add_argument("--model", choices=["twisted", "exterior"], default="twisted")
    sp.add_argument("--emit", choices=["text", "json"], default="text")
    sp.add_argument("--check", choices=["faithful", "relations", "compare"])
    sp.set_defaults(func=cmd_spinor)

    d = sub.add_parser("dirac", parents=[common], help="quaternionic Dirac operator demo")
    d.add_argument("--check-square", action="store_true", help="verify D^2 = -Laplacian on monomial spinors")
    d.add_argument("--max-degree", type=int, default=3)
    d.add_argument("--apply", metavar="EXPR", help='spinor such as "x1^2*e1 + (1+1i)*x3"')
    d.set_defaults(func=cmd_dirac)
    return p


_VALUE_OPTIONS = ("--signature", "-s", "--steps")
_DEST = {"--signature": "signature", "-s": "signature", "--steps": "steps"}
# argparse drops a bare "--" even as an option value, so glued values carry a marker
_MARK = "\x00"


def _glue_values(argv: Sequence[str]) -> list[str]:
    # "+-" strings such as "--" or "-+" would otherwise be read as options
    out: list[str] = []
    it = iter(argv)
    for a in it:
        opt, eq, val = a.partition("=")
        if a in _VALUE_OPTIONS:
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={_MARK}{nxt}")
        elif eq and opt in _VALUE_OPTIONS:
            out.append(f"{opt}={_MARK}{val}")
        else:
            out.append(a)
    return out


def _unmark(args: argparse.Namespace) -> None:
    for dest in set(_DEST.values()):
        v = getattr(args, dest, None)
        if isinstance(v, str) and v.startswith(_MARK):
            setattr(args, dest, v[len(_MARK):])


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_values(sys.argv[1:] if argv is None else argv))
    _unmark(args)
    t0 = time.perf_counter()
    try:
        return args.func(args, t0)
    except (UsageError, ExpressionError, ScalarParseError, DimensionError, TooLargeError, ProcessError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
