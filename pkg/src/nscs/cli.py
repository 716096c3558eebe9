"""``nscs`` command line.

Every command builds one output document
``{schema_version, command, inputs, results, provenance, warnings}`` and
prints it either as sorted-key JSON (``--json``) or as flattened
``key: value`` lines.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from nscs import __version__
from nscs import factorization as fz
from nscs import invariants as inv
from nscs import oracle, verify
from nscs.compound import GeneratorList, detect, from_pairs
from nscs.errors import (
    DomainNegative,
    InvalidInput,
    NotCompound,
    NotInSemigroup,
    Overflow,
    WorkBudgetExceeded,
)
from nscs.survey import survey

SCHEMA_VERSION = "1"
DISPLAY_LIMIT = 10_000

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_NEGATIVE, EXIT_BUDGET = 0, 1, 2, 3, 4


class Failure(Exception):
    """Carries a finished document plus a nonzero exit code."""

    def __init__(self, code: int, doc: dict | None = None, message: str = ""):
        super().__init__(message)
        self.code, self.doc, self.message = code, doc, message


# --- serialization --------------------------------------------------------------


def to_jsonable(obj: Any) -> Any:
    """Sets become sorted arrays, tuples become arrays, dict keys become strings."""
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted(to_jsonable(v) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "item") and not isinstance(obj, (int, float, str, bool)):
        return obj.item()  # numpy scalar
    return obj


def dumps(doc: dict) -> str:
    return json.dumps(to_jsonable(doc), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _flatten(prefix: str, value: Any, out: list[str]):
    if isinstance(value, dict) and value:
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else str(k), value[k], out)
    else:
        out.append(f"{prefix}: {json.dumps(to_jsonable(value), sort_keys=True)}")


def render_text(doc: dict) -> str:
    lines: list[str] = []
    _flatten("", doc["results"], lines)
    return "\n".join(lines) + "\n"


def document(command: str, inputs: dict, results: dict, provenance: dict, warnings: list[str]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
        "provenance": provenance,
        "warnings": sorted(set(warnings)),
    }


# --- argument helpers -------------------------------------------------------------


def parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.split(","):
        parts = chunk.strip().split(":")
        if len(parts) != 2:
            raise InvalidInput(f"pair {chunk!r} is not of the form a:b")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InvalidInput(f"pair {chunk!r} is not of the form a:b") from None
    return pairs


def parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise InvalidInput(f"{text!r} is not a comma-separated list of integers") from None


def _ints(values: Sequence[str], what: str) -> list[int]:
    try:
        return [int(v) for v in values]
    except ValueError:
        raise InvalidInput(f"{what} must be integers, got {list(values)}") from None


# --- commands ---------------------------------------------------------------------


def cmd_detect(args) -> dict:
    gens = _ints(args.gens, "generators")
    G = GeneratorList(gens)
    results: dict = {"gens": list(G.gens)}
    code = EXIT_OK
    try:
        S = detect(G)
        results.update(compound=True, pairs=[list(pr) for pr in S.pairs], p=S.p, reason=None)
    except NotCompound as exc:
        results.update(compound=False, pairs=None, p=None, reason=exc.reason)
        code = EXIT_NEGATIVE
    doc = document("detect", {"gens": gens}, results,
                   {"compound": inv.CLOSED_FORM, "pairs": inv.CLOSED_FORM, "p": inv.CLOSED_FORM}, [])
    if code:
        raise Failure(code, doc)
    return doc


def _sequence(args):
    if args.pairs is not None and args.gens:
        raise InvalidInput("give either --pairs or generators, not both")
    if args.pairs is not None:
        return from_pairs(parse_pairs(args.pairs))
    if not args.gens:
        raise InvalidInput("give --pairs a1:b1,... or a list of generators")
    return detect(_ints(args.gens, "generators"))


def _report_results(S) -> tuple[dict, dict]:
    rep = inv.analyze(S)
    results: dict = {
        "pairs": [list(pr) for pr in S.pairs],
        "gens": list(S.n),
        "p": S.p,
        "frobenius": rep.frobenius,
        "genus": rep.genus,
        "betti": rep.betti,
        "catenary": rep.catenary,
        "apery_sizes": rep.apery_sizes,
        "delta": None,
        "tame_bound": None,
    }
    if rep.delta is not None:
        d = rep.delta
        results["delta"] = {"N": d.N, "min": d.min_delta, "max": d.max_delta, "exact": d.exact,
                            "case": d.case, "determined": d.determined}
    if rep.tame_bound is not None:
        t = rep.tame_bound
        results["tame_bound"] = {"bound": t.bound, "bound_r": t.bound_r, "bound_s": t.bound_s,
                                 "r": t.r, "s": t.s, "witness_r": t.witness_r, "witness_s": t.witness_s}
    prov = dict(rep.provenance)
    prov["p"] = inv.CLOSED_FORM
    prov["delta.case"] = inv.CLOSED_FORM
    return results, prov


def cmd_analyze(args) -> dict:
    S = _sequence(args)
    results, prov = _report_results(S)
    warnings: list[str] = []
    code = EXIT_OK
    if args.verify:
        checks = verify.cross_check(S, args.bound, args.budget)
        if checks.get("tame", 0) is None:
            del checks["tame"]
            warnings.append("tame degree not verified: no --bound given")
        results["verification"] = checks
        for name, entry in checks.items():
            prov[f"verification.{name}.oracle"] = inv.ORACLE
            prov[f"verification.{name}.closed_form"] = inv.BOUND if name == "tame" else inv.CLOSED_FORM
            if entry["status"] == verify.INCONCLUSIVE:
                warnings.append(f"{name}: scan bound {entry.get('bound')} too small to decide")
        if any(e["status"] == verify.MISMATCH for e in checks.values()):
            code = EXIT_MISMATCH
    inputs = {"pairs": args.pairs, "gens": _ints(args.gens, "generators") if args.gens else None,
              "verify": args.verify, "bound": args.bound}
    doc = document("analyze", to_jsonable(inputs), results, prov, warnings)
    if code:
        raise Failure(code, doc)
    return doc


def cmd_factor(args) -> dict:
    values = _ints(args.values, "arguments")
    if len(values) < 2:
        raise InvalidInput("factor needs generators followed by n")
    *gens, n = values
    if n < 0:
        raise InvalidInput(f"n must be nonnegative, got {n}")
    G = oracle.GenericSemigroup(GeneratorList(gens))
    needs_compound = args.i_normal is not None or args.chain is not None
    S = detect(G.gens) if needs_compound else None
    X = G.factorizations(n, args.budget)
    if X.shape[0] == 0:
        raise NotInSemigroup(n, G.gens)
    rows = [tuple(int(v) for v in r) for r in X.tolist()]
    lengths = sorted({sum(r) for r in rows})
    warnings: list[str] = []
    results: dict = {
        "n": n,
        "gens": list(G.gens),
        "count": len(rows),
        "lengths": lengths,
        "delta": {b - a for a, b in zip(lengths, lengths[1:])},
        "min_length": lengths[0],
        "max_length": lengths[-1],
    }
    if len(rows) <= DISPLAY_LIMIT or args.full:
        results["factorizations"] = rows
    else:
        results["factorizations"] = None
        warnings.append(f"{len(rows)} factorizations exceed the display limit {DISPLAY_LIMIT}; use --full")
    prov = {k: inv.ORACLE for k in ("count", "lengths", "delta", "min_length", "max_length", "factorizations")}
    if args.i_normal is not None:
        i = args.i_normal
        x = fz.i_normal(S, n, i)
        results["i_normal"] = {"i": i, "factorization": tuple(x), "length": x.length}
        prov["i_normal"] = inv.CLOSED_FORM
    if args.chain is not None:
        x, y = (parse_vector(v) for v in args.chain)
        for z in (x, y):
            if len(z) != S.p + 1 or fz.evaluate(S, z) != n:
                raise InvalidInput(f"{z} is not a factorization of {n}")
        chain = fz.basic_chain(S, x, y, args.mode)
        swaps = [list(fz.identify_swap(S, u, w)) for u, w in zip(chain, chain[1:])]
        problems = fz.check_chain(S, chain, x, y, args.mode)
        results["chain"] = {"mode": args.mode, "steps": [tuple(c) for c in chain],
                            "swaps": [{"index": j, "primed": pr} for j, pr in swaps],
                            "valid": not problems, "problems": problems}
        prov["chain"] = inv.CLOSED_FORM
    inputs = {"gens": gens, "n": n, "i_normal": args.i_normal, "chain": args.chain,
              "mode": args.mode, "full": args.full, "budget": args.budget}
    doc = document("factor", inputs, results, prov, warnings)
    if args.chain is not None and not results["chain"]["valid"]:
        raise Failure(EXIT_MISMATCH, doc)
    return doc


def cmd_survey(args) -> dict:
    if args.max_gen < 3 or args.dim < 2:
        raise InvalidInput("survey needs --max-gen >= 3 and --dim >= 2")
    res = survey(args.max_gen, args.dim, args.budget if args.budget_given else None)
    results = {
        "total": res.total,
        "compound": res.compound,
        "arithmetic": res.arithmetic,
        "compound_fraction": res.compound_fraction,
        "arithmetic_fraction": res.arithmetic_fraction,
    }
    return document("survey", {"max_gen": args.max_gen, "dim": args.dim}, results,
                    {k: inv.ORACLE for k in results}, [])


def cmd_verify(args) -> dict:
    if args.count < 1:
        raise InvalidInput("--count must be positive")
    try:
        reports = verify.run_suite(args.suite, args.seed, args.count)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None
    results = {
        "suites": {r.suite: {"passed": r.passed, "failed": len(r.failures), "counterexamples": r.failures}
                   for r in reports},
        "ok": all(r.ok for r in reports),
    }
    doc = document("verify", {"suite": args.suite, "seed": args.seed, "count": args.count}, results,
                   {"suites": inv.ORACLE}, [])
    if not results["ok"]:
        raise Failure(EXIT_MISMATCH, doc)
    return doc


# --- parser -----------------------------------------------------------------------


def _add_globals(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=d(False), help="emit the JSON document")
    p.add_argument("--budget", type=int, default=d(None), metavar="N",
                   help=f"maximum fiber size (default {oracle.DEFAULT_BUDGET})")
    p.add_argument("--quiet", action="store_true", default=d(False), help="no stdout text, no warnings")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nscs", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"nscs {__version__}")
    _add_globals(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_globals(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", parents=[common], help="recognise a compound sequence")
    p.add_argument("gens", nargs="+")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("analyze", parents=[common], help="closed-form invariants")
    p.add_argument("gens", nargs="*")
    p.add_argument("--pairs", metavar="a1:b1,...")
    p.add_argument("--verify", action="store_true", help="cross-check against brute force")
    p.add_argument("--bound", type=int, help="scan bound for every oracle check")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("factor", parents=[common], help="factorizations of one element")
    p.add_argument("values", nargs="+", metavar="gens... n")
    p.add_argument("--i-normal", type=int, metavar="I")
    p.add_argument("--chain", nargs=2, metavar=("FROM", "TO"))
    p.add_argument("--mode", choices=("left", "right"), default="left")
    p.add_argument("--full", action="store_true", help="list fibers above the display limit")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("survey", parents=[common], help="census of generating sets")
    p.add_argument("--max-gen", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("verify", parents=[common], help="randomised property suites")
    p.add_argument("--suite", required=True, choices=sorted(verify.SUITES) + ["all"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=25)
    p.set_defaults(func=cmd_verify)
    return parser


def _emit(doc: dict, args, stdout):
    if args.quiet:
        return
    stdout.write(dumps(doc) if args.json else render_text(doc))
    if not args.json:
        for w in doc["warnings"]:
            print(f"warning: {w}", file=sys.stderr)


def main(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with code 2
        return int(exc.code or 0)
    args.budget_given = args.budget is not None
    if args.budget is None:
        args.budget = oracle.DEFAULT_BUDGET
    elif args.budget < 1:
        print("nscs: error: --budget must be positive", file=sys.stderr)
        return EXIT_INVALID
    try:
        doc = args.func(args)
        code = EXIT_OK
    except Failure as f:
        doc, code = f.doc, f.code
    except (InvalidInput, Overflow) as exc:
        print(f"nscs: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except DomainNegative as exc:
        print(f"nscs: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except WorkBudgetExceeded as exc:
        print(f"nscs: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if doc is not None:
        _emit(doc, args, stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
