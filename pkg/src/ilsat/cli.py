"""Command-line front end.

Subcommands:

  sat FORMULA        decide satisfiability (optionally emit a witness)
  valid FORMULA      decide validity (optionally emit a countermodel)
  closure FORMULA    dump the closure sets and the recursion depth budget
  oracle FORMULA     exhaustive small-model search
  corpus             built-in axiom/non-theorem suite plus random formulas,
                     every answer cross-checked; fails closed
  bench              timing and recursion depth over a size-ramped family

FORMULA arguments may instead name a file with one formula per line and
'#' comments.  Exit codes: 0 ok, 1 parse/input error, 2 internal invariant
violation, 3 certification failure, 4 oracle/decider disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .closure import closure_to_dict, compute_closure
from .corpus import NON_THEOREMS, axiom_instances
from .decide import BudgetExceeded, decide_sat, decide_valid
from .formula import (
    BOT,
    Formula,
    Implies,
    ParseError,
    iter_formulas_file,
    parse,
    pretty,
)
from .generate import Lcg, random_formula
from .semantics import model_to_dict, oracle_sat
from .witness import build_from_trace, certify

SPEC_VERSION = "1"

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INTERNAL = 2
EXIT_CERTIFY = 3
EXIT_DISAGREE = 4


def _fail(code: int, message: str) -> int:
    print(message, file=sys.stderr)
    return code


def _load_formulas(source: str) -> list:
    """Parse the argument as a formula, or as a file of formulas."""
    try:
        with open(source, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError:
        return [(source, parse(source))]
    return [(line, parse(line)) for line in iter_formulas_file(text)]


def _write_witness(path: str, result, formula: Formula) -> int:
    build = build_from_trace(result.trace, result.closure)
    report = certify(build.model, formula)
    if not report.ok:
        return _fail(EXIT_CERTIFY, f"witness certification failed: {report}")
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(model_to_dict(build.model), handle, indent=2)
        handle.write("\n")
    return EXIT_OK


def _cmd_sat(args) -> int:
    entries = _load_formulas(args.formula)
    results = [(text, decide_sat(f, memoize=args.memoize), f) for text, f in entries]
    if args.json:
        print(json.dumps({
            "spec_version": SPEC_VERSION,
            "mode": "sat",
            "results": [
                {"formula": pretty(f), "verdict": "SAT" if r.satisfiable else "UNSAT"}
                for _, r, f in results
            ],
        }))
    else:
        for text, r, _ in results:
            verdict = "SAT" if r.satisfiable else "UNSAT"
            print(verdict if len(results) == 1 else f"{verdict}\t{text}")
    if args.witness:
        if len(results) != 1:
            return _fail(EXIT_PARSE, "--witness requires a single formula")
        _, r, f = results[0]
        if r.satisfiable:
            return _write_witness(args.witness, r, f)
    return EXIT_OK


def _cmd_valid(args) -> int:
    entries = _load_formulas(args.formula)
    results = [(text, decide_valid(f, memoize=args.memoize), f) for text, f in entries]
    if args.json:
        print(json.dumps({
            "spec_version": SPEC_VERSION,
            "mode": "valid",
            "results": [
                {"formula": pretty(f), "verdict": "VALID" if r.valid else "INVALID"}
                for _, r, f in results
            ],
        }))
    else:
        for text, r, _ in results:
            verdict = "VALID" if r.valid else "INVALID"
            print(verdict if len(results) == 1 else f"{verdict}\t{text}")
    if args.witness:
        if len(results) != 1:
            return _fail(EXIT_PARSE, "--witness requires a single formula")
        _, r, f = results[0]
        if not r.valid:
            # countermodel: a model of the negation, at whose root f fails
            return _write_witness(args.witness, r.negation, Implies(f, BOT))
    return EXIT_OK


def _cmd_closure(args) -> int:
    entries = _load_formulas(args.formula)
    for _, f in entries:
        closure = compute_closure(f)
        payload = closure_to_dict(closure)
        if args.json:
            print(json.dumps({
                "spec_version": SPEC_VERSION,
                "formula": pretty(f),
                **payload,
                "budget": closure.budget,
            }))
        else:
            print(json.dumps(payload, indent=2))
            print(f"depth budget: {closure.budget}")
    return EXIT_OK


def _cmd_oracle(args) -> int:
    entries = _load_formulas(args.formula)
    for _, f in entries:
        model = oracle_sat(f, args.max_worlds)
        if args.json:
            print(json.dumps({
                "spec_version": SPEC_VERSION,
                "formula": pretty(f),
                "max_worlds": args.max_worlds,
                "model": model_to_dict(model) if model else None,
            }))
        elif model is None:
            print(f"NOT_FOUND(bound={args.max_worlds})")
        else:
            print(json.dumps(model_to_dict(model), indent=2))
    return EXIT_OK


def _corpus_random_entry(f: Formula, max_worlds: int, memoize: bool) -> dict:
    result = decide_sat(f, memoize=memoize)
    entry = {
        "formula": pretty(f),
        "verdict": "SAT" if result.satisfiable else "UNSAT",
        "max_depth": result.stats.max_sat_depth,
        "budget": result.stats.budget,
        "ok": True,
        "detail": "",
    }
    if result.stats.max_sat_depth > result.stats.budget:
        entry["ok"] = False
        entry["detail"] = "depth budget exceeded"
    elif result.satisfiable:
        build = build_from_trace(result.trace, result.closure)
        report = certify(build.model, f)
        if not report.ok:
            entry["ok"] = False
            entry["detail"] = f"witness rejected: {report}"
    else:
        model = oracle_sat(f, max_worlds)
        if model is not None:
            entry["ok"] = False
            entry["detail"] = f"oracle found a {len(model.worlds)}-world model"
    return entry


def _cmd_corpus(args) -> int:
    report = {
        "spec_version": SPEC_VERSION,
        "seed": args.seed,
        "random": args.random,
        "axioms": {"total": 0, "valid": 0, "failures": []},
        "non_theorems": {"total": 0, "ok": 0, "failures": []},
        "random_results": {"total": 0, "sat": 0, "unsat": 0, "failures": []},
    }

    for name, instance in axiom_instances():
        report["axioms"]["total"] += 1
        if decide_valid(instance, memoize=args.memoize).valid:
            report["axioms"]["valid"] += 1
        else:
            report["axioms"]["failures"].append(f"{name}: {pretty(instance)}")

    for f in NON_THEOREMS:
        report["non_theorems"]["total"] += 1
        negation = Implies(f, BOT)
        result = decide_valid(f, memoize=args.memoize)
        problem = None
        if result.valid:
            problem = "decided VALID"
        else:
            build = build_from_trace(result.negation.trace, result.negation.closure)
            cert = certify(build.model, negation)
            if not cert.ok:
                problem = f"countermodel rejected: {cert}"
            elif oracle_sat(negation, args.max_worlds) is None:
                problem = "oracle found no countermodel"
        if problem is None:
            report["non_theorems"]["ok"] += 1
        else:
            report["non_theorems"]["failures"].append(f"{pretty(f)}: {problem}")

    rng = Lcg(args.seed)
    for _ in range(args.random):
        f = random_formula(rng)
        entry = _corpus_random_entry(f, args.max_worlds, args.memoize)
        bucket = report["random_results"]
        bucket["total"] += 1
        bucket["sat" if entry["verdict"] == "SAT" else "unsat"] += 1
        if not entry["ok"]:
            bucket["failures"].append(f"{entry['formula']}: {entry['detail']}")

    failures = (
        report["axioms"]["failures"]
        + report["non_theorems"]["failures"]
        + report["random_results"]["failures"]
    )
    report["ok"] = not failures

    if args.json:
        print(json.dumps(report))
    else:
        ax = report["axioms"]
        nt = report["non_theorems"]
        rd = report["random_results"]
        print(f"axioms: {ax['valid']}/{ax['total']} valid")
        print(f"non-theorems: {nt['ok']}/{nt['total']} invalid with certified "
              "countermodel and oracle confirmation")
        print(f"random (seed {args.seed}): {rd['total']} formulas, "
              f"{rd['sat']} sat, {rd['unsat']} unsat")
        for line in failures:
            print(f"disagree: {line}")
        print("corpus: OK" if report["ok"] else "corpus: FAIL")
    return EXIT_OK if report["ok"] else EXIT_DISAGREE


def _cmd_bench(args) -> int:
    sizes = (4, 8, 12, 16, 20)
    rows = []
    for node_budget in sizes:
        rng = Lcg(args.seed + node_budget)
        times = []
        max_depth = 0
        max_budget = 0
        for _ in range(args.random):
            f = random_formula(rng, node_budget=node_budget)
            started = time.perf_counter()
            result = decide_sat(f, memoize=args.memoize)
            times.append(time.perf_counter() - started)
            max_depth = max(max_depth, result.stats.max_sat_depth)
            max_budget = max(max_budget, result.stats.budget)
        rows.append({
            "size": node_budget,
            "count": len(times),
            "mean_ms": round(1000 * sum(times) / len(times), 3),
            "max_depth": max_depth,
            "budget_max": max_budget,
        })
    if args.json:
        print(json.dumps({"spec_version": SPEC_VERSION, "rows": rows}))
    else:
        for row in rows:
            print(f"size {row['size']}: n={row['count']} "
                  f"mean={row['mean_ms']}ms max_depth={row['max_depth']} "
                  f"budget_max={row['budget_max']}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ilsat",
        description="decision engine for the interpretability logic IL",
    )
    sub = parser.add_subparsers(dest="mode", required=True)

    def common(p, formula=True):
        if formula:
            p.add_argument("formula", help="formula text, or path to a file of formulas")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--memoize", action="store_true",
                       help="cache recursive search results (trades space for speed)")

    p_sat = sub.add_parser("sat", help="decide satisfiability")
    common(p_sat)
    p_sat.add_argument("--witness", metavar="PATH",
                       help="write a certified model for a SAT answer")
    p_sat.set_defaults(run=_cmd_sat)

    p_valid = sub.add_parser("valid", help="decide validity")
    common(p_valid)
    p_valid.add_argument("--witness", metavar="PATH",
                         help="write a certified countermodel for an INVALID answer")
    p_valid.set_defaults(run=_cmd_valid)

    p_closure = sub.add_parser("closure", help="dump closure sets")
    common(p_closure)
    p_closure.set_defaults(run=_cmd_closure)

    p_oracle = sub.add_parser("oracle", help="exhaustive small-model search")
    common(p_oracle)
    p_oracle.add_argument("--max-worlds", type=int, default=3)
    p_oracle.set_defaults(run=_cmd_oracle)

    p_corpus = sub.add_parser("corpus", help="run the validation corpus")
    common(p_corpus, formula=False)
    p_corpus.add_argument("--random", type=int, default=0, metavar="N",
                          help="additional random formulas to cross-check")
    p_corpus.add_argument("--seed", type=int, default=0)
    p_corpus.add_argument("--max-worlds", type=int, default=3)
    p_corpus.set_defaults(run=_cmd_corpus)

    p_bench = sub.add_parser("bench", help="timing over a size-ramped family")
    common(p_bench, formula=False)
    p_bench.add_argument("--random", type=int, default=10, metavar="N",
                         help="formulas per size step")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.set_defaults(run=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    max_worlds = getattr(args, "max_worlds", None)
    if max_worlds is not None and not 1 <= max_worlds <= 4:
        return _fail(EXIT_PARSE, "--max-worlds must be between 1 and 4")
    try:
        return args.run(args)
    except ParseError as exc:
        return _fail(EXIT_PARSE, f"parse error: {exc}")
    except (BudgetExceeded, AssertionError) as exc:
        return _fail(EXIT_INTERNAL, f"internal invariant violated: {exc}")


if __name__ == "__main__":
    sys.exit(main())
