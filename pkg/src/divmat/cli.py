"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 verification mismatch,
4 resource budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
import time

from . import concavity, generate, oracle, serialize, solver
from .core import distribution_of
from .errors import (BudgetExceededError, HypothesisViolation, InvalidInputError,
                     UnsupportedDomainError, VerificationMismatch)
from .matroid import check_lad, check_path_independence, is_matroid

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH, EXIT_BUDGET = 0, 2, 3, 4

PROPERTIES = ("ordinal", "mnat", "m", "pseudo", "pseudo_plus", "semistrict",
              "monotone", "matroid", "pi", "lad")


def _problem(args) -> serialize.Problem:
    if args.seed is not None:
        case = generate.random_case(args.seed)
        doc = serialize.to_document(case.inst, case.f, description=f"random instance, seed {args.seed}")
        return serialize.load(doc)
    if not args.instance:
        raise InvalidInputError("give an instance file, a bundled example name, or --seed")
    return serialize.load_path(args.instance)


def _budget(args, problem) -> oracle.OracleBudget:
    n = args.budget if args.budget is not None else problem.options.get("budget")
    return oracle.OracleBudget(n, n) if n is not None else oracle.OracleBudget.default()


def _lambda(args, problem):
    if args.lam is not None:
        return concavity.as_fraction(args.lam)
    return problem.options.get("lambda")


def _cells(inst):
    return [inst.grid.label(i) for i in range(inst.grid.dim)]


def _witness(w):
    if w is None:
        return None
    return {"xi": list(w.xi), "xi_tilde": list(w.xi_tilde), "cell": w.cell,
            "clause": w.clause, "detail": w.detail}


def cmd_choose(args, p):
    lam = _lambda(args, p)
    X = p.inst.ids
    if lam is None:
        r = solver.diversity_choice(X, p.f, p.inst)
    else:
        r = solver.diversity_choice_lambda(X, p.f, lam, p.inst)
    out = {"chosen": list(r.chosen), "diversity": r.diversity, "anchor": list(r.anchor),
           "distribution": list(distribution_of(r.chosen, p.inst)), "cells": _cells(p.inst),
           "lambda": lam}
    if args.verify or p.options.get("verify"):
        f = p.f if lam is None else concavity.truncate(p.f, lam)
        ref = oracle.brute_force_choice(X, f, p.inst, budget=_budget(args, p))
        out["verified"] = ref.chosen == r.chosen
        if ref.chosen != r.chosen:
            raise VerificationMismatch(
                f"solver chose {list(r.chosen)}, oracle gives "
                f"{list(ref.chosen) if ref.chosen is not None else 'no merit-dominant maximiser'}")
    rows = [(r.chosen, r.diversity, lam if lam is not None else "")]
    return out, [], rows


def cmd_frontier(args, p):
    X = p.inst.ids
    pts = solver.trace_frontier(X, p.f, p.inst)
    out = {"points": [{"set": list(q.set), "diversity": q.diversity, "lambda": q.lam}
                      for q in pts]}
    if args.verify or p.options.get("verify"):
        ref = [s for s, _ in oracle.brute_force_pareto(X, p.f, p.inst, budget=_budget(args, p))]
        got = [q.set for q in pts]
        out["verified"] = sorted(ref) == sorted(got)
        if not out["verified"]:
            raise VerificationMismatch(f"frontier {got} differs from oracle {ref}")
    return out, [], [(q.set, q.diversity, q.lam) for q in pts]


def cmd_check(args, p):
    prop = args.property
    lam = _lambda(args, p)
    f = p.f if lam is None else concavity.truncate(p.f, lam)
    X = p.inst.ids
    if prop in concavity.CHECKERS:
        v = concavity.CHECKERS[prop](f)
        holds, witness = v.holds, _witness(v.witness)
    elif prop == "matroid":
        rep = is_matroid(oracle.build_family(X, f, p.inst, budget=_budget(args, p)))
        holds = rep.holds
        witness = None if holds else {"axiom": rep.axiom, "sets": [sorted(s) for s in rep.witness]}
    else:
        rule = solver.DiversityChoiceRule(f, p.inst)
        check = check_path_independence if prop == "pi" else check_lad
        budget = _budget(args, p)
        if (1 << len(X)) > budget.max_subsets:
            raise BudgetExceededError(f"2^{len(X)} subsets exceed the budget of {budget.max_subsets}")
        rep = check(rule, X)
        holds = rep.holds
        witness = None if holds else {"property": rep.axiom,
                                      "sets": [list(p.inst.sort(s)) for s in rep.witness]}
    out = {"property": prop, "holds": holds, "lambda": lam, "cells": _cells(p.inst)}
    return out, [witness] if witness else [], [(prop, "holds" if holds else "fails", "" if lam is None else lam)]


def cmd_oracle(args, p):
    X = p.inst.ids
    lam = _lambda(args, p)
    f = p.f if lam is None else concavity.truncate(p.f, lam)
    budget = _budget(args, p)
    opt = oracle.brute_force_opt_distributions(X, f, p.inst, budget=budget)
    ch = oracle.brute_force_choice(X, f, p.inst, budget=budget)
    par = oracle.brute_force_pareto(X, p.f, p.inst, budget=budget)
    out = {"optimal_distributions": [list(o) for o in opt],
           "choice": list(ch.chosen) if ch.chosen is not None else None,
           "choice_value": ch.value,
           "maximizers": [list(m) for m in ch.maximizers],
           "pareto": [{"set": list(s), "diversity": v} for s, v in par],
           "cells": _cells(p.inst), "lambda": lam}
    witnesses = [] if ch.chosen is not None else [{"incomparable_maximizers": out["maximizers"]}]
    return out, witnesses, [(s, v, "") for s, v in par]


COMMANDS = {"choose": cmd_choose, "frontier": cmd_frontier, "check": cmd_check,
            "oracle": cmd_oracle}


def _csv(rows, header=("set", "diversity", "lambda")) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, delimiter=";", lineterminator="\n")
    w.writerow(header)
    for s, div, lam in rows:
        s = " ".join(s) if isinstance(s, (tuple, list)) else s
        w.writerow([s, str(div), str(lam)])
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("instance", nargs="?",
                        help="instance JSON file or bundled example name")
    common.add_argument("--seed", type=int, help="use a random instance instead of a file")
    common.add_argument("--budget", type=int, help="oracle budget (subsets and domain points)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--lambda", dest="lam", help="truncation level, e.g. 2 or 5/2")
    common.add_argument("--verify", action="store_true", help="cross-check with the brute-force oracle")
    common.add_argument("--no-timing", action="store_true", help="omit the timing field")

    ap = argparse.ArgumentParser(prog="divmat", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("choose", parents=[common], help="run the diversity choice rule")
    sub.add_parser("frontier", parents=[common], help="trace the diversity/merit frontier")
    chk = sub.add_parser("check", parents=[common], help="verify a concavity or choice property")
    chk.add_argument("--property", required=True, choices=PROPERTIES)
    sub.add_parser("oracle", parents=[common], help="brute-force optimum, choice and frontier")
    sub.add_parser("examples", help="list bundled example names")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "examples":
        print("\n".join(serialize.BUNDLED))
        return EXIT_OK
    start = time.perf_counter()
    code = EXIT_OK
    try:
        p = _problem(args)
        out, witnesses, rows = COMMANDS[args.command](args, p)
    except VerificationMismatch as exc:
        print(f"divmat: verification mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except HypothesisViolation as exc:
        print(f"divmat: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except BudgetExceededError as exc:
        print(f"divmat: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InvalidInputError, UnsupportedDomainError) as exc:
        print(f"divmat: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "csv":
        header = ("property", "verdict", "lambda") if args.command == "check" else None
        sys.stdout.write(_csv(rows, header) if header else _csv(rows))
        return code
    report = {"command": args.command, "input_digest": p.digest,
              "outputs": out, "witnesses": witnesses}
    if not args.no_timing:
        report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    print(serialize.dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
