"""Command-line front end.

Verbs: enumerate, partition, classify, solve, verify (ybe / merge /
recurrence / train / gt), gt (to-pattern / from-pattern), render.  All
output is deterministic: polynomials print in canonical form and JSON is
emitted with sorted keys.  Exit status: 0 success/pass, 1 verification
failure or check mismatch, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import classify, gt, lattice, merge, recurrence, render, solvability


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _load_spec(path: str) -> lattice.SystemSpec:
    return lattice.load_system(path)


def cmd_enumerate(args) -> int:
    spec = _load_spec(args.system)
    states = lattice.enumerate_states(spec)
    if args.limit is not None:
        states = states[: args.limit]
    lines = ["state\tweight"]
    for idx, st in enumerate(states):
        lines.append(f"{idx}\t{lattice.state_weight(st, spec)}")
    lines.append(f"total\t{len(states)}")
    table = "\n".join(lines) + "\n"
    sys.stdout.write(table)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        with open(os.path.join(args.out, "states.tsv"), "w", encoding="utf-8") as fh:
            fh.write(table)
        if args.render:
            ext = "svg" if args.render == "svg" else "txt"
            for idx, st in enumerate(states):
                doc = render.render_state(st, spec, args.render)
                name = os.path.join(args.out, f"state_{idx:04d}.{ext}")
                with open(name, "w", encoding="utf-8") as fh:
                    fh.write(doc)
    return 0


def cmd_partition(args) -> int:
    spec = _load_spec(args.system)
    print(lattice.partition_function(spec))
    return 0


def cmd_classify(args) -> int:
    spec = _load_spec(args.system)
    print(_dump(classify.classify_system(spec).to_json()))
    return 0


def cmd_solve(args) -> int:
    spec = _load_spec(args.system)
    z = recurrence.solve_partition(spec)
    print(z)
    if args.check:
        if z == lattice.partition_function(spec):
            print("check: OK")
        else:
            print("check: MISMATCH")
            return 1
    return 0


def cmd_verify_ybe(args) -> int:
    if args.mode == "unfused":
        report = solvability.verify_unfused_ybe(
            args.colors, args.dolors, args.nmax, args.fail_fast, args.jobs
        )
    else:
        report = solvability.verify_fused_ybe(
            args.colors, args.dolors, args.nmax, args.fail_fast, args.jobs
        )
    print(_dump(report.to_json()))
    return 0 if report.passed else 1


def cmd_verify_merge(args) -> int:
    if args.scope == "local":
        report = merge.verify_local_merge(args.colors, args.dolors, args.nmax, args.jobs)
    elif args.scope == "step":
        report = merge.verify_step_merge(
            args.colors, args.dolors, args.index, args.nmax, args.jobs
        )
    else:
        spec = _load_spec(args.system)
        if args.scope == "global-colored":
            report = merge.verify_global_colored(
                spec.r, spec.N, spec.lam, spec.w1, spec.w3, spec.w4
            )
        else:
            report = merge.verify_global_uncolored(
                spec.r, spec.N, spec.lam, spec.w3, spec.w4
            )
    print(_dump(report.to_json()))
    return 0 if report.passed else 1


def cmd_verify_recurrence(args) -> int:
    spec = _load_spec(args.system)
    table = recurrence.PartitionTable(spec)
    residuals = {}
    demazure = {}
    passed = True
    for i in range(1, spec.r):
        res = recurrence.recurrence_residual(spec, i, table)
        residuals[str(i)] = str(res)
        passed = passed and res.is_zero()
        if args.demazure:
            ok = recurrence.verify_demazure(spec, i, table)
            demazure[str(i)] = ok
            passed = passed and ok
    out = {"residuals": residuals, "passed": passed}
    if args.demazure:
        out["demazure"] = demazure
    print(_dump(out))
    return 0 if passed else 1


def cmd_verify_train(args) -> int:
    spec = _load_spec(args.system)
    table = recurrence.PartitionTable(spec)
    results = {
        str(i): solvability.verify_train(spec, i, table.z) for i in range(1, spec.r)
    }
    passed = all(results.values())
    print(_dump({"train": results, "passed": passed}))
    return 0 if passed else 1


def cmd_verify_gt(args) -> int:
    spec = _load_spec(args.system)
    states = lattice.enumerate_states(spec)
    roundtrip = all(
        gt.pattern_to_state(gt.state_to_pattern(st, spec), spec) == st for st in states
    )
    axioms = all(
        not gt.check_axioms(gt.state_to_pattern(st, spec), spec.r, spec.r)
        for st in states
    )
    npatterns = len(gt.enumerate_patterns(spec))
    out = {
        "states": len(states),
        "patterns": npatterns,
        "roundtrip": roundtrip,
        "axioms": axioms,
        "passed": roundtrip and axioms and npatterns == len(states),
    }
    print(_dump(out))
    return 0 if out["passed"] else 1


def cmd_gt(args) -> int:
    spec = _load_spec(args.system)
    if args.direction == "to-pattern":
        states = lattice.enumerate_states(spec)
        if not 0 <= args.index < len(states):
            raise ValueError(f"state index {args.index} out of range (found {len(states)} states)")
        pattern = gt.state_to_pattern(states[args.index], spec)
        print(_dump(gt.pattern_to_json(pattern)))
    else:
        with open(args.pattern, "r", encoding="utf-8") as fh:
            pattern = gt.pattern_from_json(json.load(fh))
        state = gt.pattern_to_state(pattern, spec)
        print(_dump(lattice.state_to_json(state, spec)))
    return 0


def cmd_render(args) -> int:
    spec = _load_spec(args.system)
    states = lattice.enumerate_states(spec)
    if not 0 <= args.index < len(states):
        raise ValueError(f"state index {args.index} out of range (found {len(states)} states)")
    doc = render.render_state(states[args.index], spec, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc)
    else:
        sys.stdout.write(doc)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bilattice",
        description="Exact engine for bicolored bosonic lattice models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list states and count")
    p.add_argument("--system", required=True)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--render", choices=["text", "svg"], default=None)
    p.add_argument("--out", default=None, help="directory for states.tsv and figures")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("partition", help="print the partition function")
    p.add_argument("--system", required=True)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("classify", help="boundary permutations and trichotomy class")
    p.add_argument("--system", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("solve", help="partition function via the recurrence")
    p.add_argument("--system", required=True)
    p.add_argument("--check", action="store_true", help="also enumerate and diff")
    p.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="verification sweeps")
    vsub = v.add_subparsers(dest="what", required=True)

    p = vsub.add_parser("ybe", help="Yang-Baxter equation sweep")
    p.add_argument("--mode", choices=["unfused", "fused"], required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--dolors", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--fail-fast", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify_ybe)

    p = vsub.add_parser("merge", help="color merging identities")
    p.add_argument(
        "--scope",
        choices=["local", "step", "global-colored", "global-uncolored"],
        required=True,
    )
    p.add_argument("--colors", type=int, default=2)
    p.add_argument("--dolors", type=int, default=2)
    p.add_argument("--nmax", type=int, default=1)
    p.add_argument("--index", type=int, default=1, help="dolor index for --scope step")
    p.add_argument("--system", help="system file for the global scopes")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify_merge)

    p = vsub.add_parser("recurrence", help="four-term recurrence residuals")
    p.add_argument("--system", required=True)
    p.add_argument("--demazure", action="store_true")
    p.set_defaults(func=cmd_verify_recurrence)

    p = vsub.add_parser("train", help="R-vertex train identity")
    p.add_argument("--system", required=True)
    p.set_defaults(func=cmd_verify_train)

    p = vsub.add_parser("gt", help="pattern bijection checks")
    p.add_argument("--system", required=True)
    p.set_defaults(func=cmd_verify_gt)

    g = sub.add_parser("gt", help="convert states to and from patterns")
    gsub = g.add_subparsers(dest="direction", required=True)
    p = gsub.add_parser("to-pattern")
    p.add_argument("--system", required=True)
    p.add_argument("--index", type=int, default=0)
    p.set_defaults(func=cmd_gt, direction="to-pattern")
    p = gsub.add_parser("from-pattern")
    p.add_argument("--system", required=True)
    p.add_argument("--pattern", required=True)
    p.set_defaults(func=cmd_gt, direction="from-pattern")

    p = sub.add_parser("render", help="draw one state")
    p.add_argument("--system", required=True)
    p.add_argument("--index", type=int, default=0)
    p.add_argument("--format", choices=["text", "svg"], default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_render)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
