"""Command-line front end.

Exit codes follow solver-community convention: 10 satisfiable, 20
unsatisfiable, 1 input error, 2 resource or timeout. Output is line
oriented: "s ..." for status, "v ..." for a witness, "c key value" for
diagnostics. GIXSAT_ORACLE_LIMIT overrides the brute-force variable cap.
"""

from __future__ import annotations

import argparse
import signal
import sys
import time

from . import analysis, dpll, generator, mitm, oracle, textio
from .formula import Formula

EXIT_SAT = 10
EXIT_UNSAT = 20
EXIT_INPUT = 1
EXIT_RESOURCE = 2


class _Timeout(Exception):
    pass


def _alarm(signum, frame):
    raise _Timeout()


def _read_formula(path: str) -> Formula:
    if path == "-":
        return textio.parse(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return textio.parse(fh.read())


def _cmd_solve(args) -> int:
    try:
        formula = _read_formula(args.file)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if args.timeout:
        signal.signal(signal.SIGALRM, _alarm)
        signal.setitimer(signal.ITIMER_REAL, args.timeout)
    try:
        started = time.monotonic()
        if args.algo == "brute":
            report = oracle.brute_solve(formula)
            result = dpll.SolveResult(report.sat, report.first_model)
        elif args.algo == "mitm":
            result = mitm.solve_mitm(formula, alpha=args.alpha)
        elif args.algo == "auto":
            result = dpll.solve_auto(formula, instrument=args.stats)
        else:
            solver = {"g2": dpll.solve_g2, "g3": dpll.solve_g3, "g4": dpll.solve_g4}[args.algo]
            result = solver(formula, instrument=args.stats)
        elapsed = time.monotonic() - started
    except _Timeout:
        print("c timeout", file=sys.stderr)
        return EXIT_RESOURCE
    except mitm.ResourceLimitError as exc:
        print(f"c resource {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        if args.timeout:
            signal.setitimer(signal.ITIMER_REAL, 0)

    print("s SATISFIABLE" if result.sat else "s UNSATISFIABLE")
    if args.witness and result.sat and result.model:
        lits = [v if result.model[v] else -v for v in sorted(result.model)]
        print("v " + " ".join(map(str, lits)) + " 0")
    if args.stats:
        print(f"c time {elapsed:.3f}")
        st = result.stats
        if isinstance(st, dpll.SearchStats):
            print(f"c nodes {st.nodes_expanded}")
            print(f"c max_depth {st.max_depth}")
            print(f"c root_measure {st.measure_at_root:.4f}")
            for tag in sorted(st.rule_fires):
                print(f"c rule {tag} {st.rule_fires[tag]}")
            for tag in sorted(st.fallback_fires):
                print(f"c fallback {tag} {st.fallback_fires[tag]}")
        elif isinstance(st, mitm.MitmStats):
            print(f"c alpha {st.alpha:.6f}")
            print(f"c cover_size {st.cover_size}")
            print(f"c covered_vars {st.covered_vars}")
            print(f"c complement_vars {st.complement_vars}")
            print(f"c index_size {st.index_size}")
            print(f"c sweep_count {st.sweep_count}")
    return EXIT_SAT if result.sat else EXIT_UNSAT


def _cmd_gen(args) -> int:
    try:
        spec = generator.GenSpec(
            num_vars=args.n,
            num_clauses=args.m,
            min_len=args.min_len,
            max_len=args.max_len,
            max_target=args.max_target,
            neg_prob=args.neg_prob,
            max_repeat=args.max_repeat,
            planted=args.planted,
            seed=args.seed,
        )
        formula, hidden = generator.generate(spec)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = textio.serialize(formula)
    if hidden is not None:
        lits = " ".join(str(v if hidden[v] else -v) for v in sorted(hidden))
        text = f"c planted {lits}\n" + text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_analyze(args) -> int:
    if args.tau:
        try:
            vector = tuple(float(t) for t in args.tau.split(","))
            value = analysis.branching_factor(vector)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        print(f"tau({args.tau}) = {value:.6f}")
        return 0
    if args.alpha_for is not None:
        try:
            alpha, base = analysis.alpha_for(args.alpha_for)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        print(f"alpha = {alpha:.6f}")
        print(f"base = {base:.6f}")
        return 0
    if args.tables is not None:
        lmax = args.tables
        print("ell F(.,2) G(.,2) F(.,3) G(.,3) F(.,4) G(.,4)")
        for ell in range(1, lmax + 1):
            row = [str(ell)]
            for h in (2, 3, 4):
                row.append(str(analysis.big_f(ell, h)))
                row.append(str(analysis.big_g(ell, h)))
            print(" ".join(row))
        return 0
    if args.regression:
        results = analysis.run_tau_regression()
        bad = 0
        for vector, expected, got, ok, note in results:
            mark = "ok" if ok else "FAIL"
            if not ok:
                bad += 1
            vec = ",".join(f"{t:g}" for t in vector)
            print(f"{mark} tau({vec}) = {got:.5f} expected {expected} ({note})")
        print(f"c {len(results)} entries, {bad} failures")
        return 0 if bad == 0 else EXIT_INPUT
    print("error: nothing to analyze (see --help)", file=sys.stderr)
    return EXIT_INPUT


def _cmd_verify(args) -> int:
    import random as _random

    rng = _random.Random(args.seed)
    mismatches = 0
    for k in range(args.count):
        n = rng.randint(3, args.n)
        spec = generator.GenSpec(
            num_vars=n,
            num_clauses=rng.randint(1, max(2, (2 * n) // 3)),
            min_len=1,
            max_len=min(6, n),
            max_target=rng.randint(1, 4),
            neg_prob=0.5,
            max_repeat=rng.choice([1, 1, 2]),
            planted=args.planted,
            seed=rng.getrandbits(48),
        )
        formula, _ = generator.generate(spec)
        truth = oracle.brute_solve(formula).sat
        answers = {
            "dpll": dpll.solve_auto(formula).sat,
            "mitm": mitm.solve_mitm(formula).sat,
        }
        wrong = {name: got for name, got in answers.items() if got != truth}
        if wrong:
            mismatches += 1
            print(f"c mismatch instance {k}: oracle={truth} {wrong}")
            sys.stdout.write(textio.serialize(formula))
    print(f"c verified {args.count} instances, {mismatches} mismatches")
    return 0 if mismatches == 0 else EXIT_INPUT


def _cmd_bench(args) -> int:
    for k in range(args.count):
        spec = generator.GenSpec(
            num_vars=args.n,
            num_clauses=args.m,
            min_len=4,
            max_len=6,
            max_target=args.max_target,
            planted=True,
            seed=args.seed + k,
        )
        formula, _ = generator.generate(spec)
        started = time.monotonic()
        result = dpll.solve_auto(formula)
        elapsed = time.monotonic() - started
        nodes = result.stats.nodes_expanded if result.stats else 0
        print(f"c bench n={args.n} m={args.m} seed={args.seed + k} "
              f"status={result.status} nodes={nodes} time={elapsed:.2f}s")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gixsat")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide an instance")
    p.add_argument("file", help="input path, or - for stdin")
    p.add_argument("--algo", choices=["auto", "g2", "g3", "g4", "mitm", "brute"], default="auto")
    p.add_argument("--alpha", type=float, default=None, help="cover fraction for --algo mitm")
    p.add_argument("--witness", action="store_true", help="print a model when satisfiable")
    p.add_argument("--stats", action="store_true", help="print search diagnostics")
    p.add_argument("--timeout", type=float, default=0.0, help="seconds before giving up")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--min-len", type=int, default=3)
    p.add_argument("--max-len", type=int, default=5)
    p.add_argument("--max-target", type=int, default=2)
    p.add_argument("--neg-prob", type=float, default=0.5)
    p.add_argument("--max-repeat", type=int, default=1)
    p.add_argument("--planted", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("analyze", help="branching factors, split fractions, tables")
    p.add_argument("--tau", default=None, help="comma-separated branching vector")
    p.add_argument("--alpha-for", type=float, default=None, dest="alpha_for")
    p.add_argument("--tables", type=int, default=None, help="print F/G tables up to this size")
    p.add_argument("--regression", action="store_true", help="run the shipped branching-factor fixture")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("verify", help="cross-check solvers against brute force")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--n", type=int, default=10, help="max variables per instance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--planted", action="store_true", help="generate satisfiable instances only")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="time the solver on planted instances")
    p.add_argument("--n", type=int, default=40)
    p.add_argument("--m", type=int, default=30)
    p.add_argument("--max-target", type=int, default=2)
    p.add_argument("--count", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
