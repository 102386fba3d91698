"""Timing sweep: planted instances far beyond the brute-force cap.

Runs the branch-and-bound solver on planted exactly-2 instances of growing
size and prints nodes and wall time per instance. Useful as a smoke check
that search stays shallow on satisfiable under-constrained inputs.
"""

import argparse
import time

from gixsat.dpll import solve_auto
from gixsat.formula import evaluate
from gixsat.generator import GenSpec, generate


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="20,30,40,50")
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--max-target", type=int, default=2)
    ap.add_argument("--ratio", type=float, default=0.75, help="clauses per variable")
    args = ap.parse_args()

    print(f"{'n':>4} {'m':>4} {'seed':>4} {'status':>6} {'nodes':>7} {'depth':>5} {'time':>8}")
    for n in (int(s) for s in args.sizes.split(",")):
        m = max(1, round(args.ratio * n))
        for seed in range(args.seeds):
            spec = GenSpec(num_vars=n, num_clauses=m, min_len=4, max_len=6,
                           max_target=args.max_target, planted=True, seed=seed)
            formula, _ = generate(spec)
            started = time.monotonic()
            result = solve_auto(formula)
            elapsed = time.monotonic() - started
            assert result.sat and evaluate(formula, result.model)
            st = result.stats
            print(f"{n:>4} {m:>4} {seed:>4} {result.status:>6} "
                  f"{st.nodes_expanded:>7} {st.max_depth:>5} {elapsed:>7.3f}s")


if __name__ == "__main__":
    main()
