"""Seeded random instance generation, with an optional planted solution.

Random mode draws clause lengths, literals, and targets independently.
Planted mode first draws a hidden assignment and sets each clause's target
to the number of its literals the assignment makes true, resampling (and
finally constructing directly) when that count falls outside 1..max_target,
so planted instances are satisfiable by construction. Everything is a pure
function of the seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .formula import Clause, Formula


@dataclass(frozen=True)
class GenSpec:
    num_vars: int
    num_clauses: int
    min_len: int = 3
    max_len: int = 5
    max_target: int = 2
    neg_prob: float = 0.5
    max_repeat: int = 1
    planted: bool = False
    seed: int = 0

    def __post_init__(self):
        if self.min_len < 1 or self.max_len < self.min_len:
            raise ValueError("bad clause length range")
        if not (1 <= self.max_target <= 4):
            raise ValueError("max_target must be 1..4")
        if self.max_repeat < 1:
            raise ValueError("max_repeat must be >= 1")
        if self.num_vars < 1 or self.num_clauses < 0:
            raise ValueError("need at least one variable")
        if self.max_repeat == 1 and self.max_len > self.num_vars:
            raise ValueError("distinct literals require max_len <= num_vars")


def _draw_literals(rng: random.Random, spec: GenSpec, length: int) -> list[int]:
    lits: list[int] = []
    counts: dict[int, int] = {}
    guard = 0
    while len(lits) < length:
        guard += 1
        if guard > 10000:
            raise RuntimeError("literal sampling failed to converge")
        v = rng.randint(1, spec.num_vars)
        lit = v if rng.random() >= spec.neg_prob else -v
        if spec.max_repeat == 1 and (lit in counts or -lit in counts):
            continue
        if counts.get(lit, 0) >= spec.max_repeat:
            continue
        counts[lit] = counts.get(lit, 0) + 1
        lits.append(lit)
    return lits


def generate(spec: GenSpec) -> tuple[Formula, Optional[dict[int, int]]]:
    """Build a formula (and the hidden model when planted)."""
    rng = random.Random(spec.seed)
    hidden = None
    if spec.planted:
        hidden = {v: rng.randint(0, 1) for v in range(1, spec.num_vars + 1)}
    clauses = []
    for _ in range(spec.num_clauses):
        length = rng.randint(spec.min_len, spec.max_len)
        if not spec.planted:
            lits = _draw_literals(rng, spec, length)
            target = rng.randint(1, min(spec.max_target, length))
            clauses.append(Clause(target, lits))
            continue
        clause = None
        for _ in range(200):
            lits = _draw_literals(rng, spec, length)
            count = sum(1 for l in lits if (hidden[abs(l)] if l > 0 else 1 - hidden[abs(l)]))
            if 1 <= count <= spec.max_target:
                clause = Clause(count, lits)
                break
        if clause is None:
            # construct directly: pick which slots are true under the model
            target = rng.randint(1, min(spec.max_target, length))
            variables = rng.sample(range(1, spec.num_vars + 1), min(length, spec.num_vars))
            while len(variables) < length:
                variables.append(rng.randint(1, spec.num_vars))
            lits = []
            for k, v in enumerate(variables):
                make_true = k < target
                lit = v if hidden[v] == 1 else -v
                lits.append(lit if make_true else -lit)
            clause = Clause(target, lits)
        clauses.append(clause)
    return Formula(spec.num_vars, clauses), hidden
