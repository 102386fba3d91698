"""Search-tree mathematics: branching factors, weighted measures, counting.

A branching vector (t1..tr) lists the measure decrease in each branch of a
rule; its factor is the unique root beta > 1 of sum(beta^-ti) = 1, which
bounds the leaf count of the recursion tree as beta^mu. The weighted
measures mirror the solvers' variable-weight schemes and are used as
diagnostics: along any branch the scheme measure must shrink.

The counting half deals with a single counted clause: F_j gives the exact
number of ways to satisfy it for a given occurrence profile (how many
variables appear once, twice, ...), and G is the single-occurrence binomial
ceiling. F <= G is what lets the clause-by-clause enumerator charge each
clause at most C(k, j) cases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

from .formula import Clause, Formula

_DATA_DIR = Path(__file__).parent / "data"
TAU_FIXTURE = _DATA_DIR / "tau_values.txt"


# ---------------------------------------------------------------------------
# branching vectors


@dataclass(frozen=True)
class BranchingVector:
    decreases: tuple[float, ...]

    def __post_init__(self):
        if not self.decreases:
            raise ValueError("empty branching vector")
        if any(t <= 0 for t in self.decreases):
            raise ValueError("branching vector entries must be positive")


def branching_factor(decreases: Sequence[float], tol: float = 1e-9) -> float:
    """Unique beta > 1 with sum(beta**-t) == 1, found by bisection."""
    ts = tuple(float(t) for t in decreases)
    if len(ts) < 2:
        raise ValueError("need at least two branches")
    if any(t <= 0 for t in ts):
        raise ValueError("branching vector entries must be positive")

    def residual(x: float) -> float:
        return sum(x ** -t for t in ts) - 1.0

    # residual is strictly decreasing on (1, inf) with residual(1+) = r-1 > 0,
    # and it is negative at r**(1/min t); grow a tight bracket by doubling
    lo = 1.0 + 1e-12
    hi = 2.0
    while residual(hi) > 0.0:
        lo = hi
        hi *= 2.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if residual(mid) > 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-15 * hi:
            break
    beta = 0.5 * (lo + hi)
    assert abs(residual(beta)) <= tol
    return beta


def combine_vectors(u_branch_index: int, parent: Sequence[float], child: Sequence[float]) -> tuple[float, ...]:
    """Replace entry u of parent with u + t for every child entry t.

    Models an immediate follow-up branching inside one branch: the combined
    vector of (u, v) with follow-up (t, w) on the first branch is
    (u+t, u+w, v).
    """
    parent = tuple(float(t) for t in parent)
    child = tuple(float(t) for t in child)
    if not (0 <= u_branch_index < len(parent)):
        raise ValueError("branch index out of range")
    if not child:
        raise ValueError("child vector must be nonempty")
    u = parent[u_branch_index]
    return (
        parent[:u_branch_index]
        + tuple(u + t for t in child)
        + parent[u_branch_index + 1 :]
    )


# ---------------------------------------------------------------------------
# weighted measures


@dataclass(frozen=True)
class MeasureWeights:
    scheme: str
    weights: dict[int, float]      # lowest clause target -> variable weight
    link_deltas: dict[int, float]  # clause target -> net decrease when linking there


MEASURE_SCHEMES = {
    "g2": MeasureWeights("g2", {1: 0.8039, 2: 1.0}, {1: 0.6078}),
    "g3": MeasureWeights("g3", {1: 0.6985, 2: 0.875, 3: 1.0}, {1: 0.397, 2: 0.75}),
    "g4": MeasureWeights(
        "g4",
        {1: 0.6464, 2: 0.8376, 3: 0.9412, 4: 1.0},
        {1: 0.2928, 2: 0.6752, 3: 0.8824},
    ),
}


def clause_depends_on(clause: Clause, var: int) -> bool:
    """True when flipping var can change the clause's true-literal count.

    Operationally the signed multiplicity of var must survive x / -x
    cancellation: occurrences of var and -var that pair up contribute a
    constant 1 and carry no dependence.
    """
    return clause.occ.get(var, 0) != clause.occ.get(-var, 0)


def measure(formula: Formula, scheme: str) -> float:
    """Weighted variable count for the given scheme; at most num_vars."""
    if scheme not in MEASURE_SCHEMES:
        raise ValueError(f"unknown measure scheme {scheme!r}")
    total = 0.0
    if scheme == "g2":
        low, high = 0.8039, 1.0
        for v in range(1, formula.num_vars + 1):
            strong = [c for c in formula.clauses if clause_depends_on(c, v)]
            occurs = any(v in c.variables() for c in formula.clauses)
            if not occurs:
                continue
            if strong and not all(c.target == 2 and c.size() >= 4 for c in strong):
                total += low
            else:
                total += high
        return total
    weights = MEASURE_SCHEMES[scheme].weights
    for v in range(1, formula.num_vars + 1):
        targets = [c.target for c in formula.clauses if v in c.variables() and c.target >= 1]
        if not targets:
            continue
        total += weights[min(min(targets), max(weights))]
    return total


# ---------------------------------------------------------------------------
# clause solution counting


@dataclass(frozen=True)
class OccurrenceProfile:
    """How many of a clause's ell variables appear once/twice/thrice/4 times."""

    ell: int
    once: int
    twice: int = 0
    thrice: int = 0
    quad: int = 0

    def __post_init__(self):
        parts = (self.once, self.twice, self.thrice, self.quad)
        if any(p < 0 for p in parts) or sum(parts) != self.ell:
            raise ValueError("inconsistent occurrence profile")

    def as_clause(self, target: int) -> Clause:
        lits = []
        v = 1
        for count, mult in ((self.once, 1), (self.twice, 2), (self.thrice, 3), (self.quad, 4)):
            for _ in range(count):
                lits.extend([v] * mult)
                v += 1
        return Clause(target, lits)


@lru_cache(maxsize=None)
def f1(ell: int) -> int:
    return ell


@lru_cache(maxsize=None)
def f2(ell: int, a: int, b: int) -> int:
    assert a + b == ell and a >= 0 and b >= 0
    if ell == 0:
        return 0
    if ell == 1:
        return 1 if b == 1 else 0
    if b > 0:
        return f2(ell - 1, a, b - 1) + 1
    return math.comb(a, 2)


@lru_cache(maxsize=None)
def f3(ell: int, a: int, b: int, c: int) -> int:
    assert a + b + c == ell and min(a, b, c) >= 0
    if ell == 0:
        return 0
    if ell == 1:
        return 1 if c == 1 else 0
    if c > 0:
        return f3(ell - 1, a, b, c - 1) + 1
    if b > 0:
        return f3(ell - 1, a, b - 1, c) + a
    return math.comb(a, 3)


@lru_cache(maxsize=None)
def f4(ell: int, a: int, b: int, c: int, d: int) -> int:
    assert a + b + c + d == ell and min(a, b, c, d) >= 0
    if ell == 0:
        return 0
    if ell == 1:
        return 1 if d == 1 else 0
    if d > 0:
        return f4(ell - 1, a, b, c, d - 1) + 1
    if c > 0:
        return f4(ell - 1, a, b, c - 1, d) + a
    if b > 0:
        return f4(ell - 1, a, b - 1, c, d) + (b - 1) + math.comb(a, 2)
    return math.comb(a, 4)


def profile_count(profile: OccurrenceProfile, target: int) -> int:
    """Exact satisfying-assignment count for the canonical profile clause."""
    if target == 1:
        if profile.twice or profile.thrice or profile.quad:
            raise ValueError("multiplicities above 1 need a matching target")
        return f1(profile.ell)
    if target == 2:
        if profile.thrice or profile.quad:
            raise ValueError("multiplicity exceeds target")
        return f2(profile.ell, profile.once, profile.twice)
    if target == 3:
        if profile.quad:
            raise ValueError("multiplicity exceeds target")
        return f3(profile.ell, profile.once, profile.twice, profile.thrice)
    if target == 4:
        return f4(profile.ell, profile.once, profile.twice, profile.thrice, profile.quad)
    raise ValueError("target must be 1..4")


def _profiles(ell: int, max_mult: int) -> Iterable[tuple[int, ...]]:
    if max_mult == 1:
        yield (ell,)
        return
    for head in range(ell + 1):
        for rest in _profiles(ell - head, max_mult - 1):
            yield (head,) + rest


def big_f(ell: int, h: int) -> int:
    """Max ways to satisfy any clause with ell variables and target <= h."""
    if not (1 <= h <= 4):
        raise ValueError("h must be 1..4")
    if ell == 0:
        return 1
    best = f1(ell)
    for j in range(2, h + 1):
        fj = {2: f2, 3: f3, 4: f4}[j]
        for parts in _profiles(ell, j):
            best = max(best, fj(ell, *parts))
    return best


def big_g(ell: int, h: int) -> int:
    """Single-occurrence ceiling: max of C(ell, j) over j <= h."""
    if ell < 0 or not (1 <= h <= 4):
        raise ValueError("bad arguments")
    return max(math.comb(ell, j) for j in range(0, h + 1))


@dataclass
class CountingReport:
    ell_max: int
    profiles_checked: int = 0
    oracle_checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_f_le_g(ell_max: int, oracle_ell_max: int = 8) -> CountingReport:
    """Check F(ell,h) <= G(ell,h) everywhere, and F against brute counts.

    The brute cross-check enumerates every occurrence profile up to
    oracle_ell_max and compares the recursion with exhaustive counting of the
    canonical clause.
    """
    from .oracle import count_clause_solutions

    if ell_max < 1:
        raise ValueError("ell_max must be >= 1")
    report = CountingReport(ell_max=ell_max)
    for ell in range(0, ell_max + 1):
        for h in range(1, 5):
            report.profiles_checked += 1
            if big_f(ell, h) > big_g(ell, h):
                report.failures.append(("F>G", ell, h, big_f(ell, h), big_g(ell, h)))
    for ell in range(1, min(oracle_ell_max, ell_max) + 1):
        for j in range(1, 5):
            for parts in _profiles(ell, j):
                prof = OccurrenceProfile(ell, *parts, *(0,) * (4 - j))
                expected = count_clause_solutions(prof.as_clause(j))
                got = profile_count(prof, j)
                report.oracle_checked += 1
                if got != expected:
                    report.failures.append(("F!=brute", j, parts, got, expected))
    return report


# ---------------------------------------------------------------------------
# split parameter for the two-sided solver


def binom_branching(k: int, h: int) -> float:
    """Per-variable case count C(k,h)**(1/k) of branching a k-variable clause."""
    if not (1 <= h <= k):
        raise ValueError("need 1 <= h <= k")
    return math.comb(k, h) ** (1.0 / k)


def alpha_for(c: float) -> tuple[float, float]:
    """Split fraction alpha with c**alpha == 2**(1-alpha), and that common base.

    alpha n variables enumerated at cost c per variable balance against a
    2**((1-alpha) n) sweep of the rest.
    """
    if c <= 1.0:
        raise ValueError("base must exceed 1")
    alpha = math.log(2.0) / (math.log(2.0) + math.log(c))
    return alpha, c ** alpha


@dataclass
class BoundReport:
    k_max: int
    bound: float
    max_pair_term: float
    max_single_term: float

    @property
    def ok(self) -> bool:
        return self.max_pair_term <= self.bound and self.max_single_term <= self.bound


def max_binom_branching_bound(k_max: int, bound: float = 1.5849) -> BoundReport:
    """Confirm (k(k-1)/2)**(1/k) and k**(1/k) stay below `bound` for k >= 7.

    Works in log space so k_max around 10**6 is cheap; both sequences are
    decreasing on this range, but every k is still checked.
    """
    import numpy as np

    if k_max < 7:
        raise ValueError("k_max must be >= 7")
    ks = np.arange(7, k_max + 1, dtype=np.float64)
    pair = (np.log(ks) + np.log(ks - 1.0) - math.log(2.0)) / ks
    single = np.log(ks) / ks
    return BoundReport(
        k_max=k_max,
        bound=bound,
        max_pair_term=float(np.exp(pair.max())),
        max_single_term=float(np.exp(single.max())),
    )


# ---------------------------------------------------------------------------
# regression fixture


def load_tau_regression(path: Path | None = None) -> list[tuple[tuple[float, ...], float, str]]:
    """Parse the shipped fixture: lines of "t1,t2,... = expected  # note"."""
    path = path or TAU_FIXTURE
    entries = []
    for raw in path.read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        note = raw.split("#", 1)[1].strip() if "#" in raw else ""
        if not line:
            continue
        lhs, rhs = line.split("=")
        vector = tuple(float(t) for t in lhs.split(","))
        entries.append((vector, float(rhs), note))
    return entries


def run_tau_regression(tol: float = 1e-3, path: Path | None = None):
    """Recompute every fixture entry; returns (entries, computed, ok) triples."""
    results = []
    for vector, expected, note in load_tau_regression(path):
        got = branching_factor(vector)
        results.append((vector, expected, got, abs(got - expected) <= tol, note))
    return results
