"""Core objects for counted-clause exact satisfiability.

Literals are nonzero ints in DIMACS style: +v for variable v, -v for its
negation. A clause holds a target count and a multiset of literals; a total
assignment satisfies it when exactly ``target`` of its literals, counted with
multiplicity, evaluate to true. A formula is a positional list of clauses
over variables 1..num_vars (duplicate clauses are legal and preserved).

Search state lives in a Trail: per variable either a constant, a link to a
surviving literal, or a resolution record that lets the variable's value be
recovered from any total assignment of the survivors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional


def negate(lit: int) -> int:
    return -lit


def var_of(lit: int) -> int:
    return abs(lit)


def lit_key(lit: int):
    """Sort key: by variable, positive polarity first."""
    return (abs(lit), lit < 0)


def lit_value(lit: int, model: Mapping[int, int]) -> int:
    v = model[abs(lit)]
    return v if lit > 0 else 1 - v


class Clause:
    """A target count plus a literal multiset, stored as lit -> multiplicity."""

    __slots__ = ("target", "occ")

    def __init__(self, target: int, literals: Iterable[int] | Mapping[int, int] = ()):
        self.target = target
        occ: dict[int, int] = {}
        if isinstance(literals, Mapping):
            for lit, mult in literals.items():
                if lit == 0 or mult <= 0:
                    raise ValueError("bad literal/multiplicity in clause")
                occ[lit] = occ.get(lit, 0) + mult
        else:
            for lit in literals:
                if lit == 0:
                    raise ValueError("0 is not a literal")
                occ[lit] = occ.get(lit, 0) + 1
        self.occ = occ

    def size(self) -> int:
        """Total literal count, with multiplicity."""
        return sum(self.occ.values())

    def variables(self) -> set[int]:
        return {abs(l) for l in self.occ}

    def mult(self, lit: int) -> int:
        return self.occ.get(lit, 0)

    def sorted_literals(self) -> list[int]:
        """Distinct literals in canonical order."""
        return sorted(self.occ, key=lit_key)

    def expanded(self) -> list[int]:
        """All literals with multiplicity, in canonical order."""
        out = []
        for lit in self.sorted_literals():
            out.extend([lit] * self.occ[lit])
        return out

    def key(self):
        """Hashable identity (target + multiset) for duplicate detection."""
        return (self.target, tuple(sorted(self.occ.items())))

    def copy(self) -> "Clause":
        c = Clause.__new__(Clause)
        c.target = self.target
        c.occ = dict(self.occ)
        return c

    def __eq__(self, other):
        return (
            isinstance(other, Clause)
            and self.target == other.target
            and self.occ == other.occ
        )

    def __repr__(self):
        return f"C{self.target}({' '.join(map(str, self.expanded()))})"


class Formula:
    """Clause list over variables 1..num_vars."""

    __slots__ = ("num_vars", "clauses", "max_target")

    def __init__(self, num_vars: int, clauses: Iterable[Clause] = (), max_target: Optional[int] = None):
        if num_vars < 0:
            raise ValueError("num_vars must be nonnegative")
        self.num_vars = num_vars
        self.clauses = list(clauses)
        for c in self.clauses:
            if c.target < 0:
                raise ValueError("negative clause target")
            for lit in c.occ:
                if not (1 <= abs(lit) <= num_vars):
                    raise ValueError(f"literal {lit} out of range 1..{num_vars}")
        if max_target is None:
            max_target = max((c.target for c in self.clauses), default=0)
        self.max_target = max_target

    def copy(self) -> "Formula":
        f = Formula.__new__(Formula)
        f.num_vars = self.num_vars
        f.clauses = [c.copy() for c in self.clauses]
        f.max_target = self.max_target
        return f

    def total_occurrences(self) -> int:
        return sum(c.size() for c in self.clauses)

    def __eq__(self, other):
        return (
            isinstance(other, Formula)
            and self.num_vars == other.num_vars
            and self.clauses == other.clauses
        )

    def __repr__(self):
        return f"Formula(n={self.num_vars}, {self.clauses})"


class Trail:
    """Per-variable search state plus the chronological event list.

    States: absent (unassigned), ("const", 0/1), ("link", lit) meaning the
    variable equals the value of lit, or ("res", alpha, beta) where alpha and
    beta are literal multisets recorded by resolution; the variable is 1 iff
    exactly one literal of beta is true under the surviving assignment.
    """

    __slots__ = ("num_vars", "entries", "events")

    def __init__(self, num_vars: int):
        self.num_vars = num_vars
        self.entries: dict[int, tuple] = {}
        self.events: list[int] = []

    def is_unassigned(self, var: int) -> bool:
        return var not in self.entries

    def unassigned_vars(self) -> list[int]:
        return [v for v in range(1, self.num_vars + 1) if v not in self.entries]

    def record_const(self, var: int, value: int) -> None:
        if var in self.entries:
            raise ValueError(f"variable {var} already resolved")
        self.entries[var] = ("const", value)
        self.events.append(var)

    def record_link(self, var: int, partner: int) -> None:
        if var in self.entries:
            raise ValueError(f"variable {var} already resolved")
        if abs(partner) == var:
            raise ValueError("cannot link a variable to itself")
        if abs(partner) in self.entries:
            raise ValueError("link partner must be unassigned")
        self.entries[var] = ("link", partner)
        self.events.append(var)

    def record_resolution(self, var: int, alpha: tuple, beta: tuple) -> None:
        if var in self.entries:
            raise ValueError(f"variable {var} already resolved")
        self.entries[var] = ("res", alpha, beta)
        self.events.append(var)

    def copy(self) -> "Trail":
        t = Trail.__new__(Trail)
        t.num_vars = self.num_vars
        t.entries = dict(self.entries)
        t.events = list(self.events)
        return t

    def reconstruct(self, root_values: Mapping[int, int]) -> dict[int, int]:
        model: dict[int, int] = {}
        for v in range(1, self.num_vars + 1):
            st = self.entries.get(v)
            if st is None:
                if v not in root_values:
                    raise ValueError(f"no value supplied for unassigned variable {v}")
                model[v] = root_values[v]
            elif st[0] == "const":
                model[v] = st[1]
        # Links and resolutions refer to variables that were alive at record
        # time, so replay newest first.
        for v in reversed(self.events):
            st = self.entries[v]
            if st[0] == "link":
                partner = st[1]
                if abs(partner) not in model:
                    raise ValueError("link chain reached an unvalued variable")
                model[v] = lit_value(partner, model)
            elif st[0] == "res":
                beta = st[2]
                true_count = sum(m for lit, m in beta if lit_value(lit, model))
                model[v] = 1 if true_count == 1 else 0
        return model


@dataclass
class SolveResult:
    sat: bool
    model: Optional[dict[int, int]] = None
    stats: object = None

    @property
    def status(self) -> str:
        return "SAT" if self.sat else "UNSAT"


def assign(formula: Formula, trail: Trail, var: int, value: int) -> Optional[Formula]:
    """Substitute var := value. Returns the new formula, or None on conflict.

    On conflict the trail is left untouched and the (formula, trail) pair
    should be discarded by the caller.
    """
    if not trail.is_unassigned(var):
        raise ValueError(f"variable {var} already resolved")
    if value not in (0, 1):
        raise ValueError("value must be 0 or 1")
    new_clauses = []
    for c in formula.clauses:
        p = c.occ.get(var, 0)
        q = c.occ.get(-var, 0)
        if p == 0 and q == 0:
            new_clauses.append(c)
            continue
        nc = c.copy()
        nc.occ.pop(var, None)
        nc.occ.pop(-var, None)
        nc.target -= p if value == 1 else q
        if nc.target < 0 or nc.target > nc.size():
            return None
        new_clauses.append(nc)
    trail.record_const(var, value)
    out = Formula.__new__(Formula)
    out.num_vars = formula.num_vars
    out.clauses = new_clauses
    out.max_target = formula.max_target
    return out


def link(formula: Formula, trail: Trail, var: int, partner: int) -> Optional[Formula]:
    """Substitute var := partner (a literal over another variable).

    Occurrences of var become partner, occurrences of -var become -partner,
    and any partner/-partner pairs created this way cancel against the
    target. Returns None on conflict (trail untouched).
    """
    if not trail.is_unassigned(var):
        raise ValueError(f"variable {var} already resolved")
    if abs(partner) == var:
        raise ValueError("cannot link a variable to itself")
    if not trail.is_unassigned(abs(partner)):
        raise ValueError("link partner must be unassigned")
    new_clauses = []
    for c in formula.clauses:
        p = c.occ.get(var, 0)
        q = c.occ.get(-var, 0)
        if p == 0 and q == 0:
            new_clauses.append(c)
            continue
        nc = c.copy()
        nc.occ.pop(var, None)
        nc.occ.pop(-var, None)
        if p:
            nc.occ[partner] = nc.occ.get(partner, 0) + p
        if q:
            nc.occ[-partner] = nc.occ.get(-partner, 0) + q
        pos = nc.occ.get(partner, 0)
        neg = nc.occ.get(-partner, 0)
        cancel = min(pos, neg)
        if cancel:
            nc.target -= cancel
            for l, m in ((partner, pos - cancel), (-partner, neg - cancel)):
                if m:
                    nc.occ[l] = m
                else:
                    nc.occ.pop(l, None)
        if nc.target < 0 or nc.target > nc.size():
            return None
        new_clauses.append(nc)
    trail.record_link(var, partner)
    out = Formula.__new__(Formula)
    out.num_vars = formula.num_vars
    out.clauses = new_clauses
    out.max_target = formula.max_target
    return out


def evaluate(formula: Formula, model: Mapping[int, int]) -> bool:
    """True iff every clause has exactly target true literals (with multiplicity)."""
    for c in formula.clauses:
        count = 0
        for lit, m in c.occ.items():
            if lit_value(lit, model):
                count += m
        if count != c.target:
            return False
    return True


def reconstruct_model(trail: Trail, root_values: Mapping[int, int]) -> dict[int, int]:
    """Extend values of the surviving variables to a total assignment."""
    return trail.reconstruct(root_values)


def degree(formula: Formula, var: int) -> int:
    """Total occurrences of var and -var across all clauses, with multiplicity."""
    return sum(c.occ.get(var, 0) + c.occ.get(-var, 0) for c in formula.clauses)


def is_heavy(formula: Formula, var: int) -> bool:
    return degree(formula, var) >= 3


def apply_literal(formula: Formula, trail: Trail, lit: int, value: int) -> Optional[Formula]:
    """Make literal lit take truth value `value` (assign on the variable)."""
    return assign(formula, trail, abs(lit), value if lit > 0 else 1 - value)


def link_literals(formula: Formula, trail: Trail, lit_a: int, lit_b: int) -> Optional[Formula]:
    """Record the deduction value(lit_a) = value(lit_b), eliminating var(lit_a)."""
    partner = lit_b if lit_a > 0 else -lit_b
    return link(formula, trail, abs(lit_a), partner)
