"""Text format: an extended DIMACS dialect for counted clauses.

Grammar: comment lines start with 'c'; the header is "p gxsat <n> <m>";
each clause is "<target> <lit> ... 0" with signed nonzero integers and may
span lines until its 0 terminator. Putting the target first (rather than
as a trailing annotation) makes plain CNF tools fail loudly instead of
silently misreading counted clauses. Exactly-1 instances are ordinary
files with every target 1.
"""

from __future__ import annotations

from .formula import Clause, Formula

MAX_TARGET = 4


class ParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse(text: str) -> Formula:
    header = None
    tokens: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if header is not None:
                raise ParseError("duplicate header", lineno)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "gxsat":
                raise ParseError("header must be 'p gxsat <vars> <clauses>'", lineno)
            try:
                header = (int(parts[2]), int(parts[3]), lineno)
            except ValueError:
                raise ParseError("header counts must be integers", lineno) from None
            if header[0] < 0 or header[1] < 0:
                raise ParseError("header counts must be nonnegative", lineno)
            continue
        if header is None:
            raise ParseError("clause data before 'p gxsat' header", lineno)
        for tok in line.split():
            tokens.append((lineno, tok))
    if header is None:
        raise ParseError("missing 'p gxsat' header", len(text.splitlines()) or 1)
    num_vars, num_clauses, _ = header

    clauses = []
    pos = 0
    while pos < len(tokens):
        lineno, tok = tokens[pos]
        try:
            target = int(tok)
        except ValueError:
            raise ParseError(f"expected clause target, got {tok!r}", lineno) from None
        if target < 0:
            raise ParseError(f"clause target {target} is negative", lineno)
        if target > MAX_TARGET:
            raise ParseError(f"clause target {target} exceeds {MAX_TARGET}", lineno)
        pos += 1
        lits = []
        closed = False
        while pos < len(tokens):
            lineno, tok = tokens[pos]
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"expected literal, got {tok!r}", lineno) from None
            pos += 1
            if lit == 0:
                closed = True
                break
            if not (1 <= abs(lit) <= num_vars):
                raise ParseError(f"literal {lit} out of range 1..{num_vars}", lineno)
            lits.append(lit)
        if not closed:
            raise ParseError("clause missing its 0 terminator", tokens[-1][0])
        clauses.append(Clause(target, lits))
    if len(clauses) != num_clauses:
        raise ParseError(
            f"header declared {num_clauses} clauses, found {len(clauses)}",
            tokens[-1][0] if tokens else header[2],
        )
    return Formula(num_vars, clauses)


def serialize(formula: Formula) -> str:
    """Canonical text: one clause per line, literals sorted by (var, polarity)."""
    lines = [f"p gxsat {formula.num_vars} {len(formula.clauses)}"]
    for c in formula.clauses:
        parts = [str(c.target)] + [str(l) for l in c.expanded()] + ["0"]
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"
