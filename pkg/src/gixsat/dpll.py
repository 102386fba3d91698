"""Polynomial-space branch-and-bound solvers for targets up to 4.

Each solver interleaves simplify_to_fixpoint with a fixed priority list of
rules. A rule is either a forced simplification (a list of assignments,
links, or clause edits) or a branching whose branch prescriptions are
mutually exclusive and jointly cover every satisfying extension of the
touched variables. Rule selection always picks the lowest applicable rule;
inside a rule, ties break on lowest clause index, then lowest variable.

Three rule sets share the engine:

  g2 (targets <= 2): rules 8..18; rules 16/17 isolate and brute-force heavy
      variables (degree >= 3), rule 18 finishes the degree <= 2 remainder by
      component decomposition.
  g3 (targets <= 3): rules 6..10, clearing exactly-1, then exactly-2, then
      exactly-3 clauses.
  g4 (targets <= 4): rules 6..12, extending g3 by exactly-4 handling.

Where a clause shape has no specific prescription, the engine falls back to
branching the lowest relevant variable 0/1 and records the event in
SearchStats.fallback_fires for audit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from .analysis import measure
from .formula import (
    Clause,
    Formula,
    SolveResult,
    Trail,
    assign,
    degree,
    evaluate,
    link_literals,
    reconstruct_model,
)
from .simplify import simplify_to_fixpoint


@dataclass
class SearchStats:
    nodes_expanded: int = 0
    max_depth: int = 0
    rule_fires: dict = field(default_factory=dict)
    fallback_fires: dict = field(default_factory=dict)
    measure_at_root: float = 0.0
    measure_checks: int = 0
    measure_violations: list = field(default_factory=list)

    def fire(self, tag: str) -> None:
        self.rule_fires[tag] = self.rule_fires.get(tag, 0) + 1

    def fallback(self, tag: str) -> None:
        self.fallback_fires[tag] = self.fallback_fires.get(tag, 0) + 1


@dataclass
class Rule:
    tag: str
    kind: str  # "simp" | "branch" | "unsat" | "endgame"
    actions: tuple = ()
    branches: tuple = ()
    fallback: bool = False


def _simp(tag, actions, fallback=False):
    return Rule(tag, "simp", actions=tuple(actions), fallback=fallback)


def _branch(tag, branches, fallback=False):
    return Rule(tag, "branch", branches=tuple(tuple(b) for b in branches), fallback=fallback)


def _unsat(tag):
    return Rule(tag, "unsat")


def _branch_lit(tag, lit, fallback=False):
    return _branch(tag, [[("true", lit)], [("false", lit)]], fallback=fallback)


def _branch_pair2(tag, x, y):
    # exactly-one style: x = -y, or both false
    return _branch(tag, [[("link", x, -y)], [("false", x), ("false", y)]])


def _branch_pair3(tag, x, y):
    return _branch(tag, [
        [("true", x), ("true", y)],
        [("link", x, -y)],
        [("false", x), ("false", y)],
    ])


def _branch_4lit(tag, lits):
    x, y, z, w = lits
    return _branch(tag, [
        [("link", x, -y), ("link", z, -w)],
        [("link", x, y), ("link", z, w), ("link", y, -w)],
    ])


def _apply_actions(f: Formula, trail: Trail, actions) -> Optional[Formula]:
    for act in actions:
        kind = act[0]
        if kind in ("true", "false"):
            lit = act[1]
            want = 1 if kind == "true" else 0
            v = abs(lit)
            val = want if lit > 0 else 1 - want
            st = trail.entries.get(v)
            if st is not None:
                if st[0] == "const":
                    if st[1] == val:
                        continue
                    return None
                raise RuntimeError("prescription touches an eliminated variable")
            f = assign(f, trail, v, val)
        elif kind == "link":
            f = link_literals(f, trail, act[1], act[2])
        elif kind == "add":
            f = f.copy()
            f.clauses.append(Clause(act[1], act[2]))
        elif kind == "replace":
            f = f.copy()
            f.clauses[act[1]] = Clause(act[2], act[3])
        elif kind == "remove":
            f = f.copy()
            del f.clauses[act[1]]
        else:
            raise RuntimeError(f"unknown action {act!r}")
        if f is None:
            return None
    return f


# ---------------------------------------------------------------------------
# shared per-clause views


def _lit_of(c: Clause, v: int) -> int:
    return v if c.occ.get(v, 0) else -v


def _mult_profile(occ: dict) -> tuple:
    return tuple(sorted(occ.values(), reverse=True))


def _c1_3lits(f: Formula):
    return [(i, c) for i, c in enumerate(f.clauses) if c.target == 1 and c.size() == 3]


# ---------------------------------------------------------------------------
# g2 rule selection


def _select_g2(f: Formula) -> Rule:
    cls = f.clauses

    # rule 8: long exactly-1 clauses
    for i, c in enumerate(cls):
        if c.target == 1 and c.size() >= 4:
            x, y = c.sorted_literals()[:2]
            return _branch_pair2("g2.8", x, y)

    c1s = _c1_3lits(f)

    # rule 9: overlapping 3-literal exactly-1 clauses
    for ai in range(len(c1s)):
        for bi in range(ai + 1, len(c1s)):
            i, ci = c1s[ai]
            j, cj = c1s[bi]
            shared = sorted(ci.variables() & cj.variables())
            if not shared:
                continue
            rule = _g2_rule9(i, ci, j, cj, shared)
            if rule is not None:
                return rule

    # rule 10: exactly-2 clause with two doubled literals
    for i, c in enumerate(cls):
        if c.target != 2:
            continue
        twos = sorted((l for l, m in c.occ.items() if m == 2), key=lambda l: (abs(l), l < 0))
        if len(twos) < 2:
            continue
        ones = sorted((l for l, m in c.occ.items() if m == 1), key=lambda l: (abs(l), l < 0))
        if len(twos) == 2 and len(ones) == 1:
            return _simp("g2.10.single0", [("false", ones[0])])
        if len(twos) == 2 and len(ones) == 2:
            return _simp("g2.10.link", [("link", ones[0], ones[1])])
        if len(twos) == 3 and len(ones) == 1:
            return _simp("g2.10.single0", [("false", ones[0])])
        return _branch_pair2("g2.10.branch", twos[0], twos[1])

    # rule 11: exactly-2 clause with one doubled literal
    for i, c in enumerate(cls):
        if c.target != 2:
            continue
        twos = [l for l, m in c.occ.items() if m == 2]
        if len(twos) != 1:
            continue
        x2 = twos[0]
        singles = sorted((l for l, m in c.occ.items() if m == 1), key=lambda l: (abs(l), l < 0))
        sz = c.size()
        if sz == 3:
            return _simp("g2.11.len3", [("true", x2), ("false", singles[0])])
        if sz == 4:
            return _simp("g2.11.len4", [("link", singles[0], singles[1])])
        if sz == 5:
            return _g2_rule11_len5(f, x2, singles, c1s)
        return _branch_lit("g2.11.long", x2)

    # rule 12: exactly-1 clause sharing >= 2 variables with an exactly-2 clause
    for i, ci in c1s:
        for j, cj in enumerate(cls):
            if cj.target != 2:
                continue
            shared = sorted(ci.variables() & cj.variables())
            if len(shared) >= 2:
                return _g2_rule12(i, ci, j, cj, shared)

    # rule 13: 4-literal exactly-2 clause
    for i, c in enumerate(cls):
        if c.target == 2 and c.size() == 4 and len(c.occ) == 4:
            lits = c.sorted_literals()
            c1_vars = set()
            for _, c1 in c1s:
                c1_vars |= c1.variables()
            weighted = [l for l in lits if abs(l) in c1_vars]
            if len(weighted) >= 2:
                x, y = weighted[:2]
                return _branch_pair3("g2.13.two_weighted", x, y)
            order = [l for l in lits if l not in weighted] + weighted
            return _branch_4lit("g2.13.pairs", order)

    # rule 14: exactly-1 clause sharing one variable with an exactly-2 clause
    for i, ci in c1s:
        for j, cj in enumerate(cls):
            if cj.target != 2:
                continue
            shared = sorted(ci.variables() & cj.variables())
            if len(shared) == 1:
                return _branch_lit("g2.14", shared[0])

    # rule 15: overlapping exactly-2 clauses
    for i, ci in enumerate(cls):
        if ci.target != 2:
            continue
        for j in range(i + 1, len(cls)):
            cj = cls[j]
            if cj.target != 2:
                continue
            shared = sorted(ci.variables() & cj.variables())
            if len(shared) >= 2:
                return _g2_rule15(f, i, ci, j, cj, shared)

    # rules 16/17: heavy variables
    heavies = [v for v in range(1, f.num_vars + 1) if degree(f, v) >= 3]
    if heavies:
        rule = _g2_rule16(f, heavies)
        if rule is not None:
            return rule
        return _branch_lit("g2.17", heavies[0])

    return Rule("g2.18", "endgame")


def _g2_rule9(i, ci, j, cj, shared) -> Optional[Rule]:
    li = {v: _lit_of(ci, v) for v in ci.variables()}
    lj = {v: _lit_of(cj, v) for v in cj.variables()}
    if len(shared) == 1:
        return _branch_lit("g2.9.share1", shared[0])
    flips = [v for v in shared if li[v] == -lj[v]]
    sames = [v for v in shared if li[v] == lj[v]]
    if len(shared) == 2:
        r = next(li[v] for v in sorted(ci.variables()) if v not in shared)
        s = next(lj[v] for v in sorted(cj.variables()) if v not in shared)
        if len(flips) == 0:
            return _simp("g2.9.share2.link", [("link", r, s)])
        if len(flips) == 1:
            return _simp("g2.9.share2.force", [("false", li[sames[0]])])
        return _simp(
            "g2.9.share2.flip2",
            [("false", r), ("false", s), ("link", li[flips[0]], -li[flips[1]])],
        )
    # all three variables shared
    if len(flips) == 0:
        return _simp("g2.9.share3.dup", [("remove", j)])
    if len(flips) in (1, 3):
        return _unsat("g2.9.share3.unsat")
    return _simp(
        "g2.9.share3.flip2",
        [("false", li[sames[0]]), ("link", li[flips[0]], -li[flips[1]])],
    )


def _g2_rule11_len5(f, x2, singles, c1s) -> Rule:
    # C = (x2 x2 s1 s2 s3) with target 2; scan 3-literal exactly-1 clauses
    # for the shapes that force something, in priority order.
    sset = set(singles)
    for _, c1 in c1s:
        if c1.occ.get(-x2, 0):
            return _branch_lit("g2.11.len5.negdup", abs(x2))
    views = []
    for idx, c1 in c1s:
        negs = [s for s in singles if c1.occ.get(-s, 0)]
        poss = [s for s in singles if c1.occ.get(s, 0)]
        views.append((idx, c1, negs, poss))
    for idx, c1, negs, poss in views:
        if len(negs) >= 2:
            return _simp("g2.11.len5.negpair", [("false", x2)])
    for idx, c1, negs, poss in views:
        if len(negs) == 1 and len(poss) >= 1:
            ny, pz = negs[0], poss[0]
            rest = dict(c1.occ)
            for l in (-ny, pz):
                rest[l] -= 1
                if rest[l] == 0:
                    del rest[l]
            u = next(iter(rest))
            w = next(s for s in singles if s not in (ny, pz))
            # u == -w cannot happen here: it would be a second negated single
            if u == w:
                return _simp("g2.11.len5.mixed.same", [("link", ny, -x2)])
            return _simp("g2.11.len5.mixed.link", [("link", u, w)])
    for idx, c1, negs, poss in views:
        if len(negs) == 0 and len(poss) >= 2:
            if len(poss) == 3:
                return _unsat("g2.11.len5.sub.unsat")
            w = next(s for s in singles if s not in poss)
            return _simp("g2.11.len5.sub", [("link", w, -x2)])
    for idx, c1, negs, poss in views:
        if c1.occ.get(x2, 0) and len(negs) >= 1:
            return _simp("g2.11.len5.posneg", [("false", x2)])
    for idx, c1, negs, poss in views:
        if c1.occ.get(x2, 0) and len(poss) == 1 and len(negs) == 0:
            rest = dict(c1.occ)
            for l in (x2, poss[0]):
                rest[l] -= 1
                if rest[l] == 0:
                    del rest[l]
            u = next(iter(rest))
            if abs(u) != abs(x2) and abs(u) not in {abs(s) for s in singles}:
                return _branch_lit("g2.11.len5.fresh", u)
    return _branch_lit("g2.11.len5.branch", abs(x2))


def _g2_rule12(i, ci, j, cj, shared) -> Rule:
    li = {v: _lit_of(ci, v) for v in ci.variables()}
    lj = {v: _lit_of(cj, v) for v in cj.variables()}
    flips = [v for v in shared if li[v] == -lj[v]]
    sames = [v for v in shared if li[v] == lj[v]]
    rest = [lj[v] for v in sorted(cj.variables()) if v not in shared]
    if len(shared) == 3:
        k = len(flips)
        if k == 0:
            return _simp("g2.12.share3.sub", [("replace", j, 1, tuple(rest))])
        if k == 1:
            lits = []
            for v in sames:
                lits.extend([li[v], li[v]])
            lits.extend(rest)
            return _simp("g2.12.share3.flip1", [("replace", j, 2, tuple(lits))])
        if k == 2:
            return _simp("g2.12.share3.flip2", [("false", li[sames[0]])])
        assert rest, "flipped subset clause cannot be this short"
        return _simp("g2.12.share3.flip3", [("false", t) for t in rest])
    r = next(li[v] for v in sorted(ci.variables()) if v not in shared)
    k = len(flips)
    if k == 0:
        return _simp("g2.12.share2.flip0", [("replace", j, 2, tuple([-r] + rest))])
    if k == 1:
        s = li[sames[0]]
        return _simp("g2.12.share2.flip1", [("replace", j, 2, tuple([s, s, r] + rest))])
    return _simp("g2.12.share2.flip2", [("replace", j, 1, tuple([r] + rest))])


def _g2_rule15(f, i, ci, j, cj, shared) -> Rule:
    li = {v: _lit_of(ci, v) for v in ci.variables()}
    lj = {v: _lit_of(cj, v) for v in cj.variables()}
    sames = sorted(v for v in shared if li[v] == lj[v])
    flips = sorted(v for v in shared if li[v] == -lj[v])
    a_vars = sorted(ci.variables() - cj.variables())
    b_vars = sorted(cj.variables() - ci.variables())
    a_lits = [li[v] for v in a_vars]
    b_lits = [lj[v] for v in b_vars]
    t_lits = [li[v] for v in sames]

    if ci.key() == cj.key():
        return _simp("g2.15.dup", [("remove", j)])

    # specials: one clause has no private part beyond its flipped literals
    for base_extra, other_extra, flip_side, other_idx in (
        (a_lits, b_lits, li, j),
        (b_lits, a_lits, lj, i),
    ):
        if base_extra:
            continue
        nf = len(flips)
        flip_lits = [flip_side[v] for v in flips]
        if nf == 0:
            return _simp("g2.15.subset", [("false", t) for t in other_extra])
        if nf == 1:
            return _simp("g2.15.flip1", [("true", flip_lits[0])])
        if nf == 2:
            lits = []
            for l in flip_lits:
                lits.extend([-l, -l])
            lits.extend(other_extra)
            return _simp("g2.15.flip2", [("replace", other_idx, 2, tuple(lits))])
        if nf == 3:
            if not other_extra:
                return _unsat("g2.15.flip3.unsat")
            acts = [("false", t) for t in t_lits]
            acts.append(("replace", other_idx, 1, tuple(other_extra)))
            return _simp("g2.15.flip3", acts)
        break

    # one private variable on some side
    if len(a_vars) == 1 or len(b_vars) == 1:
        if len(a_vars) == 1:
            x, other_extra = a_lits[0], b_lits
        else:
            x, other_extra = b_lits[0], a_lits
        nf = len(flips)
        if nf == 0:
            new = Clause(1, [-x] + other_extra)
            if not any(c.key() == new.key() for c in f.clauses):
                return _simp("g2.15.one_extra.add", [("add", 1, tuple([-x] + other_extra))])
        elif nf == 1:
            return _branch("g2.15.one_extra.flip1", [
                [("add", 1, tuple(t_lits))],
                [("false", t) for t in t_lits],
            ])
        elif nf == 2:
            gamma = t_lits + [x]
            return _branch("g2.15.one_extra.flip2", [
                [("add", 1, tuple(gamma))],
                [("false", t) for t in gamma],
            ])
        elif nf == 3:
            return _simp("g2.15.one_extra.flip3", [("false", t) for t in t_lits])
        elif nf == 4:
            acts = [("false", x)]
            acts += [("false", t) for t in t_lits]
            acts += [("false", t) for t in other_extra]
            return _simp("g2.15.one_extra.flip4", acts)

    if len(shared) == 2:
        if len(flips) == 1:
            x = li[sames[0]]
            y = li[flips[0]]
            return _branch("g2.15.share2.mixed", [
                [("true", x), ("true", y)],
                [("true", x), ("false", y)],
                [("false", x)],
            ])
        x = li[shared[0]]
        y = li[shared[1]]
        return _branch_pair3("g2.15.share2", x, y)

    if len(sames) >= 3:
        gamma = t_lits
        rest_i = [li[v] for v in sorted(ci.variables()) if v not in sames]
        rest_j = [lj[v] for v in sorted(cj.variables()) if v not in sames]
        return _branch("g2.15.share3.common", [
            [("false", t) for t in rest_i] + [("false", t) for t in rest_j],
            [("add", 1, tuple(gamma))],
            [("false", t) for t in gamma],
        ])
    if len(sames) >= 2 and len(flips) >= 1:
        x, y = li[sames[0]], li[sames[1]]
        return _branch("g2.15.share3.mixed", [
            [("link", x, -y)],
            [("false", x), ("false", y)],
        ])

    return _branch_lit("g2.15.fallback", shared[0], fallback=True)


def _g2_rule16(f, heavies) -> Optional[Rule]:
    occs = {}
    for v in heavies:
        occs[v] = [(idx, _lit_of(c, v)) for idx, c in enumerate(f.clauses) if v in c.variables()]
    for v in heavies:
        if len(occs[v]) == 3:
            pos = sum(1 for _, l in occs[v] if l > 0)
            if pos in (1, 2):
                return _branch_lit("g2.16.mixed", v)
    for v in heavies:
        if len(occs[v]) == 3:
            pos = sum(1 for _, l in occs[v] if l > 0)
            if pos in (0, 3):
                rests = sorted(f.clauses[idx].size() - 1 for idx, _ in occs[v])
                if rests[0] == 4 or rests[2] >= 6:
                    return _branch_lit("g2.16.samepol", v)
    hs = set(heavies)
    for idx, c in enumerate(f.clauses):
        hv = sorted(c.variables() & hs)
        if len(hv) >= 2:
            x, y = hv[:2]
            return _branch("g2.16.pair", [
                [("true", x), ("true", y)],
                [("true", x), ("false", y)],
                [("false", x), ("true", y)],
                [("false", x), ("false", y)],
            ])
    return None


# ---------------------------------------------------------------------------
# g3 / g4 rule selection


def _first_clause(f, want_target, multi):
    for i, c in enumerate(f.clauses):
        if c.target != want_target:
            continue
        has_multi = max(c.occ.values()) >= 2
        if multi == has_multi:
            return i, c
    return None


def _delta_of(c: Clause, lit: int, copies: int) -> dict:
    delta = dict(c.occ)
    delta[lit] -= copies
    if delta[lit] == 0:
        del delta[lit]
    return delta


def _sorted_lits(occ: dict) -> list:
    return sorted(occ, key=lambda l: (abs(l), l < 0))


def _twice_dispatch_c3(scheme, x2, delta) -> Rule:
    """Exactly-3 clause (x2 x2 delta): forced shapes, else branch x2."""
    lits = _sorted_lits(delta)
    singles = [l for l in lits if delta[l] == 1]
    doubles = [l for l in lits if delta[l] == 2]
    size = sum(delta.values())
    prof = _mult_profile(delta)
    tag = f"{scheme}.9.twice"
    if size == 1:
        return _simp(tag + ".all1", [("true", x2), ("true", singles[0])])
    if prof == (2,):
        return _unsat(tag + ".unsat")
    if prof == (1, 1):
        return _simp(tag + ".pair", [("true", x2), ("link", singles[0], -singles[1])])
    if prof == (2, 1):
        return _simp(tag + ".odd1", [("true", singles[0])])
    if prof == (2, 2):
        return _unsat(tag + ".unsat")
    if prof == (2, 1, 1):
        return _simp(tag + ".linkneg", [("link", x2, -doubles[0])])
    if prof == (2, 2, 1):
        return _simp(tag + ".odd1", [("true", singles[0])])
    if prof == (2, 2, 2):
        return _unsat(tag + ".unsat")
    if prof == (2, 2, 1, 1):
        return _simp(tag + ".linkpair", [("link", singles[0], -singles[1])])
    if prof == (2, 2, 2, 1):
        return _simp(tag + ".odd1", [("true", singles[0])])
    if prof == (2, 2, 2, 2):
        return _unsat(tag + ".unsat")
    if prof in ((1, 1, 1), (1, 1, 1, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)) or len(delta) >= 5:
        return _branch_lit(tag + ".branch", abs(x2))
    return _branch_lit(tag + ".fallback", abs(x2), fallback=True)


def _select_g34(f: Formula, scheme: str) -> Rule:
    # rule 6: any exactly-1 clause
    hit = None
    for i, c in enumerate(f.clauses):
        if c.target == 1:
            hit = (i, c)
            break
    if hit is not None:
        i, c = hit
        x, y = c.sorted_literals()[:2]
        return _branch_pair2(f"{scheme}.6", x, y)

    # rule 7: exactly-2 clause with a doubled literal
    hit = _first_clause(f, 2, multi=True)
    if hit is not None:
        i, c = hit
        x2 = next(l for l in c.sorted_literals() if c.occ[l] == 2)
        delta = _delta_of(c, x2, 2)
        singles = [l for l in _sorted_lits(delta) if delta[l] == 1]
        prof = _mult_profile(delta)
        if scheme == "g3":
            if c.size() == 3:
                return _simp("g3.7.len3", [("true", x2), ("false", singles[0])])
            if prof == (2, 1):
                return _simp("g3.7.odd0", [("false", singles[0])])
            return _branch_lit("g3.7.branch", abs(x2))
        if c.size() == 3:
            return _simp("g4.7.len3", [("true", x2)])
        if prof == (1, 1):
            return _simp("g4.7.pair", [("link", singles[0], singles[1])])
        if prof == (2, 1):
            return _simp("g4.7.odd0", [("false", singles[0])])
        return _branch_lit("g4.7.branch", abs(x2))

    # rule 8: single-occurrence exactly-2 clause
    hit = _first_clause(f, 2, multi=False)
    if hit is not None:
        i, c = hit
        lits = c.sorted_literals()
        if c.size() == 4:
            return _branch_4lit(f"{scheme}.8.len4", lits)
        if c.size() == 5:
            return _branch_lit(f"{scheme}.8.len5", lits[0])
        return _branch_pair3(f"{scheme}.8.long", lits[0], lits[1])

    # rule 9: exactly-3 clause with repeated literal
    hit = _first_clause(f, 3, multi=True)
    if hit is not None:
        i, c = hit
        triples = [l for l in c.sorted_literals() if c.occ[l] == 3]
        if triples:
            x3 = triples[0]
            if c.size() - 3 <= 2:
                return _simp(f"{scheme}.9.thrice.force", [("true", x3)])
            return _branch_lit(f"{scheme}.9.thrice.branch", abs(x3))
        x2 = next(l for l in c.sorted_literals() if c.occ[l] == 2)
        return _twice_dispatch_c3(scheme, x2, _delta_of(c, x2, 2))

    # rule 10: single-occurrence exactly-3 clause
    hit = _first_clause(f, 3, multi=False)
    if hit is not None:
        i, c = hit
        lits = c.sorted_literals()
        assert c.size() >= 6, "short exactly-3 clauses are removed by simplification"
        if c.size() == 6:
            return _branch_lit(f"{scheme}.10.len6", lits[0])
        return _branch_pair3(f"{scheme}.10.long", lits[0], lits[1])

    assert scheme == "g4", "g3 selection exhausted with clauses remaining"

    # rule 11: exactly-4 clause with repeated literal
    hit = _first_clause(f, 4, multi=True)
    if hit is not None:
        i, c = hit
        return _g4_rule11(c)

    # rule 12: single-occurrence exactly-4 clause
    hit = _first_clause(f, 4, multi=False)
    assert hit is not None, "g4 selection exhausted with clauses remaining"
    i, c = hit
    lits = c.sorted_literals()
    assert c.size() >= 8, "short exactly-4 clauses are removed by simplification"
    if c.size() == 8:
        return _branch_lit("g4.12.len8", lits[0])
    return _branch_pair3("g4.12.long", lits[0], lits[1])


def _g4_rule11(c: Clause) -> Rule:
    quads = [l for l in c.sorted_literals() if c.occ[l] == 4]
    if quads:
        return _branch_lit("g4.11.quad", abs(quads[0]))
    triples = [l for l in c.sorted_literals() if c.occ[l] == 3]
    if triples:
        x3 = triples[0]
        delta = _delta_of(c, x3, 3)
        lits = _sorted_lits(delta)
        singles = [l for l in lits if delta[l] == 1]
        doubles = [l for l in lits if delta[l] == 2]
        inner_triples = [l for l in lits if delta[l] == 3]
        prof = _mult_profile(delta)
        size = sum(delta.values())
        if size == 1:
            return _simp("g4.11.thrice.all1", [("true", x3), ("true", singles[0])])
        if prof == (1, 1):
            return _simp("g4.11.thrice.pair", [("true", x3), ("link", singles[0], -singles[1])])
        if prof == (3,):
            return _unsat("g4.11.thrice.unsat")
        if prof == (2, 1):
            return _simp("g4.11.thrice.force", [("true", x3), ("true", singles[0]), ("false", doubles[0])])
        if prof == (1, 1, 1):
            return _simp("g4.11.thrice.x1", [("true", x3)])
        if prof == (3, 1):
            return _simp("g4.11.thrice.linkneg", [("true", singles[0]), ("link", x3, -inner_triples[0])])
        if prof == (2, 2):
            return _simp("g4.11.thrice.x0", [("false", x3), ("true", doubles[0]), ("true", doubles[1])])
        if prof in ((3, 2), (3, 3)):
            return _unsat("g4.11.thrice.unsat")
        if len(delta) >= 3:
            return _branch_lit("g4.11.thrice.branch", abs(x3))
        return _branch_lit("g4.11.thrice.fallback", abs(x3), fallback=True)
    x2 = next(l for l in c.sorted_literals() if c.occ[l] == 2)
    delta = _delta_of(c, x2, 2)
    lits = _sorted_lits(delta)
    singles = [l for l in lits if delta[l] == 1]
    doubles = [l for l in lits if delta[l] == 2]
    prof = _mult_profile(delta)
    if prof == (1, 1):
        return _simp("g4.11.twice.all1", [("true", x2), ("true", singles[0]), ("true", singles[1])])
    if prof == (2, 1):
        return _simp("g4.11.twice.force", [("true", x2), ("true", doubles[0]), ("false", singles[0])])
    if prof == (1, 1, 1):
        return _simp("g4.11.twice.x1", [("true", x2)])
    if prof == (2, 1, 1):
        return _simp("g4.11.twice.linkpair", [("link", singles[0], singles[1])])
    if prof == (2, 2, 1):
        return _simp("g4.11.twice.even0", [("false", singles[0])])
    if prof == (2, 2, 1, 1):
        return _simp("g4.11.twice.linkpair", [("link", singles[0], singles[1])])
    if prof == (2, 2, 2, 1):
        return _simp("g4.11.twice.even0", [("false", singles[0])])
    if prof == (2, 1, 1, 1, 1):
        return _branch_pair3("g4.11.twice.pair3", x2, doubles[0])
    if prof == (2, 2, 1, 1, 1):
        return _branch_pair3("g4.11.twice.pair3", x2, doubles[0])
    if prof == (2, 2, 2, 1, 1):
        return _simp("g4.11.twice.linkpair", [("link", singles[0], singles[1])])
    if prof == (2, 2, 2, 2, 1):
        return _simp("g4.11.twice.even0", [("false", singles[0])])
    if prof in ((1, 1, 1, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)) or len(delta) >= 6:
        return _branch_lit("g4.11.twice.branch", abs(x2))
    return _branch_lit("g4.11.twice.fallback", abs(x2), fallback=True)


# ---------------------------------------------------------------------------
# rule 18: residual formulas without heavy variables


def _low_degree_model(f: Formula) -> Optional[dict]:
    """Satisfying values for all clause variables, or None; degrees <= 2."""
    var2cl: dict[int, list[int]] = {}
    for idx, c in enumerate(f.clauses):
        for v in c.variables():
            var2cl.setdefault(v, []).append(idx)
    adj: dict[int, set[int]] = {i: set() for i in range(len(f.clauses))}
    for v, idxs in var2cl.items():
        if len(idxs) == 2:
            adj[idxs[0]].add(idxs[1])
            adj[idxs[1]].add(idxs[0])
    seen = set()
    model: dict[int, int] = {}
    for start in range(len(f.clauses)):
        if start in seen:
            continue
        order = [start]
        seen.add(start)
        qi = 0
        while qi < len(order):
            for nxt in sorted(adj[order[qi]]):
                if nxt not in seen:
                    seen.add(nxt)
                    order.append(nxt)
            qi += 1
        sub = _solve_component(f, order)
        if sub is None:
            return None
        model.update(sub)
    return model


def _solve_component(f: Formula, order: list[int]) -> Optional[dict]:
    clauses = [f.clauses[i] for i in order]
    n = len(clauses)
    varsets = [c.variables() for c in clauses]
    future = [set() for _ in range(n + 1)]
    for i in range(n - 1, -1, -1):
        future[i] = future[i + 1] | varsets[i]
    frontiers = []
    prefix: set[int] = set()
    for i in range(n):
        frontiers.append(tuple(sorted(prefix & future[i])))
        prefix |= varsets[i]
    memo: dict = {}

    def rec(i: int, assignment: dict) -> Optional[dict]:
        if i == n:
            return {}
        key = (i, tuple(assignment[v] for v in frontiers[i]))
        if key in memo:
            cached = memo[key]
            return None if cached is None else dict(cached)
        c = clauses[i]
        fixed = 0
        for lit, m in c.occ.items():
            v = abs(lit)
            if v in assignment:
                truth = assignment[v] if lit > 0 else 1 - assignment[v]
                fixed += m * truth
        unfixed = sorted(v for v in varsets[i] if v not in assignment)
        found = None
        for combo in product((0, 1), repeat=len(unfixed)):
            ext = dict(zip(unfixed, combo))
            cnt = fixed
            for lit, m in c.occ.items():
                v = abs(lit)
                if v in ext:
                    truth = ext[v] if lit > 0 else 1 - ext[v]
                    cnt += m * truth
            if cnt != c.target:
                continue
            sub = rec(i + 1, {**assignment, **ext})
            if sub is not None:
                found = {**ext, **sub}
                break
        memo[key] = None if found is None else dict(found)
        return found

    return rec(0, {})


def endgame_low_degree(formula: Formula) -> SolveResult:
    """Decide a formula in which every variable has degree at most 2."""
    for v in range(1, formula.num_vars + 1):
        if degree(formula, v) >= 3:
            raise ValueError(f"variable {v} is heavy; endgame needs degrees <= 2")
    part = _low_degree_model(formula)
    if part is None:
        return SolveResult(False, None)
    model = {v: part.get(v, 0) for v in range(1, formula.num_vars + 1)}
    if not evaluate(formula, model):
        raise RuntimeError("internal error: endgame produced a bad model")
    return SolveResult(True, model)


# ---------------------------------------------------------------------------
# search engine


def _select(f: Formula, scheme: str) -> Rule:
    if scheme == "g2":
        return _select_g2(f)
    return _select_g34(f, scheme)


def _search(f, trail, stats, scheme, depth, instrument, parent_mu, parent_tag):
    out = simplify_to_fixpoint(f, trail)
    if out is None:
        return None
    f, trail = out
    stats.nodes_expanded += 1
    stats.max_depth = max(stats.max_depth, depth)
    if instrument and parent_mu is not None:
        mu = measure(f, scheme)
        stats.measure_checks += 1
        if not mu < parent_mu - 1e-9:
            stats.measure_violations.append((parent_tag, parent_mu, mu))
    # every simplification chain eliminates a variable within a few steps;
    # a generous cap turns any selection bug into a loud failure, not a hang
    guard = 50 * (f.num_vars + len(f.clauses) + f.total_occurrences()) + 100
    steps = 0
    while True:
        if not f.clauses:
            return f, trail
        steps += 1
        if steps > guard:
            raise RuntimeError("rule selection stopped making progress")
        rule = _select(f, scheme)
        stats.fire(rule.tag)
        if rule.fallback:
            stats.fallback(rule.tag)
        if rule.kind == "unsat":
            return None
        if rule.kind == "endgame":
            part = _low_degree_model(f)
            if part is None:
                return None
            for v in sorted(part):
                f = assign(f, trail, v, part[v])
                assert f is not None, "endgame model conflicts with formula"
            out = simplify_to_fixpoint(f, trail)
            assert out is not None
            f, trail = out
            continue
        if rule.kind == "simp":
            f2 = _apply_actions(f, trail, rule.actions)
            if f2 is None:
                return None
            out = simplify_to_fixpoint(f2, trail)
            if out is None:
                return None
            f, trail = out
            continue
        # branching rule
        mu_here = measure(f, scheme) if instrument else None
        for branch in rule.branches:
            f2 = f.copy()
            t2 = trail.copy()
            f3 = _apply_actions(f2, t2, branch)
            if f3 is None:
                continue
            res = _search(f3, t2, stats, scheme, depth + 1, instrument, mu_here, rule.tag)
            if res is not None:
                return res
        return None


def _solve(formula: Formula, scheme: str, instrument: bool) -> SolveResult:
    stats = SearchStats(measure_at_root=measure(formula, scheme))
    trail = Trail(formula.num_vars)
    res = _search(formula, trail, stats, scheme, 0, instrument, None, None)
    if res is None:
        return SolveResult(False, None, stats)
    _, t_end = res
    roots = {v: 0 for v in t_end.unassigned_vars()}
    model = reconstruct_model(t_end, roots)
    if not evaluate(formula, model):
        raise RuntimeError("internal error: solver witness failed verification")
    return SolveResult(True, model, stats)


def _check_targets(formula: Formula, cap: int, name: str) -> None:
    for c in formula.clauses:
        if c.target > cap:
            raise ValueError(f"{name} handles targets up to {cap}, got {c.target}")


def solve_g2(formula: Formula, instrument: bool = False) -> SolveResult:
    """Decide a formula whose clause targets are all at most 2."""
    _check_targets(formula, 2, "solve_g2")
    return _solve(formula, "g2", instrument)


def solve_g3(formula: Formula, instrument: bool = False) -> SolveResult:
    """Decide a formula whose clause targets are all at most 3."""
    _check_targets(formula, 3, "solve_g3")
    return _solve(formula, "g3", instrument)


def solve_g4(formula: Formula, instrument: bool = False) -> SolveResult:
    """Decide a formula whose clause targets are all at most 4."""
    _check_targets(formula, 4, "solve_g4")
    return _solve(formula, "g4", instrument)


def solve_auto(formula: Formula, instrument: bool = False) -> SolveResult:
    """Dispatch on the largest clause target (targets <= 1 run as g2)."""
    top = max((c.target for c in formula.clauses), default=0)
    if top <= 2:
        return solve_g2(formula, instrument)
    if top == 3:
        return solve_g3(formula, instrument)
    if top == 4:
        return solve_g4(formula, instrument)
    raise ValueError(f"no solver for target {top}")
