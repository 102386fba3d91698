"""Core object behaviour: substitution, evaluation, model reconstruction."""

import random

import pytest
from hypothesis import given, settings

from conftest import C, F, formulas, random_formula
from gixsat.formula import (
    Clause,
    Formula,
    Trail,
    assign,
    degree,
    evaluate,
    is_heavy,
    link,
    negate,
    reconstruct_model,
)
from gixsat.oracle import brute_solve


def test_negate_involution():
    for lit in (1, -1, 7, -42):
        assert negate(negate(lit)) == lit


def test_assign_decrements_target_exactly_once():
    f = F(3, C(1, 1, 2, 3))
    t = Trail(3)
    g = assign(f, t, 1, 1)
    assert g.clauses == [C(0, 2, 3)]


def test_assign_repeated_literal_counts_multiplicity():
    f = F(3, C(2, 1, 1, 2, 3))
    t = Trail(3)
    g = assign(f, t, 1, 1)
    assert g.clauses == [C(0, 2, 3)]


def test_assign_oversatisfaction_conflicts():
    f = F(1, C(1, 1, 1))
    t = Trail(1)
    assert assign(f, t, 1, 1) is None
    assert t.is_unassigned(1)


def test_assign_requires_unassigned():
    f = F(2, C(1, 1, 2))
    t = Trail(2)
    assign(f, t, 1, 0)
    with pytest.raises(ValueError):
        assign(f, t, 1, 1)


def test_link_cancels_created_pair():
    # (x y w v) with target 2: substituting y := -x cancels against x
    f = F(4, C(2, 1, 2, 3, 4))
    t = Trail(4)
    g = link(f, t, 2, -1)
    assert g.clauses == [C(1, 3, 4)]
    # satisfiability agrees with the oracle on consistent extensions
    orig_count = sum(
        1
        for bits in range(16)
        if evaluate(f, {v: (bits >> (v - 1)) & 1 for v in range(1, 5)})
        and ((bits >> 0) & 1) == 1 - ((bits >> 1) & 1)
    )
    new_count = brute_solve(g).model_count
    assert new_count == 2 * orig_count


def test_link_rejects_self():
    f = F(2, C(1, 1, 2))
    with pytest.raises(ValueError):
        link(f, Trail(2), 1, -1)


def test_link_dissolves_two_literal_clause():
    f = F(3, C(1, 2, 3))
    t = Trail(3)
    g = link(f, t, 2, -3)
    assert g.clauses[0].target == 0 and g.clauses[0].size() == 0


@pytest.mark.parametrize(
    "clause,model,expected",
    [
        (C(2, 1, -1, 2), {1: 0, 2: 1}, True),
        (C(2, 1, -1), {1: 0}, False),
        (C(2, 1, -1), {1: 1}, False),
        (C(1, 1, 1, 2), {1: 0, 2: 1}, True),
        (C(1, 1, 1, 2), {1: 1, 2: 0}, False),
    ],
)
def test_evaluate_counts_with_multiplicity(clause, model, expected):
    assert evaluate(Formula(max(model), [clause]), model) is expected


def test_reconstruct_links_chain():
    t = Trail(3)
    t.record_link(2, -3)
    model = reconstruct_model(t, {1: 1, 3: 0})
    assert model == {1: 1, 2: 1, 3: 0}


def test_reconstruct_identity_on_empty_trail():
    t = Trail(2)
    assert reconstruct_model(t, {1: 0, 2: 1}) == {1: 0, 2: 1}


def test_reconstruct_requires_root_values():
    t = Trail(2)
    t.record_link(1, 2)
    with pytest.raises(ValueError):
        reconstruct_model(t, {})


def test_degree_counts_multiplicity():
    f = F(3, C(2, 1, 1, 2), C(1, -1, 3))
    assert degree(f, 1) == 3
    assert is_heavy(f, 1)
    assert degree(f, 2) == 1
    assert degree(f, 3) == 1
    assert not is_heavy(f, 3)


def test_degree_absent_variable():
    f = F(3, C(1, 1, 2))
    assert degree(f, 3) == 0


def test_heavy_three_single_occurrences():
    f = F(5, C(1, 1, 2), C(1, 1, 3), C(2, 1, 4, 5))
    assert degree(f, 1) == 3 and is_heavy(f, 1)


@given(formulas(n_max=5, m_max=3, k_max=4))
@settings(max_examples=120, deadline=None)
def test_evaluate_matches_direct_truth_table(f):
    # evaluate() against an independently written per-clause counter
    n = f.num_vars
    for bits in range(1 << n):
        model = {v: (bits >> (v - 1)) & 1 for v in range(1, n + 1)}
        expected = True
        for c in f.clauses:
            count = 0
            for lit in c.expanded():
                value = model[abs(lit)] if lit > 0 else 1 - model[abs(lit)]
                count += value
            if count != c.target:
                expected = False
                break
        assert evaluate(f, model) is expected


def test_forced_assign_preserves_counts(rng):
    # assigning a value leaves exactly the models extending that value,
    # with the eliminated variable free afterwards
    for _ in range(150):
        f = random_formula(rng, n_max=6, m_max=4)
        n = f.num_vars
        var = rng.randint(1, n)
        value = rng.randint(0, 1)
        t = Trail(n)
        g = assign(f, t, var, value)
        restricted = 0
        for bits in range(1 << n):
            model = {v: (bits >> (v - 1)) & 1 for v in range(1, n + 1)}
            if model[var] == value and evaluate(f, model):
                restricted += 1
        if g is None:
            assert restricted == 0
        else:
            assert brute_solve(g).model_count == 2 * restricted


def test_forced_link_preserves_counts(rng):
    for _ in range(150):
        f = random_formula(rng, n_max=6, m_max=4)
        n = f.num_vars
        if n < 2:
            continue
        var = rng.randint(1, n)
        other = rng.choice([v for v in range(1, n + 1) if v != var])
        partner = other if rng.random() < 0.5 else -other
        t = Trail(n)
        g = link(f, t, var, partner)
        restricted = 0
        for bits in range(1 << n):
            model = {v: (bits >> (v - 1)) & 1 for v in range(1, n + 1)}
            partner_value = model[other] if partner > 0 else 1 - model[other]
            if model[var] == partner_value and evaluate(f, model):
                restricted += 1
        if g is None:
            assert restricted == 0
        else:
            assert brute_solve(g).model_count == 2 * restricted


def test_trail_stays_acyclic_under_fuzzed_operations(rng):
    # arbitrary assign/link sequences: chains always end at a constant or an
    # unassigned root, so reconstruction terminates with a total model
    for _ in range(150):
        f = random_formula(rng, n_max=7, m_max=4)
        t = Trail(f.num_vars)
        for _ in range(rng.randint(1, 10)):
            free = t.unassigned_vars()
            if not free:
                break
            var = rng.choice(free)
            if rng.random() < 0.5 or len(free) == 1:
                g = assign(f, t, var, rng.randint(0, 1))
            else:
                other = rng.choice([v for v in free if v != var])
                g = link(f, t, var, other if rng.random() < 0.5 else -other)
            if g is None:
                break
            f = g
        roots = {v: rng.randint(0, 1) for v in t.unassigned_vars()}
        model = reconstruct_model(t, roots)
        assert set(model) == set(range(1, f.num_vars + 1))
        for var, st in t.entries.items():
            if st[0] == "link":
                partner = st[1]
                expected = model[abs(partner)] if partner > 0 else 1 - model[abs(partner)]
                assert model[var] == expected


def test_reconstruct_after_resolution(rng):
    # resolution records must recover the eliminated variable on random instances
    from gixsat.simplify import resolve

    for _ in range(200):
        n = 6
        clauses = [
            Clause(1, [1] + [rng.choice([1, -1]) * v for v in rng.sample(range(2, n + 1), 2)]),
            Clause(1, [-1] + [rng.choice([1, -1]) * v for v in rng.sample(range(2, n + 1), 2)]),
        ]
        for _ in range(rng.randint(0, 2)):
            k = rng.randint(2, 4)
            clauses.append(
                Clause(
                    rng.randint(1, 2),
                    [rng.choice([1, -1]) * rng.randint(1, n) for _ in range(k)],
                )
            )
        f = Formula(n, clauses)
        t = Trail(n)
        g = resolve(f, t, 1)
        report = brute_solve(g)
        assert report.sat == brute_solve(f).sat
        if report.sat:
            roots = dict(report.first_model)
            roots.pop(1, None)
            model = reconstruct_model(t, roots)
            assert evaluate(f, model)
