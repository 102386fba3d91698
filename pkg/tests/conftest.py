import random

import pytest
from hypothesis import strategies as st

from gixsat.formula import Clause, Formula


def C(target, *lits):
    return Clause(target, lits)


def F(n, *clauses):
    return Formula(n, clauses)


def random_formula(rng, n_max=8, m_max=5, k_max=6, t_max=4, distinct_bias=0.6):
    n = rng.randint(1, n_max)
    m = rng.randint(1, m_max)
    clauses = []
    for _ in range(m):
        k = rng.randint(1, k_max)
        if rng.random() < distinct_bias and k <= n:
            variables = rng.sample(range(1, n + 1), k)
            lits = [v if rng.random() < 0.7 else -v for v in variables]
        else:
            lits = [rng.choice([1, -1]) * rng.randint(1, n) for _ in range(k)]
        clauses.append(Clause(rng.randint(0, t_max), lits))
    return Formula(n, clauses)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


@st.composite
def formulas(draw, n_max=6, m_max=4, k_max=5, t_max=4):
    n = draw(st.integers(1, n_max))
    m = draw(st.integers(1, m_max))
    clauses = []
    for _ in range(m):
        k = draw(st.integers(1, k_max))
        lits = draw(
            st.lists(
                st.integers(1, n).flatmap(lambda v: st.sampled_from([v, -v])),
                min_size=k,
                max_size=k,
            )
        )
        target = draw(st.integers(0, t_max))
        clauses.append(Clause(target, lits))
    return Formula(n, clauses)
