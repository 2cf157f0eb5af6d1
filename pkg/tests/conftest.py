import random

import hypothesis.strategies as st
import pytest

from squeeze import MonomialIdeal, Monomial, ShiftSequence, from_facets, validate_shifted_order_ideal
from squeeze.monomial import monomials_of_degree

U5_TEXT = ("1", "x1", "x2", "x3", "x1*x3", "x2*x3", "x3^2")
OCTAHEDRON = [[a, b, c] for a in (1, 2) for b in (3, 4) for c in (5, 6)]


def borel_closure(seeds, n):
    """Strongly stable ideal generated by ``seeds`` (brute force over each degree)."""
    keep = set()
    todo = list(seeds)
    while todo:
        u = todo.pop()
        if u in keep:
            continue
        keep.add(u)
        for j, e in enumerate(u.exps, start=1):
            if e:
                for i in range(1, j):
                    todo.append(u / Monomial({j: 1}) * Monomial({i: 1}))
    return MonomialIdeal(keep, n)


def random_strongly_stable(rng, n=3, maxdeg=3, k=None):
    k = k or rng.randint(1, 3)
    pool = [u for d in range(1, maxdeg + 1) for u in monomials_of_degree(n, d)]
    return borel_closure(rng.sample(pool, k), n)


def random_shift(rng, length=4, max_step=2):
    vals = [0]
    for _ in range(length - 1):
        vals.append(vals[-1] + rng.randint(0, max_step))
    return ShiftSequence(tuple(vals), rng.choice([None, rng.randint(0, max_step)]))


@st.composite
def strongly_stable_ideals(draw, n=3, maxdeg=3):
    pool = [u for d in range(1, maxdeg + 1) for u in monomials_of_degree(n, d)]
    seeds = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=3, unique=True))
    return borel_closure(seeds, n)


@st.composite
def shift_sequences(draw, length=4):
    steps = draw(st.lists(st.integers(0, 3), min_size=length - 1, max_size=length - 1))
    vals = [0]
    for s in steps:
        vals.append(vals[-1] + s)
    tail = draw(st.one_of(st.none(), st.integers(0, 3)))
    return ShiftSequence(tuple(vals), tail)


@pytest.fixture
def U5():
    return validate_shifted_order_ideal(3, U5_TEXT)


@pytest.fixture
def octahedron():
    return from_facets(6, OCTAHEDRON)


@pytest.fixture
def rng():
    return random.Random(20240601)
