"""Shared fixtures and brute-force oracles.

The oracles here follow the textbook definitions directly and share no
code paths with the library beyond the plain data types.
"""

import itertools
import random

import pytest
from hypothesis import strategies as st

from neuralcode import Code, Cover, SimplicialComplex


def all_masks(n):
    return range(1 << n)


def is_subset(a, b):
    return a & ~b == 0


def oracle_completion(code):
    return {v for v in all_masks(code.n) if any(is_subset(v, w) for w in code.words)}


def oracle_vanishes(sigma, tau, code):
    return all(not (is_subset(sigma, w) and tau & w == 0) for w in code.words)


def oracle_pseudo_monomials(n):
    out = []
    for digits in itertools.product("01*", repeat=n):
        sigma = sum(1 << i for i, d in enumerate(digits) if d == "1")
        tau = sum(1 << i for i, d in enumerate(digits) if d == "0")
        out.append((sigma, tau))
    return out


def oracle_canonical_form(code):
    """Enumerate every pseudo-monomial and keep the divisibility-minimal vanishing ones."""
    vanishing = [z for z in oracle_pseudo_monomials(code.n) if oracle_vanishes(*z, code)]
    minimal = []
    for s, t in vanishing:
        if not any((s2, t2) != (s, t) and is_subset(s2, s) and is_subset(t2, t) for s2, t2 in vanishing):
            minimal.append((s, t))
    return set(minimal)


def oracle_code_of_cover(cover):
    """Membership test straight from the defining formula, word by word."""
    n = cover.n
    everything = set(range(1, cover.ground_size + 1))
    out = set()
    for w in all_masks(n):
        inside = set(everything)
        outside = set()
        for i, u in enumerate(cover.sets):
            if w >> i & 1:
                inside &= u
            else:
                outside |= u
        if inside - outside:
            out.add(w)
    return out


def oracle_nerve_faces(cover):
    n = cover.n
    faces = set()
    for sigma in all_masks(n):
        common = set(range(1, cover.ground_size + 1))
        for i, u in enumerate(cover.sets):
            if sigma >> i & 1:
                common &= u
        if sigma == 0 or common:
            faces.add(sigma)
    return faces


def random_cover(rng, max_points=12, max_sets=6, density=None):
    m = rng.randint(1, max_points)
    n = rng.randint(1, max_sets)
    sets = []
    for _ in range(n):
        p = density if density is not None else rng.random()
        sets.append(frozenset(x for x in range(1, m + 1) if rng.random() < p))
    return Cover(m, tuple(sets))


def random_complex(rng, max_n=7, max_facets=6):
    n = rng.randint(1, max_n)
    facets = []
    for _ in range(rng.randint(1, max_facets)):
        facets.append(rng.getrandbits(n) or 1 << rng.randrange(n))
    return SimplicialComplex(n, tuple(facets))


@st.composite
def codes(draw, max_n=5, min_size=0):
    n = draw(st.integers(1, max_n))
    words = draw(st.frozensets(st.integers(0, (1 << n) - 1), min_size=min_size))
    return Code(n, words)


@st.composite
def covers(draw, max_points=12, max_sets=6):
    m = draw(st.integers(1, max_points))
    n = draw(st.integers(1, max_sets))
    sets = draw(st.lists(st.frozensets(st.integers(1, m)), min_size=n, max_size=n))
    return Cover(m, tuple(sets))


@st.composite
def complexes(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    facets = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=1, max_size=6))
    return SimplicialComplex(n, tuple(facets))


@pytest.fixture
def rng():
    return random.Random(20141016)


@pytest.fixture
def hollow_triangle():
    return SimplicialComplex.from_faces(3, [(1, 2), (1, 3), (2, 3)])


@pytest.fixture
def tetra_boundary():
    return SimplicialComplex.from_faces(4, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])


@pytest.fixture
def circle_cover():
    from neuralcode import circle_arc_cover

    return circle_arc_cover(360, [(0, 200), (120, 200), (240, 200)])


@pytest.fixture
def interval_cover():
    from neuralcode import grid_box_cover

    return grid_box_cover(1, [(0, 2), (1, 3)], (0, 3))
