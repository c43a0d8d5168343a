"""Shared corpora and hypothesis strategies for the test suite."""

import itertools
import random

from hypothesis import strategies as st

from searchorder import Graph, Profile

NAMES = "abcdefgh"


def all_connected_graphs(max_n, min_n=1):
    """Every labeled connected graph on a prefix of NAMES, small n only."""
    for n in range(min_n, max_n + 1):
        names = NAMES[:n]
        pairs = list(itertools.combinations(names, 2))
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            g = Graph.build(names, edges)
            if g.is_connected():
                yield g


def k4():
    return Graph.build("abcd", itertools.combinations("abcd", 2))


def petersen():
    names = [f"p{i}" for i in range(5)] + [f"q{i}" for i in range(5)]
    edges = [(f"p{i}", f"p{(i + 1) % 5}") for i in range(5)]
    edges += [(f"p{i}", f"q{i}") for i in range(5)]
    edges += [("q0", "q2"), ("q2", "q4"), ("q4", "q1"), ("q1", "q3"), ("q3", "q0")]
    return Graph.build(names, edges)


@st.composite
def graphs(draw, min_n=1, max_n=6, connected=True):
    n = draw(st.integers(min_n, max_n))
    names = NAMES[:n]
    pairs = list(itertools.combinations(names, 2))
    edges = draw(st.frozensets(st.sampled_from(pairs))) if pairs else frozenset()
    g = Graph.build(names, edges)
    if connected and n > 1:
        # a random spanning path keeps the draw connected without biasing
        # the rest of the edge set
        spine = draw(st.permutations(list(names)))
        g = g.with_edges(zip(spine, spine[1:]))
    return g


@st.composite
def profiles(draw, min_n=3, max_n=6, max_rows=3):
    n = draw(st.integers(min_n, max_n))
    names = list(NAMES[:n])
    rows = draw(
        st.lists(st.permutations(names), min_size=1, max_size=max_rows, unique_by=tuple)
    )
    return Profile.build(names, [tuple(r) for r in rows])


def random_profiles(seed, count, sizes=(5, 6), rows=(2, 3, 4)):
    """Deterministic profile corpus: distinct uniform permutations."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.choice(sizes)
        names = NAMES[:n]
        want = rng.choice(rows)
        seen = set()
        while len(seen) < want:
            seen.add(tuple(rng.sample(names, n)))
        out.append(Profile.build(names, sorted(seen)))
    return out
