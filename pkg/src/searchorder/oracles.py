"""Exact brute-force solvers, used as ground truth at small scale.

Labeled trees are enumerated via Prüfer sequences (n^(n-2) of them, in
lexicographic sequence order), candidate graphs for the bounded
problems via edge subsets of increasing size. Candidate verification
always goes through the step-by-step simulation checker, never the
four-point shortcuts, so the oracles share no nontrivial code path
with the polynomial recognizers they are meant to check.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Union

from .core import CapError, Graph, Profile, Tree
from .traversals import LabelState, Paradigm

TREE_ENUMERATION_CAP = 8
EDGE_SEARCH_CAP = 5
DEG_SEARCH_CAP = 6


@dataclass(frozen=True)
class EdgeBounded:
    k: int


@dataclass(frozen=True)
class DegBounded:
    k: int


@dataclass(frozen=True)
class TreeSupport:
    pass


ProblemKind = Union[EdgeBounded, DegBounded, TreeSupport]


@dataclass(frozen=True)
class OracleResult:
    is_yes: bool
    witness: Graph | None = None


def _prufer_edges(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return edges


def enumerate_tree_edge_sets(n: int) -> Iterator[list[tuple[int, int]]]:
    """Edge lists of all labeled trees on n vertices, in Prüfer
    lexicographic order."""
    if n <= 0:
        raise ValueError("need at least one vertex")
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return
    for seq in product(range(n), repeat=n - 2):
        yield _prufer_edges(seq, n)


def enumerate_labeled_trees(names: tuple[str, ...] | list[str]) -> Iterator[Tree]:
    from .core import universe_of

    uni = universe_of(names)
    for edges in enumerate_tree_edge_sets(uni.n):
        yield Tree(uni, frozenset(edges))


def _adj_from_edges(n: int, edges) -> list[frozenset[int]]:
    sets: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        sets[u].add(v)
        sets[v].add(u)
    return [frozenset(s) for s in sets]


def _connected(adj: list[frozenset[int]]) -> bool:
    n = len(adj)
    if n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _supports_all(
    adj: list[frozenset[int]], seqs: list[tuple[int, ...]], paradigm: Paradigm
) -> bool:
    for seq in seqs:
        state = LabelState(adj, paradigm)
        for v in seq:
            if not state.is_candidate(v):
                break
            state.advance(v)
        else:
            continue
        return False
    return True


def brute_force_tree_support(
    profile: Profile, paradigm: Paradigm, cap: int = TREE_ENUMERATION_CAP
) -> OracleResult:
    """First tree (in Prüfer order) admitting every profile ordering,
    or NO after exhausting all n^(n-2) of them."""
    n = profile.universe.n
    if n > cap:
        raise CapError(f"tree enumeration needs n <= {cap}, got n = {n}")
    seqs = [o.seq for o in profile.orderings]
    for edges in enumerate_tree_edge_sets(n):
        if _supports_all(_adj_from_edges(n, edges), seqs, paradigm):
            return OracleResult(True, Tree(profile.universe, frozenset(edges)))
    return OracleResult(False)


def all_tree_supports(
    profile: Profile, paradigm: Paradigm, cap: int = TREE_ENUMERATION_CAP
) -> tuple[Tree, ...]:
    """Every tree admitting the whole profile, in Prüfer order."""
    n = profile.universe.n
    if n > cap:
        raise CapError(f"tree enumeration needs n <= {cap}, got n = {n}")
    seqs = [o.seq for o in profile.orderings]
    return tuple(
        Tree(profile.universe, frozenset(edges))
        for edges in enumerate_tree_edge_sets(n)
        if _supports_all(_adj_from_edges(n, edges), seqs, paradigm)
    )


def brute_force_graph_support(
    profile: Profile, paradigm: Paradigm, kind: ProblemKind
) -> OracleResult:
    """Exact solver for the bounded-support decision problems.

    EdgeBounded returns the witness with the fewest edges
    (lexicographically least among those); DegBounded returns the first
    witness in the same subset order whose degrees respect the bound.

    Only connected candidates count: a traversal visits every vertex,
    so a disconnected graph never replays a full ordering without an
    arbitrary restart, and allowing restarts would make the empty graph
    a support of anything.
    """
    if isinstance(kind, TreeSupport):
        return brute_force_tree_support(profile, paradigm)
    n = profile.universe.n
    limit = EDGE_SEARCH_CAP if isinstance(kind, EdgeBounded) else DEG_SEARCH_CAP
    if n > limit:
        raise CapError(f"graph search needs n <= {limit}, got n = {n}")
    if kind.k < 0:
        raise ValueError("bound must be non-negative")
    seqs = [o.seq for o in profile.orderings]
    all_edges = list(combinations(range(n), 2))
    max_size = len(all_edges) if isinstance(kind, DegBounded) else min(kind.k, len(all_edges))
    for size in range(max(0, n - 1), max_size + 1):
        for subset in combinations(all_edges, size):
            if isinstance(kind, DegBounded):
                degree = [0] * n
                ok = True
                for u, v in subset:
                    degree[u] += 1
                    degree[v] += 1
                    if degree[u] > kind.k or degree[v] > kind.k:
                        ok = False
                        break
                if not ok:
                    continue
            adj = _adj_from_edges(n, subset)
            if not _connected(adj):
                continue
            if _supports_all(adj, seqs, paradigm):
                return OracleResult(True, Graph(profile.universe, frozenset(subset)))
    return OracleResult(False)


def min_vertex_cover(graph: Graph, cap: int = 20) -> tuple[str, ...]:
    """Lexicographically least minimum vertex cover, by index order."""
    n = graph.n
    if n > cap:
        raise CapError(f"vertex cover search needs n <= {cap}, got n = {n}")
    edges = sorted(graph.edges)
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            chosen = set(subset)
            if all(u in chosen or v in chosen for u, v in edges):
                return tuple(graph.universe.name(i) for i in subset)
    raise AssertionError("unreachable: V itself is always a cover")
