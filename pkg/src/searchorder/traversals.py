"""Execution and enumeration of graph-search paradigms.

Seven paradigms are supported: generic search (GS), BFS, DFS, their
lexicographic variants, maximum cardinality search (MCS) and maximal
neighborhood search (MNS). A run repeatedly visits an eligible vertex
and updates labels of unvisited neighbors; which labels and which
selection rule apply depends on the paradigm:

    BFS     integer labels, label(u) <- max(label(u), n - i); largest wins
    DFS     integer labels, label(u) <- i; largest wins
    LexBFS  sequence labels, append n - i; lexicographically largest wins
    LexDFS  sequence labels, prepend i; lexicographically largest wins
    MCS     integer labels, label(u) <- label(u) + 1; largest wins
    MNS     set labels, label(u) <- label(u) ∪ {i}; inclusion-maximal wins
    GS      next vertex must have a visited neighbor; if no unvisited
            vertex has one (e.g. the empty prefix), all are eligible

Here i is the 1-based step at which the neighbor's owner was visited.
The searches are nondeterministic; `enumerate_orderings` branches over
every eligible vertex, while `generate_ordering` breaks ties by lowest
universe index.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Sequence

from .core import CapError, Graph, Ordering, universe_of

DEFAULT_ENUMERATION_CAP = 8


class Paradigm(Enum):
    GS = "gs"
    BFS = "bfs"
    DFS = "dfs"
    LEXBFS = "lexbfs"
    LEXDFS = "lexdfs"
    MCS = "mcs"
    MNS = "mns"

    @classmethod
    def from_name(cls, name: str) -> "Paradigm":
        key = name.strip().lower().replace("-", "").replace("_", "")
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(f"unknown paradigm {name!r}")

    def __str__(self) -> str:
        return self.value


_INT_LABELLED = (Paradigm.BFS, Paradigm.DFS, Paradigm.MCS)
_SEQ_LABELLED = (Paradigm.LEXBFS, Paradigm.LEXDFS)


class LabelState:
    """Mutable per-run label store; labels of visited vertices are never read."""

    __slots__ = ("paradigm", "n", "adj", "labels", "visited", "step")

    def __init__(self, adj: Sequence[frozenset[int]], paradigm: Paradigm):
        self.paradigm = paradigm
        self.n = len(adj)
        self.adj = adj
        self.visited: set[int] = set()
        self.step = 0
        if paradigm in _INT_LABELLED:
            self.labels: list = [0] * self.n
        elif paradigm in _SEQ_LABELLED:
            self.labels = [()] * self.n
        elif paradigm is Paradigm.MNS:
            self.labels = [frozenset()] * self.n
        else:  # GS carries no labels; track who has a visited neighbor
            self.labels = [False] * self.n

    def copy(self) -> "LabelState":
        dup = object.__new__(LabelState)
        dup.paradigm = self.paradigm
        dup.n = self.n
        dup.adj = self.adj
        dup.labels = list(self.labels)
        dup.visited = set(self.visited)
        dup.step = self.step
        return dup

    def advance(self, v: int) -> None:
        """Visit v (must be unvisited) and update unvisited neighbor labels."""
        if v in self.visited:
            raise ValueError(f"vertex index {v} already visited")
        self.visited.add(v)
        self.step += 1
        i = self.step
        paradigm = self.paradigm
        labels = self.labels
        for u in self.adj[v]:
            if u in self.visited:
                continue
            if paradigm is Paradigm.BFS:
                labels[u] = max(labels[u], self.n - i)
            elif paradigm is Paradigm.DFS:
                labels[u] = i
            elif paradigm is Paradigm.LEXBFS:
                labels[u] = labels[u] + (self.n - i,)
            elif paradigm is Paradigm.LEXDFS:
                labels[u] = (i,) + labels[u]
            elif paradigm is Paradigm.MCS:
                labels[u] = labels[u] + 1
            elif paradigm is Paradigm.MNS:
                labels[u] = labels[u] | {i}
            else:
                labels[u] = True

    def _unvisited(self) -> list[int]:
        return [u for u in range(self.n) if u not in self.visited]

    def candidates(self) -> list[int]:
        """All vertices a valid run could visit next, ascending by index."""
        unvisited = self._unvisited()
        if not unvisited:
            return []
        paradigm = self.paradigm
        labels = self.labels
        if paradigm is Paradigm.GS:
            eligible = [u for u in unvisited if labels[u]]
            return eligible or unvisited
        if paradigm is Paradigm.MNS:
            return [
                u
                for u in unvisited
                if not any(labels[u] < labels[w] for w in unvisited)
            ]
        best = max(labels[u] for u in unvisited)
        return [u for u in unvisited if labels[u] == best]

    def is_candidate(self, v: int) -> bool:
        if v in self.visited:
            return False
        paradigm = self.paradigm
        labels = self.labels
        if paradigm is Paradigm.GS:
            return bool(labels[v]) or not any(
                labels[u] for u in range(self.n) if u not in self.visited
            )
        if paradigm is Paradigm.MNS:
            lv = labels[v]
            return not any(
                lv < labels[u] for u in range(self.n) if u not in self.visited
            )
        lv = labels[v]
        return all(labels[u] <= lv for u in range(self.n) if u not in self.visited)


def _fresh_state(graph: Graph, paradigm: Paradigm) -> LabelState:
    return LabelState(graph._adj, paradigm)


def step_candidates(
    graph: Graph, visited: Sequence[str], paradigm: Paradigm
) -> tuple[str, ...]:
    """Vertices eligible as the next visit after the given prefix.

    The prefix is replayed label-by-label; it does not itself have to be
    a valid partial run of the paradigm.
    """
    state = _fresh_state(graph, paradigm)
    seen = set()
    for name in visited:
        i = graph.universe.index(name)
        if i in seen:
            raise ValueError(f"duplicate vertex {name!r} in prefix")
        seen.add(i)
        state.advance(i)
    return tuple(graph.universe.name(i) for i in state.candidates())


def generate_ordering(
    graph: Graph, paradigm: Paradigm, start: str | None = None
) -> Ordering:
    """One deterministic full run; ties break to the lowest universe index."""
    state = _fresh_state(graph, paradigm)
    seq: list[int] = []
    if start is not None:
        first = graph.universe.index(start)
        # every vertex is eligible at step 1 (all labels equal)
        state.advance(first)
        seq.append(first)
    while len(seq) < graph.n:
        v = state.candidates()[0]
        state.advance(v)
        seq.append(v)
    return Ordering(graph.universe, tuple(seq))


def enumerate_orderings(
    graph: Graph, paradigm: Paradigm, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[Ordering, ...]:
    """All full orderings the paradigm can produce, in lexicographic
    index order. Branches over every eligible vertex at every step."""
    if graph.n > cap:
        raise CapError(f"enumeration needs n <= {cap}, got n = {graph.n}")
    out: list[Ordering] = []
    uni = graph.universe
    n = graph.n
    prefix: list[int] = []

    def rec(state: LabelState) -> None:
        if len(prefix) == n:
            out.append(Ordering(uni, tuple(prefix)))
            return
        for v in state.candidates():
            nxt = state.copy()
            nxt.advance(v)
            prefix.append(v)
            rec(nxt)
            prefix.pop()

    rec(_fresh_state(graph, paradigm))
    return tuple(out)


def complete_prefix(
    graph: Graph, prefix: Sequence[str] | Ordering, paradigm: Paradigm
) -> Ordering:
    """Extend a prefix to a full ordering by running the paradigm on the
    graph augmented with a clique on the prefix set, then continuing
    greedily (lowest index on ties).

    The clique makes any prefix replayable regardless of adjacency; the
    returned ordering restricted to the first len(prefix) positions is
    the prefix itself.
    """
    names = list(prefix.names if isinstance(prefix, Ordering) else prefix)
    star = graph.with_clique(names) if len(names) > 1 else graph
    state = _fresh_state(star, paradigm)
    seq: list[int] = []
    for name in names:
        i = star.universe.index(name)
        state.advance(i)
        seq.append(i)
    while len(seq) < star.n:
        v = state.candidates()[0]
        state.advance(v)
        seq.append(v)
    return Ordering(graph.universe, tuple(seq))


def is_partial_ordering(
    graph: Graph, prefix: Sequence[str] | Ordering, paradigm: Paradigm
) -> bool:
    """Whether the prefix extends to a full ordering of the paradigm."""
    from .verifiers import is_s_ordering  # deferred: verifiers imports this module

    completed = complete_prefix(graph, prefix, paradigm)
    return is_s_ordering(graph, completed, paradigm)
