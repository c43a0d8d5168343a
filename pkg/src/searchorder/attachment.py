"""Attachment digraphs and tree-support recognition for generic search.

For a profile of orderings, the attachment digraph records, for each
vertex, which vertices it could attach to in a tree on which every
profile ordering is a valid generic-search ordering. It is built by
peeling the bottom-ranked vertices of all orderings: a peeled vertex v
receives an arc to every *common blocker*, i.e. every vertex that
precedes v in all orderings (restricted to the surviving set S), with
the special case that the top-ranked survivor's only blocker is the
second-ranked one.

A vertex with at most one out-neighbor is *forced* (its tree edge is
determined); with two or more it is *free*. A tree support exists iff
the underlying undirected graph (the attachment graph) is connected,
and the supports are exactly the trees obtained by keeping one
outgoing arc per vertex that has any.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable

from .core import CapError, Graph, Ordering, Profile, Tree

DISCONNECTED_ATTACHMENT = "DISCONNECTED_ATTACHMENT"
UNREALIZABLE_ATTACHMENT = "UNREALIZABLE_ATTACHMENT"


def blocker_set(sigma: Ordering, s: Iterable[str], x: str) -> frozenset[str]:
    """Blockers of x within the surviving set s, under ordering sigma.

    If x is the sigma-earliest member of s the result is the singleton
    holding the second-earliest member; otherwise it is every member of
    s before x.
    """
    members = sorted(s, key=sigma.position)
    if x not in members:
        raise ValueError(f"{x!r} is not in the surviving set")
    if members[0] == x:
        if len(members) < 2:
            raise ValueError("top vertex of a singleton set has no blockers")
        return frozenset({members[1]})
    px = sigma.position(x)
    return frozenset(y for y in members if sigma.position(y) < px)


@dataclass(frozen=True)
class AttachmentDigraph:
    universe_names: tuple[str, ...]
    arcs: frozenset[tuple[str, str]]
    final_pair_arc: tuple[str, str] | None

    @cached_property
    def _rank(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.universe_names)}

    def out_neighbors(self, v: str) -> tuple[str, ...]:
        rank = self._rank
        return tuple(
            sorted((b for a, b in self.arcs if a == v), key=rank.__getitem__)
        )

    @cached_property
    def forced(self) -> frozenset[str]:
        counts = {v: 0 for v in self.universe_names}
        for a, _b in self.arcs:
            counts[a] += 1
        return frozenset(v for v, c in counts.items() if c <= 1)

    @cached_property
    def free(self) -> frozenset[str]:
        return frozenset(self.universe_names) - self.forced

    def forced_names(self) -> tuple[str, ...]:
        rank = self._rank
        return tuple(sorted(self.forced, key=rank.__getitem__))

    def free_names(self) -> tuple[str, ...]:
        rank = self._rank
        return tuple(sorted(self.free, key=rank.__getitem__))

    def arc_names(self) -> tuple[tuple[str, str], ...]:
        rank = self._rank
        return tuple(sorted(self.arcs, key=lambda arc: (rank[arc[0]], rank[arc[1]])))

    def underlying_graph(self) -> Graph:
        """The attachment graph: arcs undirected."""
        return Graph.build(self.universe_names, self.arcs)


def build_attachment_digraph(
    profile: Profile, *, reverse_final_pair: bool = False
) -> AttachmentDigraph:
    """Peel bottom-ranked vertices and record their common blockers.

    When exactly two vertices survive, they are joined by one arc whose
    direction carries no information; it runs lower index -> higher by
    convention (`reverse_final_pair` flips it, for invariance tests).
    """
    uni = profile.universe
    n = uni.n
    positions = [ordering._pos for ordering in profile.orderings]
    surviving = set(range(n))
    arcs: set[tuple[int, int]] = set()
    while len(surviving) >= 3:
        peeled = {max(surviving, key=pos.__getitem__) for pos in positions}
        for v in sorted(peeled):
            common: set[int] | None = None
            for pos in positions:
                ordered = sorted(surviving, key=pos.__getitem__)
                if ordered[0] == v:
                    blockers = {ordered[1]}
                else:
                    pv = pos[v]
                    blockers = {y for y in surviving if pos[y] < pv}
                common = blockers if common is None else common & blockers
            arcs.update((v, u) for u in common or ())
        surviving -= peeled
    final_arc: tuple[int, int] | None = None
    if len(surviving) == 2:
        low, high = sorted(surviving)
        final_arc = (high, low) if reverse_final_pair else (low, high)
        arcs.add(final_arc)
    name = uni.name
    return AttachmentDigraph(
        universe_names=uni.names,
        arcs=frozenset((name(a), name(b)) for a, b in arcs),
        final_pair_arc=None if final_arc is None else (name(final_arc[0]), name(final_arc[1])),
    )


def forced_subtree(profile: Profile, digraph: AttachmentDigraph) -> Tree:
    """The subgraph of the attachment graph induced by forced vertices.

    Raises NotATreeError if it is not a tree; that cannot happen when
    the profile admits a GS-tree support.
    """
    if digraph.universe_names != profile.universe.names:
        raise ValueError("digraph was built for a different universe")
    induced = digraph.underlying_graph().induced(digraph.forced_names())
    return Tree.from_graph(induced)


@dataclass(frozen=True)
class GsTreeOutcome:
    is_yes: bool
    tree: Tree | None = None
    reason: str | None = None


def _sink_count(digraph: AttachmentDigraph) -> int:
    withdrawn = {v for v, _ in digraph.arcs}
    return len(digraph.universe_names) - len(withdrawn)


def recognize_gs_tree(profile: Profile) -> GsTreeOutcome:
    """Decide whether some tree admits every profile ordering as a
    generic-search ordering; on YES, return one witness.

    Supports are exactly the realizations that keep one outgoing arc per
    vertex that has any.  Arcs always lead from a vertex to one removed
    in a strictly later round, so realizations are forests with one edge
    per non-sink vertex: they are spanning trees precisely when the
    digraph has a single sink.  (Connectivity of the attachment graph is
    necessary but not sufficient — several sinks can coexist with it.)

    The witness keeps, for every vertex with outgoing arcs, the arc to
    its lowest-index out-neighbor.
    """
    digraph = build_attachment_digraph(profile)
    if not digraph.underlying_graph().is_connected():
        return GsTreeOutcome(False, reason=DISCONNECTED_ATTACHMENT)
    if _sink_count(digraph) != 1:
        return GsTreeOutcome(False, reason=UNREALIZABLE_ATTACHMENT)
    edges = []
    for v in digraph.universe_names:
        outs = digraph.out_neighbors(v)
        if outs:
            edges.append((v, outs[0]))
    return GsTreeOutcome(True, tree=Tree.build(profile.universe.names, edges))


def enumerate_gs_tree_supports(
    profile: Profile, free_cap: int = 12
) -> tuple[Tree, ...]:
    """All tree supports, as realizations keeping one outgoing arc per
    vertex. Empty when no realization spans (see recognize_gs_tree)."""
    digraph = build_attachment_digraph(profile)
    if not digraph.underlying_graph().is_connected():
        return ()
    if _sink_count(digraph) != 1:
        return ()
    if len(digraph.free) > free_cap:
        raise CapError(f"profile has more than {free_cap} free vertices")
    choice_lists = [
        [(v, u) for u in digraph.out_neighbors(v)]
        for v in digraph.universe_names
        if digraph.out_neighbors(v)
    ]
    trees = [
        Tree.build(profile.universe.names, picks) for picks in product(*choice_lists)
    ]
    trees.sort(key=lambda t: t.edge_names())
    return tuple(trees)
