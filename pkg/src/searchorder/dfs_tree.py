"""Polynomial-time recognition of DFS tree supports.

Given a profile of orderings, decide whether some tree admits every
ordering as a DFS-ordering, and build one if so. Pipeline:

1. Build the attachment digraph; a disconnected attachment graph rules
   out any tree support (generic search subsumes DFS).
2. The forced vertices induce a subgraph T* that any support must
   contain, so T* not being a tree is already a refutation. If every
   vertex is forced, T* is the only candidate; verify it directly.
3. Otherwise every ordering restricted to the forced set must be a
   DFS-ordering of T*, and each free vertex v gets a candidate set
   Q(v): for each ordering, the T*-path between v's *guider* (nearest
   preceding forced vertex) and a per-ordering anchor, intersected
   over all orderings.
4. Candidate sets are narrowed pairwise (purification) to a fixed
   point; an empty set means no support exists.
5. Each free vertex is attached as a leaf to its lowest-priority
   remaining candidate; a final verification of the assembled tree is
   defensive and is never expected to fail.

Free vertices are always leaves of the constructed tree.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .core import Ordering, Profile, Tree, Universe, tree_path
from .attachment import build_attachment_digraph
from .traversals import Paradigm
from .verifiers import is_s_ordering

log = logging.getLogger(__name__)

DISCONNECTED_ATTACHMENT = "DISCONNECTED_ATTACHMENT"
TSTAR_NOT_SUPPORT_FULL = "TSTAR_NOT_SUPPORT_FULL"
RESTRICTION_FAILS = "RESTRICTION_FAILS"
EMPTY_Q = "EMPTY_Q"
FINAL_VERIFY_FAILED = "FINAL_VERIFY_FAILED"

QMap = dict[str, frozenset[str]]


@dataclass(frozen=True)
class RecognitionOutcome:
    is_yes: bool
    tree: Tree | None = None
    reason: str | None = None


def guider(sigma: Ordering, v: str, forced: frozenset[str] | set[str]) -> str:
    """The forced vertex closest to v from the left in sigma."""
    pv = sigma.position(v)
    best: str | None = None
    best_pos = -1
    for u in forced:
        pu = sigma.position(u)
        if best_pos < pu < pv:
            best = u
            best_pos = pu
    if best is None:
        raise ValueError(f"no forced vertex precedes {v!r}")
    return best


def q_path(sigma: Ordering, v: str, tstar: Tree) -> frozenset[str]:
    """Candidate attachment vertices for free v contributed by sigma:
    the T*-path between v's guider and the anchor vertex.

    The anchor is the first vertex of sigma when no forced vertex
    follows v; otherwise it is the parent (in T* rooted at sigma's
    first vertex) of the forced vertex closest to v from the right.
    """
    forced = frozenset(tstar.universe.names)
    u = guider(sigma, v, forced)
    pv = sigma.position(v)
    succ: str | None = None
    succ_pos = len(sigma) + 1
    for x in forced:
        px = sigma.position(x)
        if pv < px < succ_pos:
            succ = x
            succ_pos = px
    root = sigma.at(1)
    if succ is None:
        anchor = root
    else:
        anchor = tstar.parents(root)[succ]
    return frozenset(tree_path(tstar, u, anchor))


def purify(qmap: QMap, profile: Profile, tstar: Tree) -> QMap:
    """Apply the pairwise narrowing rule to a fixed point.

    For free u before v in some ordering, sharing guider w: drop from
    Q(v) the vertices strictly closer to w (in T*) than all of Q(u),
    and from Q(u) those strictly farther from w than all of Q(v).
    Removals are monotone, so the fixed point is sweep-order
    independent; pairs with an already-empty set are skipped (the
    empty set itself is the caller's no-instance signal).
    """
    forced = frozenset(tstar.universe.names)
    q = dict(qmap)
    dist_cache: dict[str, dict[str, int]] = {}

    def dist(w: str) -> dict[str, int]:
        if w not in dist_cache:
            dist_cache[w] = tstar.distances(w)
        return dist_cache[w]

    groups: list[tuple[str, list[str]]] = []
    for sigma in profile.orderings:
        by_guider: dict[str, list[str]] = {}
        for v in sigma.names:
            if v in q:
                by_guider.setdefault(guider(sigma, v, forced), []).append(v)
        groups.extend((w, vs) for w, vs in by_guider.items() if len(vs) > 1)

    changed = True
    while changed:
        changed = False
        for w, members in groups:
            dw = dist(w)
            for a in range(len(members)):
                u = members[a]
                for b in range(a + 1, len(members)):
                    v = members[b]
                    qu, qv = q[u], q[v]
                    if not qu or not qv:
                        continue
                    nearest_u = min(dw[x] for x in qu)
                    farthest_v = max(dw[x] for x in qv)
                    drop_v = frozenset(x for x in qv if dw[x] < nearest_u)
                    drop_u = frozenset(x for x in qu if dw[x] > farthest_v)
                    if drop_v or drop_u:
                        q[v] = qv - drop_v
                        q[u] = qu - drop_u
                        changed = True
    return q


def assign_parents(
    tstar: Tree,
    qmap: QMap,
    universe: Universe,
    priority: tuple[str, ...] | None = None,
) -> Tree:
    """Attach every free vertex as a leaf to its highest-priority
    remaining candidate (default priority: universe order)."""
    rank = {name: i for i, name in enumerate(priority or universe.names)}
    edges = list(tstar.edge_names())
    for v in sorted(qmap, key=rank.__getitem__):
        candidates = qmap[v]
        if not candidates:
            raise ValueError(f"empty candidate set for {v!r}")
        edges.append((v, min(candidates, key=rank.__getitem__)))
    return Tree.build(universe.names, edges)


def recognize_dfs_tree(profile: Profile) -> RecognitionOutcome:
    """Decide whether a tree admits every profile ordering as a
    DFS-ordering; on YES the outcome carries one witness tree."""
    digraph = build_attachment_digraph(profile)
    attachment = digraph.underlying_graph()
    if not attachment.is_connected():
        return RecognitionOutcome(False, reason=DISCONNECTED_ATTACHMENT)
    forced = digraph.forced
    universe = profile.universe
    induced = attachment.induced(digraph.forced_names())
    # Any tree support must contain the forced-induced subgraph, so a cycle
    # or a second component in it already refutes every candidate.  Only
    # supportable profiles are guaranteed to make it a tree.
    forced_is_tree = induced.m == induced.n - 1 and induced.is_connected()

    if len(forced) == universe.n:
        if not forced_is_tree:
            return RecognitionOutcome(False, reason=TSTAR_NOT_SUPPORT_FULL)
        tstar = Tree.from_graph(induced)
        for sigma in profile.orderings:
            if not is_s_ordering(tstar, sigma_over(tstar, sigma), Paradigm.DFS):
                return RecognitionOutcome(False, reason=TSTAR_NOT_SUPPORT_FULL)
        return RecognitionOutcome(True, tree=tstar)

    if not forced_is_tree:
        return RecognitionOutcome(False, reason=RESTRICTION_FAILS)
    tstar = Tree.from_graph(induced)

    for sigma in profile.orderings:
        restricted = Ordering.from_names(
            tstar.universe, [x for x in sigma.names if x in forced]
        )
        if not is_s_ordering(tstar, restricted, Paradigm.DFS):
            return RecognitionOutcome(False, reason=RESTRICTION_FAILS)

    qmap: QMap = {}
    for v in universe.names:
        if v in forced:
            continue
        q: frozenset[str] | None = None
        for sigma in profile.orderings:
            contribution = q_path(sigma, v, tstar)
            q = contribution if q is None else q & contribution
        qmap[v] = q if q is not None else frozenset()

    qmap = purify(qmap, profile, tstar)
    if any(not q for q in qmap.values()):
        return RecognitionOutcome(False, reason=EMPTY_Q)

    tree = assign_parents(tstar, qmap, universe)
    for sigma in profile.orderings:
        if not is_s_ordering(tree, sigma, Paradigm.DFS):
            # all correctness arguments say this branch is dead; if it
            # ever fires it indicates a defect upstream
            log.warning("assembled tree failed final verification")
            return RecognitionOutcome(False, reason=FINAL_VERIFY_FAILED)
    return RecognitionOutcome(True, tree=tree)


def sigma_over(graph_like, sigma: Ordering) -> Ordering:
    """Re-key a complete ordering onto an equal-name universe."""
    if graph_like.universe == sigma.universe:
        return sigma
    return Ordering.from_names(graph_like.universe, sigma.names)
