"""Vertex-Cover reduction instance generators.

Each generator takes a 3-regular source graph G and a cover budget
kappa and emits a profile of orderings plus a bound k such that the
profile admits a support graph within the bound iff G has a vertex
cover of size kappa. The constructed gadget graph G' always contains
a designated vertex z; adding the edges between z and a cover S of G
turns G' into a support H, which is what `validate_forward` checks.

Source vertices are renamed canonically to v1..vn (in declaration
order); gadget vertices get family-specific names. All helper
sequences (V, E, F, W, T, U, Z and per-vertex pendant groups) are
fixed in declaration/index order, and constructions that let us
"choose" an auxiliary edge always take the lowest-index qualifying
one, so instances are fully deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .core import FormatError, Graph, Profile, emit_profile, parse_bounded_profile
from .traversals import Paradigm, complete_prefix
from .verifiers import is_s_ordering

EDGE = "edge"
DEG = "deg"


@dataclass(frozen=True)
class Drone:
    """A clique of p vertices, each carrying q pendant leaves."""

    p: int
    q: int
    graph: Graph


def build_drone(p: int, q: int) -> Drone:
    if p < 1 or q < 0:
        raise ValueError("drone needs p >= 1 and q >= 0")
    core = [f"v{i}" for i in range(1, p + 1)]
    names = list(core)
    edges: list[tuple[str, str]] = []
    for a, b in combinations(core, 2):
        edges.append((a, b))
    for i, v in enumerate(core, start=1):
        for j in range(1, q + 1):
            leaf = f"f{i}_{j}"
            names.append(leaf)
            edges.append((v, leaf))
    return Drone(p, q, Graph.build(names, edges))


@dataclass(frozen=True)
class ReductionInstance:
    paradigm: Paradigm
    bound: str
    family: str
    kappa: int
    source: Graph
    gadget: Graph
    attach_vertex: str
    profile: Profile
    k: int

    def meta(self) -> dict[str, str]:
        return {
            "family": self.family,
            "paradigm": self.paradigm.value,
            "bound": self.bound,
            "kappa": str(self.kappa),
            "attach": self.attach_vertex,
            "source-vertices": " ".join(self.source.universe.names),
            "source-edges": " ".join(
                f"{a} {b}" for a, b in self.source.edge_names()
            ),
        }

    def emit(self) -> str:
        return emit_profile(self.profile, k=self.k, meta=self.meta())

    @staticmethod
    def parse(text: str) -> "ReductionInstance":
        meta: dict[str, str] = {}
        for raw in text.splitlines():
            line = raw.strip()
            if line.startswith("#") and ":" in line:
                key, _, value = line[1:].partition(":")
                meta[key.strip()] = value.strip()
        profile, k = parse_bounded_profile(text)
        for key in ("paradigm", "bound", "kappa", "source-vertices", "source-edges"):
            if key not in meta:
                raise FormatError(f"instance file lacks '# {key}:' metadata")
        tokens = meta["source-edges"].split()
        if len(tokens) % 2:
            raise FormatError("source-edges metadata must list name pairs")
        source = Graph.build(
            meta["source-vertices"].split(),
            list(zip(tokens[::2], tokens[1::2])),
        )
        instance = reduce(
            Paradigm.from_name(meta["paradigm"]), meta["bound"], source, int(meta["kappa"])
        )
        if instance.profile != profile or instance.k != k:
            raise FormatError("instance file does not match its declared construction")
        return instance


def _minus(seq: Sequence[str], drop: Iterable[str]) -> list[str]:
    gone = set(drop)
    return [x for x in seq if x not in gone]


def _clique(names: Sequence[str]) -> list[tuple[str, str]]:
    return list(combinations(names, 2))


def _check_source(source: Graph, kappa: int, paradigm: Paradigm) -> None:
    for v in source.universe.names:
        if source.degree(v) != 3:
            raise ValueError(f"source graph must be 3-regular; {v!r} has degree {source.degree(v)}")
    n, m = source.n, source.m
    if paradigm is Paradigm.LEXDFS:
        if n < 10:
            raise ValueError("the construction needs n >= 10 source vertices")
        if not 3 <= kappa <= n - 1:
            raise ValueError("the construction needs 3 <= kappa <= n - 1")
        return
    if n < 4:
        raise ValueError("the construction needs n >= 4 source vertices")
    if m < 6:
        raise ValueError("the construction needs m >= 6 source edges")
    if kappa < 2:
        raise ValueError("the construction needs kappa >= 2")


# --- DFS ------------------------------------------------------------------


def _dfs_instance(source: Graph, kappa: int, bound: str):
    n = source.n
    edge_list = sorted(source.edges)
    V = [f"v{i}" for i in range(1, n + 1)]
    F = [f"f{i}" for i in range(1, n + 1)]
    VF = [x for pair in zip(V, F) for x in pair]
    Z = [f"z{t}" for t in range(1, n + 1)] if bound == DEG else []
    universe = VF + ["z"] + Z
    edges = _clique(V) + list(zip(V, F)) + [("z", zt) for zt in Z]

    rows: list[list[str]] = []
    for i, j in combinations(range(n), 2):
        drop = {V[i], F[i], V[j], F[j]}
        rows.append([V[i], V[j], F[j]] + _minus(VF, drop) + ["z"] + Z + [F[i]])
    if bound == DEG:
        for i in range(n):
            rest = _minus(VF, {V[i], F[i]})
            for t in range(n):
                rows.append([F[i], V[i]] + rest + ["z", Z[t]] + _minus(Z, {Z[t]}))
    else:
        for i in range(n):
            rows.append([F[i], V[i]] + _minus(VF, {V[i], F[i]}) + ["z"])
    for a, b in edge_list:
        drop = {V[a], F[a], V[b], F[b]}
        shared = _minus(VF, drop)
        rows.append(shared + [V[a], V[b], F[b], "z"] + Z + [F[a]])
        rows.append(shared + [V[b], V[a], F[a], "z"] + Z + [F[b]])

    k = kappa + n if bound == DEG else kappa + n * (n - 1) // 2 + n
    return universe, edges, rows, k


# --- BFS / LexBFS ---------------------------------------------------------


def _bfs_instance(source: Graph, kappa: int, bound: str):
    n = source.n
    edge_list = sorted(source.edges)
    nsq = n * n
    V = [f"v{i}" for i in range(1, n + 1)]
    fgroups = [[f"f{i}_{p}" for p in range(1, nsq + 1)] for i in range(1, n + 1)]
    fall = [f for group in fgroups for f in group]
    Z = [f"z{q}" for q in range(1, n * (n + 1) + 1)] if bound == DEG else []
    universe = V + fall + ["z"] + Z
    edges = _clique(V)
    for i in range(n):
        edges.extend((V[i], f) for f in fgroups[i])
    edges.extend(("z", zq) for zq in Z)

    rows: list[list[str]] = []
    for a, b in edge_list:
        t = min(x for x in range(n) if x not in (a, b))
        others = _minus(V, {V[a], V[b], V[t]})
        tail_groups = {a, b, t}
        for p, q in combinations(range(nsq), 2):
            for lead, trail in ((a, b), (b, a)):
                for r, s in ((p, q), (q, p)):
                    row = (
                        [fgroups[lead][r], V[lead]]
                        + _minus(fgroups[lead], {fgroups[lead][r], fgroups[lead][s]})
                        + [fgroups[lead][s], V[trail]]
                        + others
                        + [V[t], "z"]
                        + fgroups[trail]
                        + [
                            f
                            for gi, group in enumerate(fgroups)
                            if gi not in tail_groups
                            for f in group
                        ]
                        + fgroups[t]
                    )
                    if bound == DEG:
                        # one canonical pendant pair, both orders
                        mid = Z[2:]
                        rows.append(row + [Z[0]] + mid + [Z[1]])
                        rows.append(row + [Z[1]] + mid + [Z[0]])
                    else:
                        rows.append(row)

    k = kappa + n * (n + 1) if bound == DEG else kappa + n * (n - 1) // 2 + n**3
    return universe, edges, rows, k


# --- LexDFS ----------------------------------------------------------------


def _lexdfs_instance(source: Graph, kappa: int, bound: str):
    n = source.n
    edge_list = sorted(source.edges)
    m = len(edge_list)
    V = [f"v{i}" for i in range(1, n + 1)]
    T = [f"t{p}" for p in range(1, m + 1)]
    W = [f"w{p}" for p in range(1, m + 1)]
    U = [f"u{p}" for p in range(1, m + 1)]
    universe = V + T + W + U + ["z"]
    edges = _clique(V)
    for p, (i, j) in enumerate(edge_list):
        edges.extend(
            [
                (T[p], V[i]),
                (T[p], V[j]),
                (W[p], T[p]),
                (W[p], V[i]),
                (U[p], T[p]),
                ("z", T[p]),
            ]
        )
        edges.extend((U[p], v) for v in V)
    gadget = Graph.build(universe, edges)

    def disjoint_edge(banned: set[int]) -> int:
        for p, (x, y) in enumerate(edge_list):
            if x not in banned and y not in banned:
                return p
        raise AssertionError("3-regular graph on >= 10 vertices always has one")

    prefixes: list[list[str]] = []
    for i, j in combinations(range(n), 2):
        p = disjoint_edge({i, j})
        x, y = edge_list[p]
        prefixes.append(
            [V[i], V[j]] + _minus(V, {V[i], V[j], V[x], V[y]}) + [V[x], V[y], U[p], T[p], "z"]
        )
    for p, (i, j) in enumerate(edge_list):
        q = disjoint_edge({i, j})
        x, y = edge_list[q]
        tail = _minus(V, {V[i], V[j], V[x], V[y]}) + [V[x], V[y], U[q], T[q], "z"]
        prefixes.append([T[p], V[i], U[p], V[j]] + tail)
        prefixes.append([T[p], V[j], U[p], V[i]] + tail)
        prefixes.append([T[p], V[i], W[p], V[j], U[p]] + tail)
    for p, (i, j) in enumerate(edge_list):
        prefixes.append(_minus(V, {V[i], V[j]}) + [V[i], V[j], U[p], T[p], "z"])
    for p, (i, j) in enumerate(edge_list):
        for h in range(n):
            if h in (i, j):
                continue
            prefixes.append(
                [V[i], V[j]] + _minus(V, {V[i], V[j], V[h]}) + [V[h], U[p], T[p], "z"]
            )

    rows = [list(complete_prefix(gadget, prefix, Paradigm.LEXDFS).names) for prefix in prefixes]
    k = kappa + m if bound == DEG else kappa + gadget.m
    return universe, [tuple(e) for e in edges], rows, k


# --- MCS --------------------------------------------------------------------


def _mcs_instance(source: Graph, kappa: int, bound: str):
    n = source.n
    edge_list = sorted(source.edges)
    m = len(edge_list)
    V = [f"v{i}" for i in range(1, n + 1)]
    W = [f"w{x}" for x in range(1, 2 * m + 1)]
    fgroups = [[f"f{i}_{p}" for p in range(1, n - i + 2)] for i in range(1, n + 1)]
    fall = [f for group in fgroups for f in group]
    U = [f"u{x}" for x in range(1, 4 * n)] + ["z"]
    universe = V + W + fall + U

    edges = _clique(V) + _clique(U)
    for x, (i, j) in enumerate(edge_list):
        edges.extend(
            [(W[x], V[i]), (W[x], V[j]), (W[m + x], V[i]), (W[m + x], V[j])]
        )
    for i in range(n):
        edges.extend((V[i], f) for f in fgroups[i])
    edges.extend((u, w) for u in U for w in W)
    edges.extend((u, f) for u in U for f in fall)

    wof = [
        [w for x, w in enumerate(W) if i in edge_list[x % m]]
        for i in range(n)
    ]

    rows: list[list[str]] = []
    for i, j in combinations(range(n), 2):
        rows.append(
            [V[i], V[j]]
            + _minus(V, {V[i], V[j]})
            + ["z", W[0], W[m]]
            + _minus(U, {"z"})
            + _minus(W, {W[0], W[m]})
            + fall
        )
    for a, b in combinations(range(len(U)), 2):
        rows.append([U[a], U[b]] + _minus(U, {U[a], U[b]}) + W + fall + V)
    for w in W:
        for u in U:
            rows.append([w, u] + _minus(U, {u}) + _minus(W, {w}) + fall + V)
    for f in fall:
        for u in U:
            rows.append([f, u] + _minus(U, {u}) + _minus(fall, {f}) + W + V)
    for i in range(n):
        for f in fgroups[i]:
            # F_i stragglers still count v_i among visited neighbors, so they
            # outrank the off-vertex w's and must come first.
            rows.append(
                [V[i], f, "z"]
                + _minus(U, {"z"})
                + wof[i]
                + _minus(fgroups[i], {f})
                + _minus(W, wof[i])
                + [x for gi, group in enumerate(fgroups) if gi != i for x in group]
                + _minus(V, {V[i]})
            )
    for x, (i, j) in enumerate(edge_list):
        wij = [w for w in W if w in set(wof[i]) | set(wof[j])]
        # same pivot as above: F_i and F_j sit one visited neighbor above the
        # w's that touch neither endpoint, so they go before W - W[i,j]
        shared = (
            _minus(U, {"z"})
            + _minus(wij, {W[x], W[m + x]})
            + fgroups[i]
            + fgroups[j]
            + _minus(W, wij)
            + [f for gi, group in enumerate(fgroups) if gi not in (i, j) for f in group]
            + _minus(V, {V[i], V[j]})
        )
        for lead, last in ((W[x], W[m + x]), (W[m + x], W[x])):
            rows.append([lead, V[i], V[j], "z", last] + shared)
        for lead, last in ((W[x], W[m + x]), (W[m + x], W[x])):
            rows.append([lead, V[j], V[i], "z", last] + shared)

    gadget_edge_count = len(set(tuple(sorted(e)) for e in edges))
    if bound == DEG:
        k = 2 * m + 4 * n - 1 + n * (n + 1) // 2 + kappa
    else:
        k = kappa + gadget_edge_count
    return universe, edges, rows, k


# --- MNS --------------------------------------------------------------------


def _mns_instance(source: Graph, kappa: int, bound: str):
    n = source.n
    edge_list = sorted(source.edges)
    m = len(edge_list)
    V = [f"v{i}" for i in range(1, n + 1)]
    T = [f"t{x}" for x in range(1, m + 1)]
    W = [f"w{x}" for x in range(1, 2 * m + 1)]
    F = [f"f{i}" for i in range(1, n + 1)]
    U = [f"u{x}" for x in range(1, 3 * n)] + ["z"]
    Z = [f"z{i}" for i in range(1, n + 1)] if bound == DEG else []
    universe = V + T + W + F + U + Z

    edges = _clique(V) + _clique(U) + list(zip(V, F))
    for x, (i, j) in enumerate(edge_list):
        edges.extend(
            [
                (V[i], W[x]),
                (W[x], T[x]),
                (T[x], W[m + x]),
                (W[m + x], V[j]),
                (V[j], T[x]),
                (T[x], V[i]),
            ]
        )
    edges.extend((u, t) for u in U for t in T)
    edges.extend((u, f) for u in U if u != "z" for f in F)
    edges.extend(("z", zi) for zi in Z)

    tof = [[T[x] for x, e in enumerate(edge_list) if i in e] for i in range(n)]

    rows: list[list[str]] = []
    for i, j in combinations(range(n), 2):
        rows.append(
            [V[i], V[j]] + _minus(V, {V[i], V[j]}) + ["z"] + T + _minus(U, {"z"}) + F + W
        )
    for a, b in combinations(range(len(U)), 2):
        rows.append([U[a], U[b]] + _minus(U, {U[a], U[b]}) + T + F + V + W)
    for t in T:
        for u in U:
            rows.append([t, u] + _minus(U, {u}) + _minus(T, {t}) + F + V + W)
    for f in F:
        for u in U:
            if u == "z":
                continue
            rows.append([f, u] + _minus(U, {u, "z"}) + ["z"] + T + _minus(F, {f}) + V + W)
    for i in range(n):
        # z must follow the first incident-edge vertex immediately: once one
        # t is visited, z's neighborhood strictly dominates the other t's
        # whenever v_i lies in the cover.
        rows.append(
            [V[i], F[i]]
            + _minus(U, {"z"})
            + [tof[i][0], "z"]
            + tof[i][1:]
            + _minus(T, tof[i])
            + _minus(F, {F[i]})
            + _minus(V, {V[i]})
            + W
        )
    for x, (i, j) in enumerate(edge_list):
        tij = [t for t in T if t in set(tof[i]) | set(tof[j])]
        omega = (
            _minus(U, {"z"})
            + _minus(tij, {T[x]})
            + _minus(T, tij)
            + [F[i], F[j]]
            + _minus(F, {F[i], F[j]})
            + _minus(V, {V[i], V[j]})
        )
        rows.append([W[x], T[x], V[i], V[j], "z"] + omega + _minus(W, {W[x]}))
        rows.append([W[x], V[i], T[x], V[j], "z"] + omega + _minus(W, {W[x]}))
        rows.append([W[m + x], T[x], V[j], V[i], "z"] + omega + _minus(W, {W[m + x]}))
        rows.append([W[m + x], V[j], T[x], V[i], "z"] + omega + _minus(W, {W[m + x]}))
        rows.append([T[x], V[i], V[j], "z"] + omega + W)
        rows.append([T[x], V[j], V[i], "z"] + omega + W)

    if bound == DEG:
        rows = [row + Z for row in rows]
        for i in range(n):
            rows.append(
                [Z[i], "z"] + _minus(Z, {Z[i]}) + _minus(U, {"z"}) + T + F + V + W
            )
        k = kappa + m + 4 * n - 1
    else:
        gadget_edge_count = len(set(tuple(sorted(e)) for e in edges))
        k = kappa + gadget_edge_count
    return universe, edges, rows, k


_BUILDERS = {
    Paradigm.DFS: _dfs_instance,
    Paradigm.BFS: _bfs_instance,
    Paradigm.LEXBFS: _bfs_instance,  # same construction, different verifier
    Paradigm.LEXDFS: _lexdfs_instance,
    Paradigm.MCS: _mcs_instance,
    Paradigm.MNS: _mns_instance,
}


def reduce(paradigm: Paradigm, bound: str, source: Graph, kappa: int) -> ReductionInstance:
    """Build the hardness instance for the paradigm and bound kind."""
    if bound not in (EDGE, DEG):
        raise ValueError(f"bound must be '{EDGE}' or '{DEG}'")
    if paradigm not in _BUILDERS:
        raise ValueError(f"no construction exists for paradigm {paradigm.value!r}")
    _check_source(source, kappa, paradigm)
    universe, edges, rows, k = _BUILDERS[paradigm](source, kappa, bound)
    gadget = Graph.build(universe, edges)
    profile = Profile.build(universe, rows)
    return ReductionInstance(
        paradigm=paradigm,
        bound=bound,
        family=f"{paradigm.value}-{bound}",
        kappa=kappa,
        source=source,
        gadget=gadget,
        attach_vertex="z",
        profile=profile,
        k=k,
    )


def validate_forward(instance: ReductionInstance, cover: Iterable[str]) -> bool:
    """Check the cover-to-support direction: attach the cover to z and
    verify the bound and every ordering against the resulting graph.

    Raises if `cover` is not a vertex cover of the source graph of size
    at most kappa; returns False if the support fails the bound or some
    ordering does not verify.
    """
    cover_list = list(dict.fromkeys(cover))
    src = instance.source
    for v in cover_list:
        if v not in src.universe:
            raise ValueError(f"{v!r} is not a source vertex")
    chosen = set(cover_list)
    for a, b in src.edge_names():
        if a not in chosen and b not in chosen:
            raise ValueError(f"cover misses edge {a}-{b}")
    if len(cover_list) > instance.kappa:
        raise ValueError("cover exceeds kappa")
    vmap = {
        name: f"v{idx + 1}" for idx, name in enumerate(src.universe.names)
    }
    support = instance.gadget.with_edges(
        (instance.attach_vertex, vmap[v]) for v in cover_list
    )
    if instance.bound == EDGE:
        if support.m > instance.k:
            return False
    elif support.max_degree() > instance.k:
        return False
    return all(
        is_s_ordering(support, sigma, instance.paradigm) for sigma in instance.profile
    )
