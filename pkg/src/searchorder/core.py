"""Value types shared across the package: vertex universes, graphs,
orderings, profiles, and trees, plus the text file formats.

All values are immutable. Vertices are referred to by name in every
public interface; the dense 0-based index of a vertex inside its
universe is an internal detail (positions reported to users are
1-based). Two values are equal iff they agree on names, name order,
and structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class FormatError(ValueError):
    """Raised when a graph/profile/instance text cannot be parsed."""


class CapError(RuntimeError):
    """Raised when an enumeration would exceed its configured size cap."""


class NotATreeError(RuntimeError):
    """Raised when a graph expected to be a tree is not one."""


def _check_name(name: str) -> str:
    # Names appear as whitespace-separated tokens in files, so they may not
    # contain whitespace, ':' (reserved for header lines) or '#' (comments).
    if not name or any(ch.isspace() for ch in name) or ":" in name or "#" in name:
        raise FormatError(f"invalid vertex name {name!r}")
    return name


@dataclass(frozen=True)
class Universe:
    """An ordered set of vertex names; declaration order fixes indices."""

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        for name in self.names:
            _check_name(name)
        if len(set(self.names)) != len(self.names):
            raise FormatError("duplicate vertex names")

    @property
    def n(self) -> int:
        return len(self.names)

    @cached_property
    def _index_map(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def index(self, name: str) -> int:
        try:
            return self._index_map[name]
        except KeyError:
            raise KeyError(f"unknown vertex {name!r}") from None

    def name(self, i: int) -> str:
        return self.names[i]

    def indices(self, names: Iterable[str]) -> tuple[int, ...]:
        return tuple(self.index(v) for v in names)

    def __contains__(self, name: str) -> bool:
        return name in self._index_map

    def __len__(self) -> int:
        return len(self.names)


def universe_of(names: Iterable[str]) -> Universe:
    return Universe(tuple(names))


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph over a vertex universe.

    Edges are stored as index pairs (u, v) with u < v. Adjacency is also
    exposed as per-vertex bitmasks (bit i set = adjacent to index i),
    which the ordering verifiers rely on.
    """

    universe: Universe
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        n = self.universe.n
        for u, v in self.edges:
            if not (0 <= u < v < n):
                raise ValueError(f"bad edge pair ({u}, {v})")

    @classmethod
    def build(cls, names: Iterable[str], edges: Iterable[tuple[str, str]] = ()) -> Graph:
        uni = universe_of(names)
        pairs = set()
        for a, b in edges:
            u, v = uni.index(a), uni.index(b)
            if u == v:
                raise ValueError(f"self-loop at {a!r}")
            pairs.add((min(u, v), max(u, v)))
        return cls(uni, frozenset(pairs))

    @property
    def n(self) -> int:
        return self.universe.n

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _adj(self) -> tuple[frozenset[int], ...]:
        sets: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            sets[u].add(v)
            sets[v].add(u)
        return tuple(frozenset(s) for s in sets)

    @cached_property
    def _adj_mask(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def index_neighbors(self, i: int) -> frozenset[int]:
        return self._adj[i]

    def adjacency_mask(self, i: int) -> int:
        return self._adj_mask[i]

    def neighbors(self, name: str) -> tuple[str, ...]:
        i = self.universe.index(name)
        return tuple(self.universe.name(j) for j in sorted(self._adj[i]))

    def degree(self, name: str) -> int:
        return len(self._adj[self.universe.index(name)])

    def max_degree(self) -> int:
        return max((len(s) for s in self._adj), default=0)

    def has_edge(self, a: str, b: str) -> bool:
        u, v = self.universe.index(a), self.universe.index(b)
        return (min(u, v), max(u, v)) in self.edges

    def edge_names(self) -> tuple[tuple[str, str], ...]:
        """Edges as name pairs, sorted by index pair."""
        return tuple(
            (self.universe.name(u), self.universe.name(v)) for u, v in sorted(self.edges)
        )

    def with_edges(self, extra: Iterable[tuple[str, str]]) -> Graph:
        pairs = set(self.edges)
        for a, b in extra:
            u, v = self.universe.index(a), self.universe.index(b)
            if u == v:
                raise ValueError(f"self-loop at {a!r}")
            pairs.add((min(u, v), max(u, v)))
        return Graph(self.universe, frozenset(pairs))

    def with_clique(self, names: Iterable[str]) -> Graph:
        """The graph plus all edges between the given vertices."""
        idx = sorted(self.universe.index(v) for v in names)
        pairs = set(self.edges)
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                pairs.add((idx[a], idx[b]))
        return Graph(self.universe, frozenset(pairs))

    def induced(self, names: Iterable[str]) -> Graph:
        """Induced subgraph; the sub-universe keeps the original name order."""
        keep = set(self.universe.index(v) for v in names)
        sub_names = tuple(v for i, v in enumerate(self.universe.names) if i in keep)
        remap = {self.universe.index(v): k for k, v in enumerate(sub_names)}
        sub_edges = frozenset(
            (min(remap[u], remap[v]), max(remap[u], remap[v]))
            for u, v in self.edges
            if u in keep and v in keep
        )
        return Graph(Universe(sub_names), sub_edges)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


@dataclass(frozen=True)
class Tree(Graph):
    """A connected acyclic graph. Construction validates tree-ness."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.m != max(self.n - 1, 0) or not self.is_connected():
            raise NotATreeError("graph is not a tree")

    @classmethod
    def build(cls, names: Iterable[str], edges: Iterable[tuple[str, str]] = ()) -> Tree:
        g = Graph.build(names, edges)
        return cls(g.universe, g.edges)

    @classmethod
    def from_graph(cls, g: Graph) -> Tree:
        return cls(g.universe, g.edges)

    def parents(self, root: str) -> dict[str, str]:
        """Parent map of the tree rooted at `root` (root is absent)."""
        r = self.universe.index(root)
        parent: dict[int, int] = {}
        order = [r]
        seen = {r}
        for u in order:
            for w in sorted(self._adj[u]):
                if w not in seen:
                    seen.add(w)
                    parent[w] = u
                    order.append(w)
        name = self.universe.name
        return {name(c): name(p) for c, p in parent.items()}

    def distances(self, root: str) -> dict[str, int]:
        r = self.universe.index(root)
        dist = {r: 0}
        order = [r]
        for u in order:
            for w in self._adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    order.append(w)
        return {self.universe.name(i): d for i, d in dist.items()}


def tree_path(tree: Tree, u: str, v: str) -> tuple[str, ...]:
    """The unique u–v path in the tree, inclusive of both endpoints."""
    src = tree.universe.index(u)
    dst = tree.universe.index(v)
    if src == dst:
        return (u,)
    parent: dict[int, int] = {src: src}
    frontier = [src]
    while frontier and dst not in parent:
        nxt = []
        for a in frontier:
            for b in tree.index_neighbors(a):
                if b not in parent:
                    parent[b] = a
                    nxt.append(b)
        frontier = nxt
    if dst not in parent:
        raise ValueError(f"no path between {u!r} and {v!r}")
    rev = [dst]
    while rev[-1] != src:
        rev.append(parent[rev[-1]])
    return tuple(tree.universe.name(i) for i in reversed(rev))


@dataclass(frozen=True)
class Ordering:
    """A sequence of distinct vertices of a universe, leftmost visited first.

    A *complete* ordering covers the whole universe; fragments (prefixes,
    deletions) are represented by the same type.
    """

    universe: Universe
    seq: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.universe.n
        if len(set(self.seq)) != len(self.seq):
            raise ValueError("ordering repeats a vertex")
        for i in self.seq:
            if not 0 <= i < n:
                raise ValueError(f"index {i} outside universe")

    @classmethod
    def from_names(cls, universe: Universe, names: Sequence[str]) -> Ordering:
        return cls(universe, tuple(universe.index(v) for v in names))

    @cached_property
    def names(self) -> tuple[str, ...]:
        return tuple(self.universe.name(i) for i in self.seq)

    @cached_property
    def _pos(self) -> dict[int, int]:
        return {v: p for p, v in enumerate(self.seq)}

    def __len__(self) -> int:
        return len(self.seq)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    @property
    def is_complete(self) -> bool:
        return len(self.seq) == self.universe.n

    def __contains__(self, name: str) -> bool:
        return self.universe.index(name) in self._pos

    def position(self, name: str) -> int:
        """1-based position of `name`; raises if absent."""
        i = self.universe.index(name)
        if i not in self._pos:
            raise ValueError(f"{name!r} does not occur in the ordering")
        return self._pos[i] + 1

    def at(self, position: int) -> str:
        """Vertex at the given 1-based position."""
        if not 1 <= position <= len(self.seq):
            raise ValueError(f"position {position} out of range")
        return self.universe.name(self.seq[position - 1])

    def before(self, a: str, b: str) -> bool:
        return self.position(a) < self.position(b)


def ordering_prefix(sigma: Ordering, i: int) -> Ordering:
    """The first i vertices of sigma (i may be 0..len(sigma))."""
    if not 0 <= i <= len(sigma.seq):
        raise ValueError(f"prefix length {i} out of range")
    return Ordering(sigma.universe, sigma.seq[:i])


def ordering_delete(sigma: Ordering, names: Iterable[str]) -> Ordering:
    """sigma with the given vertices removed, order preserved."""
    drop = {sigma.universe.index(v) for v in names}
    return Ordering(sigma.universe, tuple(i for i in sigma.seq if i not in drop))


def ordering_up_to(sigma: Ordering, name: str) -> Ordering:
    """The prefix of sigma strictly before `name`."""
    return ordering_prefix(sigma, sigma.position(name) - 1)


@dataclass(frozen=True)
class Profile:
    """A non-empty collection of complete orderings over one universe."""

    universe: Universe
    orderings: tuple[Ordering, ...]

    def __post_init__(self) -> None:
        if not self.orderings:
            raise ValueError("a profile needs at least one ordering")
        for o in self.orderings:
            if o.universe != self.universe:
                raise ValueError("ordering universe mismatch")
            if not o.is_complete:
                raise ValueError("profiles contain complete orderings only")

    @classmethod
    def build(cls, names: Iterable[str], rows: Iterable[Sequence[str]]) -> Profile:
        uni = universe_of(names)
        return cls(uni, tuple(Ordering.from_names(uni, row) for row in rows))

    def __len__(self) -> int:
        return len(self.orderings)

    def __iter__(self) -> Iterator[Ordering]:
        return iter(self.orderings)


# ---------------------------------------------------------------------------
# file formats
#
# Graph file:     "vertices: a b c" header, then one "u v" line per edge.
# Profile file:   "vertices: a b c" header, then one ordering per line.
# Either may contain blank lines and full-line "#" comments; an optional
# "k: <int>" header after the vertices line carries a solution bound.
# ---------------------------------------------------------------------------


def _significant_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append(line)
    return out


def _parse_header(lines: list[str]) -> tuple[Universe, int | None, list[str]]:
    if not lines or not lines[0].startswith("vertices:"):
        raise FormatError("first line must be 'vertices: <names>'")
    names = lines[0][len("vertices:"):].split()
    if not names:
        raise FormatError("empty vertex list")
    uni = universe_of(names)
    rest = lines[1:]
    k: int | None = None
    if rest and rest[0].startswith("k:"):
        tok = rest[0][len("k:"):].strip()
        try:
            k = int(tok)
        except ValueError:
            raise FormatError(f"bad bound line {rest[0]!r}") from None
        rest = rest[1:]
    return uni, k, rest


def parse_graph(text: str) -> Graph:
    uni, _k, rest = _parse_header(_significant_lines(text))
    edges = []
    for line in rest:
        toks = line.split()
        if len(toks) != 2:
            raise FormatError(f"edge line needs two names: {line!r}")
        edges.append((toks[0], toks[1]))
    try:
        return Graph.build(uni.names, edges)
    except KeyError as exc:
        raise FormatError(str(exc)) from None


def emit_graph(g: Graph) -> str:
    lines = ["vertices: " + " ".join(g.universe.names)]
    lines.extend(f"{a} {b}" for a, b in g.edge_names())
    return "\n".join(lines) + "\n"


def parse_profile(text: str) -> Profile:
    profile, _k = parse_bounded_profile(text)
    return profile


def parse_bounded_profile(text: str) -> tuple[Profile, int | None]:
    """Parse a profile file; also returns the optional 'k:' bound."""
    uni, k, rest = _parse_header(_significant_lines(text))
    if not rest:
        raise FormatError("profile has no orderings")
    rows = []
    for line in rest:
        toks = line.split()
        if sorted(toks) != sorted(uni.names):
            raise FormatError(f"line is not a permutation of the universe: {line!r}")
        rows.append(toks)
    try:
        profile = Profile.build(uni.names, rows)
    except KeyError as exc:
        raise FormatError(str(exc)) from None
    return profile, k


def emit_profile(p: Profile, k: int | None = None, meta: dict[str, str] | None = None) -> str:
    lines = []
    for key, value in (meta or {}).items():
        lines.append(f"# {key}: {value}")
    lines.append("vertices: " + " ".join(p.universe.names))
    if k is not None:
        lines.append(f"k: {k}")
    lines.extend(" ".join(o.names) for o in p.orderings)
    return "\n".join(lines) + "\n"
