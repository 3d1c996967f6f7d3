"""Immutable graph value type plus the structural primitives everything else builds on."""

from __future__ import annotations

import hashlib
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Raised for malformed edge-list text or certificate data."""


class Graph:
    """A simple undirected graph on vertices 0..n-1 with an indexed edge list.

    Edges are stored as (u, v) pairs with u < v, in construction order; the
    position of a pair in ``edges`` is its edge id. Instances are immutable:
    build a new one instead of mutating.
    """

    __slots__ = ("n", "edges", "adj", "_edge_ids")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphFormatError(f"vertex count must be >= 0, got {n}")
        norm = []
        seen = {}
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise GraphFormatError(f"duplicate edge ({u},{v})")
            seen[(u, v)] = len(norm)
            norm.append((u, v))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in adj))
        object.__setattr__(self, "_edge_ids", seen)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edge_id(self, u: int, v: int) -> int:
        """Id of the edge between u and v; KeyError if absent."""
        return self._edge_ids[(u, v) if u < v else (v, u)]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and set(self.edges) == set(other.edges)
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.edges)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_graph(text: str) -> Graph:
    """Parse edge-list text into a Graph.

    Format: first non-comment line is ``n m``; each following non-comment line
    is one edge ``u v`` with 0-based endpoints. Lines starting with ``#`` and
    blank lines are ignored. Duplicate edges produce a warning and are
    dropped; the edge ids follow file order after deduplication. Self-loops,
    out-of-range endpoints, a malformed header, or an edge-line count not
    matching the declared m are hard errors.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphFormatError("empty input, expected an 'n m' header")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"malformed header {lines[0]!r}, expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphFormatError(f"malformed header {lines[0]!r}, expected two integers") from None
    if n < 0 or m < 0:
        raise GraphFormatError(f"negative counts in header {lines[0]!r}")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header declares {m} edges but found {len(body)} edge lines")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"malformed edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"malformed edge line {line!r}") from None
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            warnings.warn(f"duplicate edge ({u},{v}) dropped", stacklevel=2)
            continue
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    """Canonical edge-list text: header then edges sorted by (u, v)."""
    out = [f"{g.n} {g.m}"]
    for u, v in sorted(g.edges):
        out.append(f"{u} {v}")
    return "\n".join(out) + "\n"


def content_hash(g: Graph) -> str:
    """sha256 hex digest of the canonical serialization."""
    return hashlib.sha256(serialize_graph(g).encode()).hexdigest()


def complement(g: Graph) -> Graph:
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if v not in g.adj[u]
    ]
    return Graph(g.n, edges)


def induced(g: Graph, s: Sequence[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by the vertex set s.

    Vertices are relabelled 0..len(s)-1 in sorted s order. Returns the
    subgraph together with the map new id -> original id.
    """
    vmap = tuple(sorted(set(s)))
    if vmap and not (0 <= vmap[0] and vmap[-1] < g.n):
        raise ValueError(f"vertex set {s} not within 0..{g.n - 1}")
    back = {old: new for new, old in enumerate(vmap)}
    edges = [
        (back[u], back[v])
        for u, v in g.edges
        if u in back and v in back
    ]
    return Graph(len(vmap), edges), vmap


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples, ordered by minimum vertex."""
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            w = stack.pop()
            for x in g.adj[w]:
                if not seen[x]:
                    seen[x] = True
                    comp.append(x)
                    stack.append(x)
        out.append(tuple(sorted(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def cutvertices(g: Graph) -> tuple[int, ...]:
    """Articulation points of a connected graph, ascending.

    Iterative lowpoint DFS so deep paths do not hit the recursion limit.
    """
    if not is_connected(g):
        raise ValueError("cutvertices requires a connected graph")
    n = g.n
    if n <= 2:
        return ()
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    child_count = [0] * n
    is_cut = [False] * n
    timer = 0
    stack: list[tuple[int, Iterable[int]]] = [(0, iter(sorted(g.adj[0])))]
    disc[0] = low[0] = timer
    timer += 1
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                parent[w] = v
                child_count[v] += 1
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, iter(sorted(g.adj[w]))))
                advanced = True
                break
            elif w != parent[v]:
                low[v] = min(low[v], disc[w])
        if not advanced:
            stack.pop()
            p = parent[v]
            if p != -1:
                low[p] = min(low[p], low[v])
                if p != 0 and low[v] >= disc[p]:
                    is_cut[p] = True
    if child_count[0] >= 2:
        is_cut[0] = True
    return tuple(v for v in range(n) if is_cut[v])


@dataclass(frozen=True)
class TwinReduction:
    """Result of repeatedly deleting true twins.

    deletions records (deleted, kept) pairs in deletion order. reduced is the
    surviving induced subgraph, vmap maps its vertex ids back to original ids,
    and class_of sends every original vertex to its reduced-graph id.
    """

    reduced: Graph
    vmap: tuple[int, ...]
    deletions: tuple[tuple[int, int], ...]
    class_of: tuple[int, ...]


def twin_reduce(g: Graph) -> TwinReduction:
    """Delete true twins until none remain.

    Deterministic: at each step the lexicographically smallest pair (u, v)
    with equal closed neighbourhoods is found and the larger vertex v is
    deleted. True twins here means closed neighbourhoods, so the pair must be
    adjacent.
    """
    alive = sorted(range(g.n))
    adj = {v: set(g.adj[v]) for v in alive}
    deletions: list[tuple[int, int]] = []
    while True:
        closed = {v: frozenset(adj[v]) | {v} for v in alive}
        found = None
        for i, u in enumerate(alive):
            for v in alive[i + 1 :]:
                if closed[u] == closed[v]:
                    found = (u, v)
                    break
            if found:
                break
        if found is None:
            break
        keep, drop = found
        deletions.append((drop, keep))
        alive.remove(drop)
        for w in adj[drop]:
            adj[w].discard(drop)
        del adj[drop]
    reduced, vmap = induced(g, alive)
    # Resolve deletion chains so every original vertex lands on a survivor.
    rep = {v: v for v in range(g.n)}
    for drop, keep in reversed(deletions):
        rep[drop] = rep[keep]
    back = {old: new for new, old in enumerate(vmap)}
    class_of = tuple(back[rep[v]] for v in range(g.n))
    return TwinReduction(reduced, vmap, tuple(deletions), class_of)
