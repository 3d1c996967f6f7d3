"""Colourability by the auxiliary-graph method.

The auxiliary graph has one node per host edge; two nodes are adjacent exactly
when their edges share one endpoint whose other two endpoints are non-adjacent
(the edges form an induced 2-path). A colouring where every vertex's
same-coloured neighbours form a clique is precisely a proper 2-colouring of
this auxiliary graph, so the decision reduces to bipartiteness.
"""

from __future__ import annotations

import json

from collections import deque
from dataclasses import dataclass

from .graphs import Graph


@dataclass(frozen=True)
class AuxGraph:
    """Auxiliary graph over the host's edge ids. adj[e] lists aux neighbours of e."""

    host: Graph
    adj: tuple[tuple[int, ...], ...]

    @property
    def node_count(self) -> int:
        return len(self.adj)


@dataclass(frozen=True)
class EdgeColouring:
    """Colours 1 or 2 per edge id of a host graph."""

    colour: tuple[int, ...]

    def of(self, g: Graph, u: int, v: int) -> int:
        return self.colour[g.edge_id(u, v)]


@dataclass(frozen=True)
class Colourable:
    colouring: EdgeColouring


@dataclass(frozen=True)
class NotColourable:
    """Carries a closed odd cycle of aux nodes (edge ids) as evidence.

    Structural deciders attach a human-readable reason for the rejection;
    the cycle itself is always the checkable certificate.
    """

    odd_cycle: tuple[int, ...]
    reason: str | None = None


RecognitionResult = Colourable | NotColourable


def build_aux(g: Graph) -> AuxGraph:
    """Construct the auxiliary graph in O(sum of squared degrees)."""
    adj: list[list[int]] = [[] for _ in range(g.m)]
    for w in range(g.n):
        nbrs = sorted(g.adj[w])
        for ai, u in enumerate(nbrs):
            eu = g.edge_id(w, u)
            for v in nbrs[ai + 1 :]:
                if v not in g.adj[u]:
                    ev = g.edge_id(w, v)
                    adj[eu].append(ev)
                    adj[ev].append(eu)
    return AuxGraph(g, tuple(tuple(sorted(a)) for a in adj))


def aux_component_count(aux: AuxGraph) -> int:
    seen = [False] * aux.node_count
    count = 0
    for root in range(aux.node_count):
        if seen[root]:
            continue
        count += 1
        seen[root] = True
        stack = [root]
        while stack:
            e = stack.pop()
            for f in aux.adj[e]:
                if not seen[f]:
                    seen[f] = True
                    stack.append(f)
    return count


def _canonical_cycle(cycle) -> tuple[int, ...]:
    """Rotate to start at the smallest node, oriented toward its smaller neighbour."""
    cycle = list(cycle)
    i = cycle.index(min(cycle))
    rot = cycle[i:] + cycle[:i]
    if rot[1] > rot[-1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def recognize(g: Graph, aux: AuxGraph | None = None) -> RecognitionResult:
    """Decide colourability; produce a colouring or an odd aux cycle.

    BFS 2-colours each aux component. Components are rooted at their smallest
    edge id, which always receives colour 1. On conflict the two tree paths
    to the clashing nodes are shortcut at their last common ancestor, giving
    a simple odd cycle.
    """
    if aux is None:
        aux = build_aux(g)
    m = aux.node_count
    colour = [0] * m
    parent = [-1] * m
    depth = [0] * m
    for root in range(m):
        if colour[root]:
            continue
        colour[root] = 1
        queue = deque([root])
        while queue:
            e = queue.popleft()
            for f in aux.adj[e]:
                if not colour[f]:
                    colour[f] = 3 - colour[e]
                    parent[f] = e
                    depth[f] = depth[e] + 1
                    queue.append(f)
                elif colour[f] == colour[e]:
                    # Odd cycle: climb to the common ancestor of e and f.
                    pa, pb = e, f
                    left, right = [], []
                    while depth[pa] > depth[pb]:
                        left.append(pa)
                        pa = parent[pa]
                    while depth[pb] > depth[pa]:
                        right.append(pb)
                        pb = parent[pb]
                    while pa != pb:
                        left.append(pa)
                        right.append(pb)
                        pa = parent[pa]
                        pb = parent[pb]
                    cycle = left + [pa] + right[::-1]
                    return NotColourable(_canonical_cycle(cycle))
    return Colourable(EdgeColouring(tuple(colour)))


def verify_locally_complete(g: Graph, colouring: EdgeColouring) -> tuple[bool, tuple[int, int, int] | None]:
    """Check the defining property directly.

    Returns (True, None) or (False, (w, u, v)) where u, v are same-coloured
    neighbours of w that are not adjacent.
    """
    if len(colouring.colour) != g.m:
        raise ValueError(f"colouring has {len(colouring.colour)} entries for {g.m} edges")
    if any(c not in (1, 2) for c in colouring.colour):
        raise ValueError("colours must be 1 or 2")
    for w in range(g.n):
        nbrs = sorted(g.adj[w])
        for i, u in enumerate(nbrs):
            cu = colouring.colour[g.edge_id(w, u)]
            for v in nbrs[i + 1 :]:
                if colouring.colour[g.edge_id(w, v)] == cu and v not in g.adj[u]:
                    return False, (w, u, v)
    return True, None


def count_colourings(g: Graph, aux: AuxGraph | None = None) -> int:
    """Number of distinct valid colourings: 2^components(aux) if bipartite, else 0."""
    if aux is None:
        aux = build_aux(g)
    if isinstance(recognize(g, aux), NotColourable):
        return 0
    return 2 ** aux_component_count(aux)


def switch_colours(colouring: EdgeColouring) -> EdgeColouring:
    """Swap colours 1 and 2 everywhere."""
    return EdgeColouring(tuple(3 - c for c in colouring.colour))


def colouring_to_text(g: Graph, colouring: EdgeColouring) -> str:
    """Serialize as one line per edge, "u v c", sorted by endpoints."""
    rows = sorted((u, v, colouring.colour[e]) for e, (u, v) in enumerate(g.edges))
    return "".join(f"{u} {v} {c}\n" for u, v, c in rows)


def colouring_from_text(g: Graph, text: str) -> EdgeColouring:
    """Parse the "u v c" line format against a known host graph.

    Every edge of the host must appear exactly once and nothing else may.
    """
    seen: dict[int, int] = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"line {ln}: expected 'u v c', got {raw!r}")
        try:
            u, v, c = (int(p) for p in parts)
        except ValueError as exc:
            raise ValueError(f"line {ln}: non-integer field in {raw!r}") from exc
        if c not in (1, 2):
            raise ValueError(f"line {ln}: colour must be 1 or 2, got {c}")
        if not g.has_edge(u, v):
            raise ValueError(f"line {ln}: {u}-{v} is not an edge of the host")
        e = g.edge_id(u, v)
        if e in seen:
            raise ValueError(f"line {ln}: edge {u}-{v} coloured twice")
        seen[e] = c
    if len(seen) != g.m:
        missing = next(g.edges[e] for e in range(g.m) if e not in seen)
        raise ValueError(f"edge {missing[0]}-{missing[1]} has no colour")
    return EdgeColouring(tuple(seen[e] for e in range(g.m)))


def result_to_json(result: RecognitionResult) -> str:
    """JSON document for either outcome; parse back with result_from_json."""
    doc: dict[str, object]
    if isinstance(result, Colourable):
        doc = {
            "status": "colourable",
            "colouring": list(result.colouring.colour),
            "odd_cycle": None,
        }
    else:
        doc = {
            "status": "not_colourable",
            "colouring": None,
            "odd_cycle": list(result.odd_cycle),
        }
        if result.reason is not None:
            doc["reason"] = result.reason
    return json.dumps(doc, indent=2)


def result_from_json(text: str) -> RecognitionResult:
    doc = json.loads(text)
    if not isinstance(doc, dict) or "status" not in doc:
        raise ValueError("recognition result must be an object with a status")
    status = doc["status"]
    if status == "colourable":
        cols = doc.get("colouring")
        if not isinstance(cols, list) or any(c not in (1, 2) for c in cols):
            raise ValueError("colourable result needs a list of colours 1/2")
        return Colourable(EdgeColouring(tuple(cols)))
    if status == "not_colourable":
        cyc = doc.get("odd_cycle")
        if not isinstance(cyc, list) or any(not isinstance(e, int) for e in cyc):
            raise ValueError("not_colourable result needs an odd_cycle list")
        reason = doc.get("reason")
        return NotColourable(tuple(cyc), reason if isinstance(reason, str) else None)
    raise ValueError(f"unknown status {status!r}")
