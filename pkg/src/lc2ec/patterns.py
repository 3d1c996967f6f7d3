"""Fixed forbidden graphs, parameterized families, and induced-subgraph search.

The catalogue holds the small graphs the theory keeps returning to: the
claw, a triangle plus an isolated vertex, the three minimal
non-colourable proper interval graphs ``f1``/``f2``/``f3``, the tent,
and five sporadic graphs stored exactly as drawn (``sporadic-1`` through
``sporadic-5``; ``sporadic-2`` is the tent again).  The sporadic edge
lists are authoritative; their conventional names are not relied on
anywhere.

``find_induced`` is a small backtracking matcher for induced embeddings.
``non_pca_witness`` explains why a colourable graph fails to be a proper
circular-arc graph, returning an even cycle plus an avoiding vertex, an
even antihole, or the complement of one of ``sporadic-2``..``sporadic-5``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graphs import Graph, complement, induced


@dataclass(frozen=True)
class Pattern:
    """A named graph to search for; ``k`` records the family parameter
    when the pattern was built from a parameterized family."""

    name: str
    graph: Graph
    k: int | None = None


@dataclass(frozen=True)
class Occurrence:
    """An induced embedding: pattern vertex ``i`` sits on ``vmap[i]``."""

    pattern: str
    k: int | None
    vmap: tuple[int, ...]


def _pat(name: str, n: int, edges) -> Pattern:
    return Pattern(name=name, graph=Graph(n, edges))


_PATH7 = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]

CLAW = _pat("claw", 4, [(0, 1), (0, 2), (0, 3)])
K1_PLUS_K3 = _pat("k1+k3", 4, [(1, 2), (1, 3), (2, 3)])
F1 = _pat("f1", 7, _PATH7 + [(1, 3), (2, 4), (3, 5)])
F2 = _pat("f2", 7, _PATH7 + [(0, 2), (1, 3), (2, 4), (3, 5), (4, 6)])
F3 = _pat("f3", 7, _PATH7 + [(0, 2), (1, 3), (2, 4), (3, 5), (4, 6), (1, 4), (2, 5)])
TENT = _pat(
    "tent",
    6,
    [(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 4), (2, 5), (3, 4), (4, 5)],
)

# The five sporadic graphs, transcribed edge by edge from their drawings.
SPORADIC = (
    _pat(
        "sporadic-1",
        7,
        [(1, 6), (4, 6), (1, 4), (1, 2), (2, 5), (4, 5), (3, 4), (0, 3), (0, 1)],
    ),
    Pattern(name="sporadic-2", graph=TENT.graph),
    _pat(
        "sporadic-3",
        7,
        [(0, 2), (2, 5), (5, 6), (3, 6), (2, 3), (1, 2), (1, 4), (4, 5)],
    ),
    _pat(
        "sporadic-4",
        7,
        [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (5, 6), (3, 5)],
    ),
    _pat(
        "sporadic-5",
        7,
        [(0, 1), (1, 2), (2, 3), (3, 4), (5, 6), (2, 5)],
    ),
)


def catalogue() -> list[Pattern]:
    """All fixed patterns; parameterized families come from the
    constructors below."""
    return [CLAW, K1_PLUS_K3, F1, F2, F3, TENT, *SPORADIC]


def cycle_pattern(k: int) -> Pattern:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    edges = [(i, (i + 1) % k) for i in range(k)]
    return Pattern(name=f"c{k}", graph=Graph(k, edges), k=k)


def cycle_plus_isolated(k: int) -> Pattern:
    """The cycle ``C_k`` together with one vertex adjacent to nothing."""
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    edges = [(i, (i + 1) % k) for i in range(k)]
    return Pattern(name=f"c{k}+k1", graph=Graph(k + 1, edges), k=k)


def antihole_pattern(length: int) -> Pattern:
    """The complement of a chordless cycle of the given length."""
    if length < 5:
        raise ValueError("antiholes start at length 5")
    return Pattern(
        name=f"anti-c{length}",
        graph=complement(cycle_pattern(length).graph),
        k=length,
    )


def complement_of(p: Pattern) -> Pattern:
    return Pattern(name=f"co-{p.name}", graph=complement(p.graph), k=p.k)


def pattern_by_name(name: str) -> Pattern:
    """Resolve a pattern name, including family names like ``c7+k1``,
    ``anti-c6`` and ``co-tent``.  Raises ``KeyError`` for unknown names."""
    fixed = {p.name: p for p in catalogue()}
    if name in fixed:
        return fixed[name]
    if name.startswith("co-"):
        return complement_of(pattern_by_name(name[3:]))
    if name.startswith("anti-c"):
        return antihole_pattern(int(name[6:]))
    if name.startswith("c") and name.endswith("+k1"):
        return cycle_plus_isolated(int(name[1:-3]))
    if name.startswith("c") and name[1:].isdigit():
        return cycle_pattern(int(name[1:]))
    raise KeyError(f"unknown pattern {name!r}")


def verify_occurrence(host: Graph, occ: Occurrence) -> bool:
    """Re-validate an occurrence from scratch: the map must be injective
    and preserve both adjacency and non-adjacency."""
    try:
        pattern = pattern_by_name(occ.pattern)
    except (KeyError, ValueError):
        return False
    pg = pattern.graph
    if len(occ.vmap) != pg.n:
        return False
    if len(set(occ.vmap)) != pg.n:
        return False
    if any(not 0 <= v < host.n for v in occ.vmap):
        return False
    for i in range(pg.n):
        for j in range(i + 1, pg.n):
            if pg.has_edge(i, j) != host.has_edge(occ.vmap[i], occ.vmap[j]):
                return False
    return True


def find_induced(host: Graph, pattern: Pattern) -> Occurrence | None:
    """Backtracking search for an induced embedding of the pattern.

    Pattern vertices are matched most-constrained first (most already
    placed neighbours, then highest degree); host candidates are pruned
    by degree and checked against every placed vertex for both adjacency
    and non-adjacency.
    """
    pg = pattern.graph
    if pg.n > host.n:
        return None
    remaining = set(range(pg.n))
    first = max(remaining, key=lambda v: (len(pg.adj[v]), -v))
    sequence = [first]
    remaining.remove(first)
    while remaining:
        nxt = max(
            remaining,
            key=lambda v: (
                sum(1 for w in pg.adj[v] if w in sequence),
                len(pg.adj[v]),
                -v,
            ),
        )
        sequence.append(nxt)
        remaining.remove(nxt)

    assigned: dict[int, int] = {}
    used = [False] * host.n

    def backtrack(idx: int) -> bool:
        if idx == len(sequence):
            return True
        pv = sequence[idx]
        for hv in range(host.n):
            if used[hv] or len(host.adj[hv]) < len(pg.adj[pv]):
                continue
            ok = True
            for pw, hw in assigned.items():
                if (pw in pg.adj[pv]) != (hw in host.adj[hv]):
                    ok = False
                    break
            if not ok:
                continue
            assigned[pv] = hv
            used[hv] = True
            if backtrack(idx + 1):
                return True
            del assigned[pv]
            used[hv] = False
        return False

    if not backtrack(0):
        return None
    vmap = tuple(assigned[i] for i in range(pg.n))
    return Occurrence(pattern=pattern.name, k=pattern.k, vmap=vmap)


def find_induced_cycle(g: Graph, min_len: int = 3, parity: int | None = None) -> tuple[int, ...] | None:
    """First chordless cycle meeting the length and parity filters.

    Cycles are enumerated as induced paths grown from their smallest
    vertex; a neighbour of the start closes a candidate and is never
    extended past, since it would leave a chord.  ``parity`` is the
    required value of ``length % 2``, or ``None`` for either.
    """
    n = g.n

    def dfs(start: int, path: list[int], on_path: set[int]) -> tuple[int, ...] | None:
        last = path[-1]
        for w in sorted(g.adj[last]):
            if w <= start or w in on_path:
                continue
            if any(g.has_edge(w, u) for u in path[1:-1]):
                continue
            if len(path) >= 2 and g.has_edge(w, start):
                length = len(path) + 1
                if length >= min_len and (parity is None or length % 2 == parity):
                    if path[1] < w:
                        return tuple(path) + (w,)
                continue
            path.append(w)
            on_path.add(w)
            found = dfs(start, path, on_path)
            path.pop()
            on_path.remove(w)
            if found:
                return found
        return None

    for start in range(n):
        found = dfs(start, [start], {start})
        if found:
            return found
    return None


def non_pca_witness(g: Graph) -> Occurrence | None:
    """Why a colourable graph is not a proper circular-arc graph.

    Searches, in order: an even chordless cycle of length at least 4
    avoiding some vertex's closed neighbourhood; an even antihole of
    length at least 6; the complement of one of the sporadic graphs
    ``sporadic-2`` through ``sporadic-5``.  Returns ``None`` when none of
    these occurs, which for colourable inputs means the graph is a
    proper circular-arc graph.
    """
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v and not g.has_edge(u, v)]
        if len(rest) < 4:
            continue
        sub, vmap = induced(g, rest)
        cyc = find_induced_cycle(sub, min_len=4, parity=0)
        if cyc is not None:
            hosts = tuple(vmap[c] for c in cyc) + (v,)
            return Occurrence(pattern=f"c{len(cyc)}+k1", k=len(cyc), vmap=hosts)
    co = complement(g)
    cyc = find_induced_cycle(co, min_len=6, parity=0)
    if cyc is not None:
        return Occurrence(pattern=f"anti-c{len(cyc)}", k=len(cyc), vmap=tuple(cyc))
    for p in SPORADIC[1:]:
        occ = find_induced(g, complement_of(p))
        if occ is not None:
            return occ
    return None


def occurrence_to_json(occ: Occurrence) -> str:
    return json.dumps({"pattern": occ.pattern, "k": occ.k, "map": list(occ.vmap)})


def occurrence_from_json(text: str) -> Occurrence:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError("expected a JSON object")
    for key in ("pattern", "k", "map"):
        if key not in data:
            raise ValueError(f"missing key {key!r}")
    if not isinstance(data["map"], list) or not all(isinstance(v, int) for v in data["map"]):
        raise ValueError("map must be a list of integers")
    return Occurrence(pattern=data["pattern"], k=data["k"], vmap=tuple(data["map"]))
