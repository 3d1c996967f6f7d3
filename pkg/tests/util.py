"""Shared helpers for the test suite: tiny named graphs and staircase
templates with a prescribed boundary pattern."""

from __future__ import annotations

import itertools
import random

from lc2ec.graphs import Graph
from lc2ec.oracle import staircase_graph


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, list(itertools.combinations(range(n), 2)))


def random_graph(n: int, p: float, seed: int) -> Graph:
    rnd = random.Random(seed)
    edges = [e for e in itertools.combinations(range(n), 2) if rnd.random() < p]
    return Graph(n, edges)


def all_graphs(n: int):
    """Every labelled graph on n vertices."""
    slots = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(slots)):
        yield Graph(n, [e for b, e in enumerate(slots) if mask >> b & 1])


_OVERLAPS = {
    # whether each of the k-1 clique boundaries overlaps (shares a vertex)
    "Type1": lambda k: [j in (0, k - 2) for j in range(k - 1)],
    "Type2": lambda k: [j == 0 for j in range(k - 1)],
    "Type3": lambda k: [j == k - 2 for j in range(k - 1)],
    "Type4": lambda k: [False] * (k - 1),
}


def typed_template(kind: str, k: int) -> Graph:
    """A reduced 2-connected staircase whose canonical cover has k cliques
    and the boundary pattern of the requested type.

    End cliques get 3 vertices and middle cliques 4, which is just enough
    room for the interior reach condition that separates the types from
    the untyped case.  Type2 and Type3 need k >= 3 to be distinguishable
    from Type1.
    """
    if kind not in _OVERLAPS:
        raise ValueError(f"unknown kind {kind!r}")
    if k < 2 or (k == 2 and kind in ("Type2", "Type3")):
        raise ValueError(f"{kind} needs more cliques than {k}")
    overlap = _OVERLAPS[kind](k)
    spans: list[tuple[int, int]] = []
    for j in range(k):
        size = 3 if j in (0, k - 1) else 4
        s = 1 if j == 0 else spans[-1][1] + (0 if overlap[j - 1] else 1)
        spans.append((s, s + size - 1))
    n = spans[-1][1]
    reach = [0] * (n + 1)  # 1-based positions
    for s, t in spans:
        for v in range(s, t + 1):
            reach[v] = max(reach[v], t)
    for j, (s, t) in enumerate(spans[:-1]):
        # one edge over each boundary keeps the graph 2-connected, and the
        # second one pins the left end of the next clique where the type
        # classification expects it
        reach[t - 1] = max(reach[t - 1], t + 1)
        reach[t] = max(reach[t], t + 2)
    for v in range(1, n + 1):
        reach[v] = min(reach[v], n)
    for v in range(2, n + 1):
        reach[v] = max(reach[v], reach[v - 1])
    return staircase_graph(reach[1:n])
