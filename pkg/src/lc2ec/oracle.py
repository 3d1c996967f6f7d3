"""Ground truth and corpora: brute force and seeded instance generators.

The brute-force routines work straight from definitions and never call
the algorithms they are meant to check: colouring enumeration derives
its constraints from per-vertex neighbourhood adjacency, and the
ordering searches try every permutation behind the independent
verifiers.  Generators produce graphs with known witnesses (a straight
or round ordering, or a bipartition) so acceptance tests can compare
what the library finds against what was planted.

Randomness comes from ``random.Random`` (the Mersenne Twister), seeded
per instance, so every corpus is reproducible from its manifest.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field

import numpy as np

from .graphs import Graph, serialize_graph
from .orderings import (
    RoundOrdering,
    StraightOrdering,
    round_from_order,
    straight_from_order,
)
from .patterns import pattern_by_name
from .recognize import EdgeColouring


@dataclass(frozen=True)
class GeneratorSpec:
    """One reproducible instance: family, size, density knob, seed.

    ``name`` selects the graph for the ``paper-instance`` family and is
    ignored elsewhere.  ``shuffle`` relabels the vertices (witnesses are
    remapped to match), so structure is never tied to label order.
    """

    family: str
    n: int = 0
    density: float = 0.5
    seed: int = 0
    name: str = ""
    shuffle: bool = True


@dataclass(frozen=True)
class GeneratedInstance:
    graph: Graph
    spec: GeneratorSpec
    straight_witness: StraightOrdering | None = None
    round_witness: RoundOrdering | None = None
    bipartition: tuple[tuple[int, ...], tuple[int, ...]] | None = None


def _definition_constraints(g: Graph) -> list[tuple[int, int]]:
    """Pairs of edge ids that must receive different colours, derived
    directly from the definition: two edges at a shared vertex whose far
    endpoints are non-adjacent cannot share a colour."""
    at_vertex: list[list[int]] = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        at_vertex[u].append(e)
        at_vertex[v].append(e)
    pairs = []
    for v in range(g.n):
        incident = at_vertex[v]
        for a in range(len(incident)):
            for b in range(a + 1, len(incident)):
                e, f = incident[a], incident[b]
                x = g.edges[e][0] if g.edges[e][1] == v else g.edges[e][1]
                y = g.edges[f][0] if g.edges[f][1] == v else g.edges[f][1]
                if not g.has_edge(x, y):
                    pairs.append((e, f))
    return pairs


def brute_force_colourings(g: Graph, cap: int = 64) -> tuple[list[EdgeColouring], int]:
    """All locally complete 2-edge-colourings (up to ``cap``) plus the
    exact count.

    Enumerates the ``2^(m-1)`` assignments with the first edge fixed to
    colour 1; every valid assignment and its colour-switch are counted,
    so the total is exact.  Raises ``ValueError`` above 20 edges.
    """
    m = g.m
    if m > 20:
        raise ValueError(f"too many edges for enumeration: {m} > 20")
    if m == 0:
        return ([EdgeColouring(colour=())] if cap > 0 else []), 1
    idx = np.arange(1 << (m - 1), dtype=np.uint32)
    valid = np.ones(idx.shape, dtype=bool)

    def bits(e: int) -> np.ndarray:
        if e == 0:
            return np.zeros(idx.shape, dtype=np.uint32)
        return (idx >> np.uint32(e - 1)) & np.uint32(1)

    for e, f in _definition_constraints(g):
        valid &= bits(e) != bits(f)
    hits = np.nonzero(valid)[0]
    count = 2 * int(hits.size)
    out: list[EdgeColouring] = []
    for h in hits[: (cap + 1) // 2]:
        base = tuple(1 if (int(h) >> (e - 1)) & 1 == 0 else 2 for e in range(1, m))
        first = EdgeColouring(colour=(1,) + base)
        out.append(first)
        if len(out) < cap:
            out.append(EdgeColouring(colour=tuple(3 - c for c in first.colour)))
    return out[:cap], count


def brute_force_straight(g: Graph) -> StraightOrdering | None:
    """First verified straight ordering in lexicographic permutation
    order, or ``None``.  Limited to 8 vertices."""
    if g.n > 8:
        raise ValueError(f"too many vertices for exhaustion: {g.n} > 8")
    for perm in itertools.permutations(range(g.n)):
        o = straight_from_order(g, perm)
        if o is not None:
            return o
    return None


def brute_force_round(g: Graph) -> RoundOrdering | None:
    """First verified round ordering with vertex 0 at position 0, in
    lexicographic order over the remaining positions.  Limited to 8
    vertices; rotations are the only symmetry quotiented out."""
    if g.n > 8:
        raise ValueError(f"too many vertices for exhaustion: {g.n} > 8")
    if g.n == 1:
        return round_from_order(g, (0,))
    for perm in itertools.permutations(range(1, g.n)):
        o = round_from_order(g, (0,) + perm)
        if o is not None:
            return o
    return None


def staircase_graph(r) -> Graph:
    """Graph of a non-decreasing reach vector.

    ``r`` is 1-based: vertex ``i`` (1-based) is adjacent to every ``j``
    with ``i < j <= r[i]``.  With ``r[i] >= i + 1`` the identity order is
    a straight ordering and the graph is connected.
    """
    r = tuple(r)
    n = len(r) + 1
    edges = []
    for i in range(1, n):
        reach = r[i - 1]
        if reach < i or reach > n:
            raise ValueError(f"reach {reach} at vertex {i} is out of range")
        if i >= 2 and reach < r[i - 2]:
            raise ValueError("reach vector must be non-decreasing")
        for j in range(i + 1, reach + 1):
            edges.append((i - 1, j - 1))
    return Graph(n, edges)


def _shuffled(g: Graph, rnd: random.Random) -> tuple[Graph, list[int]]:
    """Relabel by a random permutation; returns the new graph and the map
    old vertex -> new label."""
    perm = list(range(g.n))
    rnd.shuffle(perm)
    edges = [(perm[u], perm[v]) for u, v in g.edges]
    return Graph(g.n, edges), perm


def generate(spec: GeneratorSpec) -> GeneratedInstance:
    """Build the graph (and witness) a spec describes.

    Deterministic: the same spec always yields the same instance.
    Raises ``ValueError`` for unknown families or bad parameters.
    """
    rnd = random.Random(spec.seed)
    if spec.family == "gnp":
        if spec.n < 0:
            raise ValueError("n must be non-negative")
        edges = [
            (u, v)
            for u, v in itertools.combinations(range(spec.n), 2)
            if rnd.random() < spec.density
        ]
        return GeneratedInstance(graph=Graph(spec.n, edges), spec=spec)

    if spec.family == "staircase-pig":
        if spec.n < 1:
            raise ValueError("n must be at least 1")
        n = spec.n
        r = []
        prev = 1
        for i in range(1, n):
            reach = max(prev, i + 1)
            while reach < n and rnd.random() < spec.density:
                reach += 1
            r.append(reach)
            prev = reach
        g = staircase_graph(r) if n > 1 else Graph(1, [])
        witness = straight_from_order(g, range(n))
        if witness is None:
            raise AssertionError("staircase construction lost its ordering")
        if spec.shuffle:
            g, perm = _shuffled(g, rnd)
            witness = straight_from_order(g, perm)
            if witness is None:
                raise AssertionError("shuffle broke the planted ordering")
        return GeneratedInstance(graph=g, spec=spec, straight_witness=witness)

    if spec.family == "circular-arc-pca":
        if spec.n < 1:
            raise ValueError("n must be at least 1")
        n = spec.n
        # Equal-length arcs centred on random points: two arcs of length s
        # meet exactly when their centres sit closer than s on the circle,
        # and that distance is uniform on [0, 1/2], so s = density/2 makes
        # the requested density the expected edge probability.
        span = min(max(spec.density, 0.05), 0.95) / 2.0
        starts = sorted((rnd.random(), i) for i in range(n))
        angle = {i: a for a, i in starts}
        edges = []
        for u, v in itertools.combinations(range(n), 2):
            gap = abs(angle[u] - angle[v])
            if min(gap, 1 - gap) < span:
                edges.append((u, v))
        g = Graph(n, edges)
        by_angle = [i for _, i in starts]
        witness = round_from_order(g, by_angle)
        if spec.shuffle:
            g, perm = _shuffled(g, rnd)
            if witness is not None:
                witness = round_from_order(g, [perm[v] for v in by_angle])
        return GeneratedInstance(graph=g, spec=spec, round_witness=witness)

    if spec.family == "bipartite-complement":
        if spec.n < 1:
            raise ValueError("n must be at least 1")
        n = spec.n
        a = n // 2
        side_x = list(range(a))
        side_y = list(range(a, n))
        crossing = {
            (x, y)
            for x in side_x
            for y in side_y
            if rnd.random() < spec.density
        }
        edges = [e for e in itertools.combinations(range(n), 2) if e not in crossing]
        g = Graph(n, edges)
        if spec.shuffle:
            g, perm = _shuffled(g, rnd)
            side_x = sorted(perm[v] for v in side_x)
            side_y = sorted(perm[v] for v in side_y)
        return GeneratedInstance(
            graph=g,
            spec=spec,
            bipartition=(tuple(side_x), tuple(side_y)),
        )

    if spec.family == "paper-instance":
        try:
            g = pattern_by_name(spec.name).graph
        except KeyError as exc:
            raise ValueError(str(exc)) from exc
        if spec.shuffle:
            g, _ = _shuffled(g, rnd)
        return GeneratedInstance(graph=g, spec=spec)

    raise ValueError(f"unknown family {spec.family!r}")


def spec_to_json(spec: GeneratorSpec) -> str:
    return json.dumps(
        {
            "family": spec.family,
            "n": spec.n,
            "density": spec.density,
            "seed": spec.seed,
            "name": spec.name,
            "shuffle": spec.shuffle,
        }
    )


def spec_from_json(text: str) -> GeneratorSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or "family" not in data:
        raise ValueError("expected an object with a family tag")
    return GeneratorSpec(
        family=data["family"],
        n=int(data.get("n", 0)),
        density=float(data.get("density", 0.5)),
        seed=int(data.get("seed", 0)),
        name=str(data.get("name", "")),
        shuffle=bool(data.get("shuffle", True)),
    )


def parse_manifest(text: str) -> list[GeneratorSpec]:
    """One spec per non-blank line."""
    specs = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        specs.append(spec_from_json(line))
    return specs


def _all_graphs(n: int):
    """Every labelled graph on ``n`` vertices, for exhaustive sweeps."""
    slots = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(slots)):
        yield Graph(n, [e for b, e in enumerate(slots) if mask >> b & 1])


def _check_one(g: Graph, label: str, issues: list[dict]) -> dict:
    from .kaleidoscope import extract_kaleidoscope, verify_kaleidoscope
    from .recognize import (
        Colourable,
        count_colourings,
        recognize,
        verify_locally_complete,
    )
    from .structure import structural_recognize
    from .graphs import complement

    verdict: dict = {"instance": label, "n": g.n, "m": g.m}

    def fail(what: str) -> None:
        issues.append({"instance": label, "issue": what, "graph": serialize_graph(g)})

    aux_result = recognize(g)
    aux_yes = isinstance(aux_result, Colourable)
    verdict["aux"] = aux_yes
    if aux_yes:
        ok, _ = verify_locally_complete(g, aux_result.colouring)
        if not ok:
            fail("aux colouring failed verification")
    else:
        kal = extract_kaleidoscope(g, aux_result.odd_cycle)
        ok, why = verify_kaleidoscope(complement(g), kal)
        if not ok:
            fail(f"kaleidoscope failed verification: {why}")

    structural = structural_recognize(g)
    verdict["structural"] = structural.colourable
    if structural.colourable != aux_yes:
        fail("structural and auxiliary decisions disagree")
    if structural.colourable and structural.colouring is not None:
        ok, _ = verify_locally_complete(g, structural.colouring)
        if not ok:
            fail("structural colouring failed verification")

    if g.m <= 16:
        _, brute = brute_force_colourings(g, cap=0)
        verdict["count"] = brute
        if brute != count_colourings(g):
            fail("colouring count disagrees with brute force")
        if (brute > 0) != aux_yes:
            fail("decision disagrees with brute force")
    return verdict


def equivalence_harness(corpus: list[GeneratorSpec]) -> dict:
    """Run every instance through the recognizers, the verifiers, and
    (when small enough) the brute force; disagreements are returned as
    data, one record per failure, with the serialized graph attached.

    A spec with family ``exhaustive`` expands to all labelled graphs on
    ``n`` vertices (capped at 6).
    """
    issues: list[dict] = []
    results: list[dict] = []
    total = 0
    for spec in corpus:
        if spec.family == "exhaustive":
            if spec.n > 6:
                raise ValueError("exhaustive sweeps are capped at n = 6")
            for idx, g in enumerate(_all_graphs(spec.n)):
                results.append(_check_one(g, f"exhaustive-n{spec.n}-{idx}", issues))
                total += 1
            continue
        inst = generate(spec)
        results.append(_check_one(inst.graph, spec_to_json(spec), issues))
        total += 1
    return {
        "instances": total,
        "disagreements": issues,
        "ok": not issues,
        "results": results,
    }
