"""Kaleidoscope certificates for graphs with no locally complete 2-edge-colouring.

A kaleidoscope of order ``k >= 2`` in a host graph consists of anchor
vertices ``v_0, ..., v_{k-1}`` (not necessarily distinct) together with
walks ``W_0, ..., W_{k-1}``, where ``W_i`` leads from ``v_i`` to
``v_{(i+2) mod k}``, stays clear of ``v_{(i+1) mod k}`` and of every
neighbour of ``v_{(i+1) mod k}``, and the walk lengths sum to an odd
number.  A graph admits a locally complete 2-edge-colouring exactly when
its complement hosts no kaleidoscope, so a kaleidoscope in
``complement(g)`` is a compact, independently checkable witness of
non-colourability.

``extract_kaleidoscope`` turns an odd cycle of the auxiliary graph into
such a witness; ``verify_kaleidoscope`` checks one against a host graph
without trusting how it was produced.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graphs import Graph, complement, content_hash
from .recognize import AuxGraph, build_aux, _canonical_cycle


@dataclass(frozen=True)
class Kaleidoscope:
    """A kaleidoscope witness, pinned to its host by edge count and hash.

    ``walks[i]`` is a vertex sequence starting at ``anchors[i]`` and ending
    at ``anchors[(i + 2) % k]``; its length is ``len(walks[i]) - 1`` and may
    be zero.  ``host_m`` and ``host_hash`` identify the graph the witness
    was built for, so verification cannot silently run against the wrong
    host.
    """

    k: int
    anchors: tuple[int, ...]
    walks: tuple[tuple[int, ...], ...]
    host_m: int
    host_hash: str

    @property
    def total_length(self) -> int:
        return sum(len(w) - 1 for w in self.walks)


def make_kaleidoscope(h: Graph, anchors, walks) -> Kaleidoscope:
    """Bundle anchors and walks into a certificate bound to host ``h``."""
    anchors = tuple(anchors)
    walks = tuple(tuple(w) for w in walks)
    return Kaleidoscope(
        k=len(anchors),
        anchors=anchors,
        walks=walks,
        host_m=h.m,
        host_hash=content_hash(h),
    )


def verify_kaleidoscope(h: Graph, kal: Kaleidoscope) -> tuple[bool, str | None]:
    """Check a kaleidoscope against host ``h``.

    Returns ``(True, None)`` when the certificate is valid, otherwise
    ``(False, reason)`` where the reason names the first failing walk or
    step.  Vertices outside ``h``'s range raise ``IndexError``; everything
    else, including a host mismatch, is reported as a verification
    failure rather than an exception.
    """
    if kal.host_m != h.m or kal.host_hash != content_hash(h):
        return False, "host mismatch: certificate was built for a different graph"
    k = kal.k
    if k < 2:
        return False, f"order {k} is below the minimum of 2"
    if len(kal.anchors) != k or len(kal.walks) != k:
        return False, "anchor or walk count does not match the order"
    for v in kal.anchors:
        if not 0 <= v < h.n:
            raise IndexError(f"anchor {v} out of range for a {h.n}-vertex host")
    for i, walk in enumerate(kal.walks):
        if not walk:
            return False, f"walk {i} is empty"
        for v in walk:
            if not 0 <= v < h.n:
                raise IndexError(f"walk {i} visits {v}, out of range")
    for i, walk in enumerate(kal.walks):
        if walk[0] != kal.anchors[i]:
            return False, f"walk {i} does not start at anchor {i}"
        if walk[-1] != kal.anchors[(i + 2) % k]:
            return False, f"walk {i} does not end at anchor {(i + 2) % k}"
        for step, (u, v) in enumerate(zip(walk, walk[1:])):
            if not h.has_edge(u, v):
                return False, f"walk {i} step {step}: {u}-{v} is not a host edge"
        avoided = kal.anchors[(i + 1) % k]
        for v in walk:
            if v == avoided:
                return False, f"walk {i} visits anchor {(i + 1) % k}, which it must avoid"
            if h.has_edge(v, avoided):
                return False, (
                    f"walk {i} visits {v}, a neighbour of anchor {(i + 1) % k}"
                )
    if kal.total_length % 2 == 0:
        return False, f"total walk length {kal.total_length} is even"
    return True, None


def _opp(edge: tuple[int, int], v: int) -> int:
    """The endpoint of ``edge`` other than ``v``."""
    a, b = edge
    return b if a == v else a


def _check_odd_cycle(aux: AuxGraph, cycle) -> None:
    n = aux.node_count
    if len(cycle) < 3 or len(cycle) % 2 == 0:
        raise ValueError("input is not an odd cycle in the auxiliary graph")
    if len(set(cycle)) != len(cycle):
        raise ValueError("input is not an odd cycle in the auxiliary graph")
    for e in cycle:
        if not 0 <= e < n:
            raise ValueError("input is not an odd cycle in the auxiliary graph")
    for t in range(len(cycle)):
        if cycle[(t + 1) % len(cycle)] not in aux.adj[cycle[t]]:
            raise ValueError("input is not an odd cycle in the auxiliary graph")


def _induced_odd_cycle(h: Graph, walk: tuple[int, ...]) -> tuple[int, ...]:
    """Extract an induced odd cycle from a closed odd walk in ``h``.

    Repeated vertices are split off first, then chords, always taking the
    smallest position pair, and recursing on whichever part has odd length
    (exactly one does, since the two parts' lengths sum to an odd number,
    possibly plus two).  The result is rotated to a canonical start.
    """
    w = list(walk)
    while True:
        length = len(w)
        cut = None
        for i in range(length):
            for j in range(i + 1, length):
                if w[i] == w[j]:
                    cut = ("repeat", i, j)
                    break
                consecutive = j == i + 1 or (i == 0 and j == length - 1)
                if not consecutive and h.has_edge(w[i], w[j]):
                    cut = ("chord", i, j)
                    break
            if cut is not None:
                break
        if cut is None:
            break
        kind, i, j = cut
        if kind == "repeat":
            part_a = w[i:j]
            part_b = w[j:] + w[:i]
        else:
            part_a = w[i : j + 1]
            part_b = w[j:] + w[: i + 1]
        w = part_a if len(part_a) % 2 == 1 else part_b
    if len(w) < 3:
        raise AssertionError("odd closed walk collapsed below a triangle")
    return _canonical_cycle(tuple(w))


def _cycle_kaleidoscope(h: Graph, cyc: tuple[int, ...]) -> Kaleidoscope:
    """The standard kaleidoscope carried by a chordless odd cycle of length >= 5.

    For a cycle ``c_0 .. c_{2q}`` the anchors step through the cycle in
    increments of ``q``; each walk is the single cycle edge from ``c_{jq}``
    back to ``c_{jq-1}``, which lands on the anchor two places along and
    keeps clear of the anchor in between.
    """
    k = len(cyc)
    q = (k - 1) // 2
    anchors = tuple(cyc[(j * q) % k] for j in range(k))
    walks = tuple((cyc[(j * q) % k], cyc[(j * q - 1) % k]) for j in range(k))
    return make_kaleidoscope(h, anchors, walks)


def extract_kaleidoscope(g: Graph, odd_cycle, aux: AuxGraph | None = None) -> Kaleidoscope:
    """Turn an odd cycle of ``build_aux(g)`` into a kaleidoscope in ``complement(g)``.

    The cycle's nodes are edge ids of ``g``.  When all cycle edges share a
    single endpoint ``u``, the opposite endpoints trace a closed odd walk
    in the complement; an induced odd cycle extracted from that walk
    yields either the order-2 witness on ``u`` plus a triangle or the
    standard witness on a chordless odd cycle.  Otherwise the cycle is
    split at its distinguished edges (those whose shared endpoint with the
    previous edge differs from the one with the next), each segment's
    opposite endpoints form one walk, and the walks are rotated by one so
    that each runs between the right pair of anchors.

    Raises ``ValueError`` if the input is not an odd cycle in the
    auxiliary graph.
    """
    if aux is None:
        aux = build_aux(g)
    cycle = tuple(odd_cycle)
    _check_odd_cycle(aux, cycle)
    h = complement(g)
    length = len(cycle)
    edges = [g.edges[e] for e in cycle]
    shared = []
    for t in range(length):
        common = set(edges[t]) & set(edges[(t + 1) % length])
        shared.append(next(iter(common)))
    distinguished = [t for t in range(length) if shared[t - 1] != shared[t]]

    if not distinguished:
        u = shared[0]
        closed_walk = tuple(_opp(edges[t], u) for t in range(length))
        cyc = _induced_odd_cycle(h, closed_walk)
        if len(cyc) == 3:
            x, y, z = cyc
            return make_kaleidoscope(h, (u, x), ((u,), (x, y, z, x)))
        return _cycle_kaleidoscope(h, cyc)

    k = len(distinguished)
    anchors = tuple(shared[t] for t in distinguished)
    segment_walks = []
    for j in range(k):
        start = distinguished[j]
        stop = distinguished[(j + 1) % k]
        if stop <= start:
            stop += length
        a = anchors[j]
        segment_walks.append(tuple(_opp(edges[t % length], a) for t in range(start, stop + 1)))
    # Segment j runs from the previous anchor to the next one while avoiding
    # its own, so the walk attached to anchor m is segment m + 1.
    walks = tuple(segment_walks[(m + 1) % k] for m in range(k))
    return make_kaleidoscope(h, anchors, walks)


def order2_to_subgraph(h: Graph, kal: Kaleidoscope) -> tuple[int, ...]:
    """Collapse an order-2 kaleidoscope to a concrete induced subgraph of ``h``.

    Exactly one of the two walks has odd length and is a closed odd walk;
    an induced odd cycle extracted from it either has length at least 5
    (and is returned as-is) or is a triangle whose vertices, together with
    the anchor the walk avoids, induce a one-vertex-plus-triangle
    subgraph.  Returns the vertex set sorted ascending.

    Raises ``ValueError`` if the certificate fails verification or has
    order other than 2.
    """
    ok, reason = verify_kaleidoscope(h, kal)
    if not ok:
        raise ValueError(f"certificate does not verify: {reason}")
    if kal.k != 2:
        raise ValueError(f"expected order 2, got {kal.k}")
    odd_index = 0 if (len(kal.walks[0]) - 1) % 2 == 1 else 1
    walk = kal.walks[odd_index]
    # The walk is closed: it runs from its anchor back to the same anchor.
    cyc = _induced_odd_cycle(h, walk[:-1])
    if len(cyc) >= 5:
        return tuple(sorted(cyc))
    isolated = kal.anchors[(odd_index + 1) % 2]
    return tuple(sorted((isolated,) + cyc))


def kaleidoscope_to_json(kal: Kaleidoscope) -> str:
    return json.dumps(
        {
            "k": kal.k,
            "anchors": list(kal.anchors),
            "walks": [list(w) for w in kal.walks],
            "host_m": kal.host_m,
            "host_hash": kal.host_hash,
        },
        indent=2,
    )


def kaleidoscope_from_json(text: str) -> Kaleidoscope:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError("expected a JSON object")
    for key in ("k", "anchors", "walks", "host_m", "host_hash"):
        if key not in data:
            raise ValueError(f"missing key {key!r}")
    k = data["k"]
    anchors = data["anchors"]
    walks = data["walks"]
    if not isinstance(k, int) or not isinstance(anchors, list) or not isinstance(walks, list):
        raise ValueError("malformed certificate fields")
    if not all(isinstance(v, int) for v in anchors):
        raise ValueError("anchors must be integers")
    if not all(isinstance(w, list) and all(isinstance(v, int) for v in w) for w in walks):
        raise ValueError("walks must be lists of integers")
    if not isinstance(data["host_m"], int) or not isinstance(data["host_hash"], str):
        raise ValueError("malformed host binding")
    return Kaleidoscope(
        k=k,
        anchors=tuple(anchors),
        walks=tuple(tuple(w) for w in walks),
        host_m=data["host_m"],
        host_hash=data["host_hash"],
    )
